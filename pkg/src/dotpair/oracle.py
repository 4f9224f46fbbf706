"""Closed-form references and physical-unit conversions.

Everything here is deliberately independent of the model/dynamics modules:
the population generator is transcribed directly from the printed
equations of motion, the no-drive solution is the published closed form,
and the strong-phonon limits are simple algebra.  The test suite uses
these as oracles against the numerical machinery (and vice versa).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .model import SystemParams

__all__ = [
    "HBAR", "KB", "EPS0",
    "PhysicalParams", "NoDriveSolutionParams", "no_drive_solution_params",
    "analytic_populations", "matexp_populations", "population_generator",
    "strong_phonon_limits",
    "phonon_rate", "mean_phonon_number", "dipole_dipole_shift",
    "spontaneous_rate",
]

# CODATA 2018, pinned locally so unit conversions are bit-reproducible.
HBAR = 1.054571817e-34   # J s
KB = 1.380649e-23        # J / K
EPS0 = 8.8541878128e-12  # F / m


@dataclass(frozen=True)
class PhysicalParams:
    """SI-unit inputs for the rate conversions.

    A        : phonon coupling coefficient, s/K
    omega_c  : phonon cutoff frequency, Hz
    T        : bath temperature, K
    zeta     : angle between the dipoles and the separation axis, rad
    kr       : optical wavenumber times emitter separation, dimensionless
    k        : optical wavenumber, 1/m
    d        : transition dipole moment, C m
    epsilon  : relative dielectric constant of the host
    """

    A: float = 11e-15
    omega_c: float = 3e12
    T: float = 4.0
    zeta: float = np.pi / 2
    kr: float = 0.1
    k: float = 1.2e7
    d: float = 9.0e-29
    epsilon: float = 12.9

    def __post_init__(self) -> None:
        if not self.T > 0:
            raise ValueError(f"T must be in (0, inf), got {self.T}")
        if not self.omega_c > 0:
            raise ValueError(f"omega_c must be in (0, inf), got {self.omega_c}")
        if not self.kr > 0:
            raise ValueError(f"kr must be in (0, inf), got {self.kr}")


@dataclass(frozen=True)
class NoDriveSolutionParams:
    """Derived coefficients of the no-drive population solution."""

    Gamma_plus: float
    Gamma_minus: float
    Omega_bar: float
    alpha_bar: float
    beta_bar: float

    def __post_init__(self) -> None:
        if not self.Omega_bar >= 0:
            raise ValueError(f"Omega_bar must be real and >= 0, got {self.Omega_bar}")


def _effective_chi(p: SystemParams) -> float:
    # A negative splitting exchanges the roles of |s> and |a|, which is the
    # same linear system with the labels swapped and chi_r negated.
    return p.chi_r if p.omega_dd >= 0 else -p.chi_r


def _solution_coeffs(gamma: float, chi: float, gpn: float, nbar: float):
    gp = gpn * (1.0 + 2.0 * nbar) + gamma
    gm = gpn * (1.0 + 2.0 * nbar) - gamma
    arg = gpn ** 2 * (1.0 + 2.0 * nbar) ** 2 + gamma * chi * (2.0 * gpn + gamma * chi)
    if arg < 0:
        raise ValueError(f"relaxation frequency would be imaginary (argument {arg})")
    ob = float(np.sqrt(arg))
    al = gm * (gamma * chi * (1.0 + chi) + gpn * (1.0 + chi - 2.0 * nbar * (1.0 - chi))) \
        - (1.0 + chi) * ob ** 2
    be = gm * (gamma * chi * (chi - 1.0) - gpn * (3.0 + chi + 2.0 * nbar * (1.0 + chi))) \
        - (1.0 - chi) * ob ** 2
    return gp, gm, ob, al, be


def no_drive_solution_params(p: SystemParams) -> NoDriveSolutionParams:
    gp, gm, ob, al, be = _solution_coeffs(p.gamma, _effective_chi(p),
                                          p.gamma_pn, p.n_bar)
    return NoDriveSolutionParams(Gamma_plus=gp, Gamma_minus=gm, Omega_bar=ob,
                                 alpha_bar=al, beta_bar=be)


def _check_no_drive(p: SystemParams) -> None:
    if p.rabi != 0:
        raise ValueError("the no-drive closed form requires rabi = 0")
    if p.gamma_pn > 0 and p.omega_dd == 0:
        raise ValueError(
            "phonon transfer is undefined at zero s-a splitting "
            "(omega_dd = 0 with gamma_pn > 0)")


def _no_drive_solution(gamma: float, chi: float, gpn: float, nbar: float,
                       pops0, t: float):
    ree0, rss0, raa0, _ = pops0
    gp, gm, ob, al, be = _solution_coeffs(gamma, chi, gpn, nbar)
    d = gm ** 2 - ob ** 2
    if ree0 != 0 and abs(d) < 1e-10 * max(gm * gm, ob * ob, gamma * gamma):
        raise ValueError(
            "degenerate relaxation spectrum (Gamma_minus^2 == Omega_bar^2): "
            "the closed form divides by zero at these rates")
    # cosh/sinh are folded together with exp(-Gamma_plus t) to stay finite
    # at large t (Omega_bar <= Gamma_plus always).
    ep = np.exp((ob - gp) * t)
    em = np.exp(-(ob + gp) * t)
    ch = 0.5 * (ep + em)
    if ob * t > 1e-6:
        sh = 0.5 * (ep - em) / ob
    else:
        sh = t * (1.0 + (ob * t) ** 2 / 6.0) * np.exp(-gp * t)
    e2 = np.exp(-2.0 * gamma * t)

    rss = sh * (2.0 * nbar * gpn * raa0 - (gpn + gamma * chi) * rss0) + rss0 * ch
    raa = sh * (2.0 * gpn * (1.0 + nbar) * rss0 + (gpn + gamma * chi) * raa0) + raa0 * ch
    if ree0 != 0:
        rss += gamma * ree0 / d * (ch * (gamma * (1.0 + chi) ** 2 - 4.0 * nbar * gpn) + al * sh) \
            + gamma * ree0 * e2 / d * (4.0 * nbar * gpn - gamma * (1.0 + chi) ** 2)
        raa += gamma * ree0 / d * (ch * (gamma * (1.0 - chi) ** 2 - 4.0 * gpn * (1.0 + nbar)) + be * sh) \
            + gamma * ree0 * e2 / d * (4.0 * gpn * (1.0 + nbar) - gamma * (1.0 - chi) ** 2)
    ree = ree0 * e2
    return ree, rss, raa, 1.0 - ree - rss - raa


def analytic_populations(p: SystemParams, pops0, t: float):
    """Exact populations at time t for the undriven system.

    Valid for diagonal initial states only (without drive the population
    block is closed, so off-diagonal initial data never feeds in).
    """
    _check_no_drive(p)
    pops0 = tuple(float(x) for x in pops0)
    if abs(sum(pops0) - 1.0) > 1e-9:
        raise ValueError(f"initial populations sum to {sum(pops0)!r}, expected 1")
    if p.omega_dd >= 0:
        return _no_drive_solution(p.gamma, p.chi_r, p.gamma_pn, p.n_bar, pops0, t)
    e0, s0, a0, g0 = pops0
    ree, rss_sw, raa_sw, rgg = _no_drive_solution(
        p.gamma, -p.chi_r, p.gamma_pn, p.n_bar, (e0, a0, s0, g0), t)
    return ree, raa_sw, rss_sw, rgg


def population_generator(p: SystemParams) -> np.ndarray:
    """4x4 rate matrix M of the closed population block at zero drive.

    Transcribed directly from the printed population equations of motion;
    deliberately not built from the Liouvillian, so the two routes stay
    independent cross-checks.
    """
    _check_no_drive(p)
    g, chi, gpn, nbar = p.gamma, p.chi_r, p.gamma_pn, p.n_bar
    down = 2.0 * gpn * (1.0 + nbar)
    up = 2.0 * gpn * nbar
    t_sa, t_as = (down, up) if p.omega_dd >= 0 else (up, down)
    return np.array([
        [-2.0 * g, 0.0, 0.0, 0.0],
        [g * (1.0 + chi), -(g * (1.0 + chi) + t_sa), t_as, 0.0],
        [g * (1.0 - chi), t_sa, -(g * (1.0 - chi) + t_as), 0.0],
        [0.0, g * (1.0 + chi), g * (1.0 - chi), 0.0],
    ])


def matexp_populations(p: SystemParams, pops0, t: float):
    """Populations at time t via the matrix exponential of the rate block."""
    m = population_generator(p)
    out = expm(m * t) @ np.asarray(pops0, dtype=float)
    return tuple(float(x) for x in out)


def strong_phonon_limits(n_bar: float):
    """Limiting steady-state values when phonon transfer dominates decay.

    Returns (R_aa, R_ss, C) with R_ss = R_ee = R_gg; the concurrence
    closed form crosses zero at n_bar = (3 + sqrt(37)) / 14.
    """
    if n_bar < 0:
        raise ValueError(f"n_bar must be in [0, inf), got {n_bar}")
    denom = 1.0 + 4.0 * n_bar
    raa = (1.0 + n_bar) / denom
    rss = n_bar / denom
    c = max(0.0, (np.sqrt((1.0 + n_bar) * (1.0 + 2.0 * n_bar)) - 3.0 * n_bar) / denom)
    return raa, rss, float(c)


def phonon_rate(phys: PhysicalParams, omega_dd: float) -> float:
    """Phonon-induced transfer rate in Hz at the splitting 2|omega_dd|."""
    w = 2.0 * abs(omega_dd)
    return float((phys.A * HBAR / (np.pi * KB)) * w ** 3
                 * np.exp(-(w / phys.omega_c) ** 2))


def mean_phonon_number(T: float, omega_dd: float) -> float:
    """Bose-Einstein occupation of the bath mode at 2|omega_dd|."""
    if T <= 0:
        raise ValueError(f"T must be in (0, inf), got {T}")
    if omega_dd == 0:
        raise ValueError("mean phonon number is undefined at zero splitting")
    return float(1.0 / np.expm1(2.0 * HBAR * abs(omega_dd) / (KB * T)))


def dipole_dipole_shift(gamma: float, zeta: float, kr: float) -> float:
    """Static dipole-dipole shift; signed, sign follows (1 - 3 cos^2 zeta)."""
    if kr <= 0:
        raise ValueError(f"kr must be in (0, inf), got {kr}")
    return float(3.0 * gamma * (1.0 - 3.0 * np.cos(zeta) ** 2) / (4.0 * kr ** 3))


def spontaneous_rate(phys: PhysicalParams) -> float:
    """Single-emitter spontaneous decay rate in SI units."""
    if phys.k <= 0 or phys.d <= 0 or phys.epsilon <= 0:
        raise ValueError("k, d and epsilon must all be positive")
    return float(phys.k ** 3 * phys.d ** 2
                 / (6.0 * np.pi * phys.epsilon * EPS0 * HBAR))
