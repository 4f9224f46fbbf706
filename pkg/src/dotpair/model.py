"""Collective-basis model of a driven pair of coupled two-level emitters.

Two identical emitters with a dipole-dipole interaction are described in
the collective basis |e> = |ee>, |s>, |a> (symmetric / antisymmetric
single-excitation states) and |g> = |gg>.  The symmetric state decays
radiatively at the enhanced rate gamma*(1+chi_r), the antisymmetric one
at the suppressed rate gamma*(1-chi_r), and a thermal phonon bath opens
an incoherent transfer channel between |s> and |a> at the splitting
2*omega_dd.  This module assembles the Hamiltonian, the jump channels,
the master-equation right-hand side, and the 16x16 superoperator that
generates d vec(rho)/dt.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "E", "S", "A", "G", "DICKE_LABELS",
    "SystemParams", "JumpChannel",
    "transition", "basis_density",
    "build_hamiltonian", "build_jump_channels", "rhs", "build_liouvillian",
    "dicke_to_product", "PRODUCT_FROM_DICKE",
    "vectorize", "unvectorize",
]

# Fixed ordering of the collective basis; every 4x4 matrix in the package
# is indexed this way.
E, S, A, G = 0, 1, 2, 3
DICKE_LABELS = ("e", "s", "a", "g")

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class SystemParams:
    """Model parameters.  All rates are in units of gamma (default 1).

    gamma     : single-emitter spontaneous decay rate (the global unit)
    chi_r     : radiative coupling between the emitters, in [0, 1]
    omega_dd  : dipole-dipole shift; signed, the sign selects which of
                |s>, |a> lies lower and hence the phonon-transfer direction
    gamma_pn  : phonon-induced transfer rate, >= 0
    n_bar     : mean thermal phonon occupation at the |s>-|a> splitting
    rabi      : laser Rabi frequency, >= 0
    detuning  : laser-emitter detuning; signed
    """

    gamma: float = 1.0
    chi_r: float = 0.0
    omega_dd: float = 0.0
    gamma_pn: float = 0.0
    n_bar: float = 0.0
    rabi: float = 0.0
    detuning: float = 0.0

    def __post_init__(self) -> None:
        if not self.gamma > 0:
            raise ValueError(f"gamma must be in (0, inf), got {self.gamma}")
        if not 0.0 <= self.chi_r <= 1.0:
            raise ValueError(f"chi_r must be in [0, 1], got {self.chi_r}")
        if self.gamma_pn < 0:
            raise ValueError(f"gamma_pn must be in [0, inf), got {self.gamma_pn}")
        if self.n_bar < 0:
            raise ValueError(f"n_bar must be in [0, inf), got {self.n_bar}")
        if self.rabi < 0:
            raise ValueError(f"rabi must be in [0, inf), got {self.rabi}")


@dataclass(frozen=True, eq=False)
class JumpChannel:
    """A single dissipation channel: jump operator and nonnegative rate."""

    op: np.ndarray
    rate: float


def transition(a: int, b: int) -> np.ndarray:
    """The collective transition operator |a><b| as a 4x4 matrix."""
    m = np.zeros((4, 4), dtype=complex)
    m[a, b] = 1.0
    return m


def basis_density(state: str | int) -> np.ndarray:
    """Density matrix of a single collective basis state ('e','s','a','g')."""
    if isinstance(state, str):
        if state not in DICKE_LABELS:
            raise ValueError(f"initial state must be one of {DICKE_LABELS}, got {state!r}")
        state = DICKE_LABELS.index(state)
    rho = np.zeros((4, 4), dtype=complex)
    rho[state, state] = 1.0
    return rho


def build_hamiltonian(p: SystemParams) -> np.ndarray:
    """Hamiltonian (divided by hbar) in the rotating frame of the laser.

    Diagonal: (2*detuning, detuning + omega_dd, detuning - omega_dd, 0).
    The drive couples |e>-|s> and |s>-|g> with matrix element sqrt(2)*rabi;
    the antisymmetric state is not driven.
    """
    h = np.zeros((4, 4), dtype=complex)
    h[E, E] = 2.0 * p.detuning
    h[S, S] = p.detuning + p.omega_dd
    h[A, A] = p.detuning - p.omega_dd
    drive = _SQRT2 * p.rabi
    for i, j in ((E, S), (S, E), (S, G), (G, S)):
        h[i, j] += drive
    return h


def build_jump_channels(p: SystemParams) -> list[JumpChannel]:
    """The four canonical dissipation channels.

    1. symmetric radiative cascade  |e> -> |s> -> |g>, rate gamma*(1+chi_r)
    2. antisymmetric radiative cascade |e> -> |a> -> |g> with a relative
       minus sign between the two legs, rate gamma*(1-chi_r)
    3. downward phonon transfer at rate 2*gamma_pn*(1+n_bar); it runs
       |s> -> |a> when omega_dd > 0 and |a> -> |s> when omega_dd < 0
    4. upward phonon transfer (the transpose of 3) at rate 2*gamma_pn*n_bar
    """
    if p.gamma_pn > 0 and p.omega_dd == 0:
        raise ValueError(
            "phonon transfer is undefined at zero s-a splitting "
            "(omega_dd = 0 with gamma_pn > 0)")
    channels = [
        JumpChannel(transition(S, E) + transition(G, S), p.gamma * (1.0 + p.chi_r)),
        JumpChannel(transition(A, E) - transition(G, A), p.gamma * (1.0 - p.chi_r)),
    ]
    down = 2.0 * p.gamma_pn * (1.0 + p.n_bar)
    up = 2.0 * p.gamma_pn * p.n_bar
    if p.omega_dd >= 0:
        channels.append(JumpChannel(transition(A, S), down))
        channels.append(JumpChannel(transition(S, A), up))
    else:
        channels.append(JumpChannel(transition(S, A), down))
        channels.append(JumpChannel(transition(A, S), up))
    return channels


def rhs(rho: np.ndarray, p: SystemParams) -> np.ndarray:
    """Right-hand side of the master equation, d(rho)/dt.

    Computed directly from operators (not via the superoperator), so the
    two construction routes can be checked against each other.
    """
    h = build_hamiltonian(p)
    out = -1j * (h @ rho - rho @ h)
    for ch in build_jump_channels(p):
        l = ch.op
        ld = l.conj().T
        ldl = ld @ l
        out += ch.rate * (l @ rho @ ld - 0.5 * (ldl @ rho + rho @ ldl))
    return out


def build_liouvillian(p: SystemParams) -> np.ndarray:
    """16x16 superoperator L with L @ vec(rho) = vec(rhs(rho)).

    Vectorization is row-major: vec(rho)[4*i + j] = rho[i, j], under which
    vec(A rho B) = kron(A, B^T) vec(rho).
    """
    h = build_hamiltonian(p)
    ident = np.eye(4)
    lmat = -1j * (np.kron(h, ident) - np.kron(ident, h.T))
    for ch in build_jump_channels(p):
        l = ch.op
        ldl = l.conj().T @ l
        lmat += ch.rate * (np.kron(l, l.conj())
                           - 0.5 * np.kron(ldl, ident)
                           - 0.5 * np.kron(ident, ldl.T))
    return lmat


# Columns express |e>, |s>, |a>, |g> in the product basis
# {|ee>, |eg>, |ge>, |gg>}.
_R2 = 1.0 / _SQRT2
PRODUCT_FROM_DICKE = np.array([
    [1.0, 0.0, 0.0, 0.0],
    [0.0, _R2, _R2, 0.0],
    [0.0, _R2, -_R2, 0.0],
    [0.0, 0.0, 0.0, 1.0],
], dtype=complex)


def dicke_to_product(rho: np.ndarray) -> np.ndarray:
    """Rotate a collective-basis density matrix into the product basis."""
    t = PRODUCT_FROM_DICKE
    return t @ rho @ t.conj().T


def vectorize(rho: np.ndarray) -> np.ndarray:
    """Row-major flattening of a 4x4 matrix to a 16-vector."""
    return np.asarray(rho, dtype=complex).reshape(16)


def unvectorize(vec: np.ndarray) -> np.ndarray:
    """Inverse of vectorize."""
    return np.asarray(vec, dtype=complex).reshape(4, 4)
