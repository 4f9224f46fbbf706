"""Observables: concurrence, populations, scattered intensity, purity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import A, E, G, S, SystemParams, dicke_to_product

__all__ = [
    "ObservableSet", "observe",
    "concurrence", "populations", "intensity", "purity",
    "pure_state_concurrence", "x_state_concurrence",
]

# sigma_y (x) sigma_y in the product basis; the spin-flip matrix.
SIGMA_YY = np.array([
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0, 0.0],
], dtype=complex)

_EIG_TOL = 1e-8


@dataclass(frozen=True)
class ObservableSet:
    concurrence: float
    populations: tuple[float, float, float, float]
    intensity: float
    purity: float


def populations(rho: np.ndarray) -> tuple[float, float, float, float]:
    """Diagonal read-out (R_ee, R_ss, R_aa, R_gg) in the collective basis."""
    return tuple(float(rho[i, i].real) for i in range(4))


def concurrence(rho: np.ndarray) -> float:
    """Two-qubit concurrence of a collective-basis density matrix.

    The needed quantities are the square roots s_i of the eigenvalues of
    rho (sy x sy) rho* (sy x sy); they are computed here as the singular
    values of sqrt(rho) (sy x sy) conj(sqrt(rho)), which is the same set
    but without squaring, so rank-deficient states do not amplify
    rounding noise through the final square root.  The concurrence is
    max(0, s1 - s2 - s3 - s4) in descending order.  Inputs that are not
    Hermitian positive semidefinite beyond tolerance raise.
    """
    prod = dicke_to_product(rho)
    skew = float(np.max(np.abs(prod - prod.conj().T)))
    if skew > _EIG_TOL:
        raise ValueError(
            f"concurrence input deviates from Hermitian by {skew:.3e} "
            "(invalid density matrix)")
    ev, vec = np.linalg.eigh(prod)
    if float(ev.min()) < -_EIG_TOL:
        raise ValueError(
            f"concurrence input has eigenvalue {float(ev.min()):.3e} "
            "(invalid density matrix)")
    root = (vec * np.sqrt(np.clip(ev, 0.0, None))) @ vec.conj().T
    s = np.linalg.svd(root @ SIGMA_YY @ root.conj(), compute_uv=False)
    return float(np.clip(s[0] - s[1] - s[2] - s[3], 0.0, 1.0))


def intensity(rho: np.ndarray, p: SystemParams) -> float:
    """Total intensity of the spontaneously scattered light, in units gamma.

    The symmetric state radiates at the enhanced rate (1+chi_r), the
    antisymmetric one at the suppressed rate (1-chi_r), and the doubly
    excited state through both cascades.
    """
    return float(p.gamma * ((1.0 + p.chi_r) * rho[S, S].real
                            + (1.0 - p.chi_r) * rho[A, A].real
                            + 2.0 * rho[E, E].real))


def purity(rho: np.ndarray) -> float:
    return float(np.trace(rho @ rho).real)


def observe(rho: np.ndarray, p: SystemParams) -> ObservableSet:
    """Evaluate the full observable set, validating the populations."""
    pops = populations(rho)
    total = sum(pops)
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"populations sum to {total!r}, expected 1")
    for label, value in zip(("R_ee", "R_ss", "R_aa", "R_gg"), pops):
        if value < -1e-9 or value > 1.0 + 1e-9:
            raise ValueError(f"population {label} = {value!r} outside [0, 1]")
    return ObservableSet(
        concurrence=concurrence(rho),
        populations=pops,
        intensity=intensity(rho, p),
        purity=purity(rho),
    )


def pure_state_concurrence(psi_product: np.ndarray) -> float:
    """Closed form 2|a*d - b*c| for a normalized pure state (product basis).

    Independent of the eigenvalue route above; used as a cross-check.
    """
    a, b, c, d = np.asarray(psi_product, dtype=complex)
    return float(2.0 * abs(a * d - b * c))


def x_state_concurrence(rho_product: np.ndarray) -> float:
    """Closed form for X-shaped states (product basis).

    Valid when the only nonzero entries are the diagonal and the two
    anti-diagonal pairs (1,4) and (2,3); raises if the input is not
    X-shaped.  Used as an independent cross-check of the eigenvalue
    route.
    """
    r = np.asarray(rho_product, dtype=complex)
    mask = np.zeros((4, 4), dtype=bool)
    mask[range(4), range(4)] = True
    mask[0, 3] = mask[3, 0] = mask[1, 2] = mask[2, 1] = True
    stray = float(np.max(np.abs(r[~mask]))) if (~mask).any() else 0.0
    if stray > 1e-9:
        raise ValueError(f"not an X-shaped state (off-pattern entry {stray:.3e})")
    inner = abs(r[1, 2]) - np.sqrt(max(r[0, 0].real, 0.0) * max(r[3, 3].real, 0.0))
    outer = abs(r[0, 3]) - np.sqrt(max(r[1, 1].real, 0.0) * max(r[2, 2].real, 0.0))
    return float(2.0 * max(0.0, inner, outer))
