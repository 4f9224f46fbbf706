"""Time propagation and steady-state solution of the master equation.

The propagator is an embedded Dormand-Prince 5(4) integrator with FSAL
reuse and error-per-unit-step control, acting on the 16-component
vectorized density matrix.  The steady state comes from a dense linear
solve with one row of the generator replaced by the trace constraint;
an independent route integrates from the maximally mixed state until
the residual dies and is used as a cross-check oracle.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .model import SystemParams, build_liouvillian, unvectorize, vectorize

__all__ = ["Trajectory", "SteadyState", "propagate", "steady_state",
           "steady_state_by_evolution"]

log = logging.getLogger(__name__)

# Dormand-Prince 5(4) tableau.  The last stage of an accepted step is the
# first stage of the next one (FSAL).
_A2 = (1 / 5,)
_A3 = (3 / 40, 9 / 40)
_A4 = (44 / 45, -56 / 15, 32 / 9)
_A5 = (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729)
_A6 = (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656)
_B = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84)
_E = (35 / 384 - 5179 / 57600, 0.0, 500 / 1113 - 7571 / 16695,
      125 / 192 - 393 / 640, -2187 / 6784 + 92097 / 339200,
      11 / 84 - 187 / 2100, -1 / 40)

_SAFETY = 0.9
_SHRINK = 0.2
_GROW = 5.0
_UNDERFLOW = 1e-13


def _dp_step(lmat, y, k1, h):
    """One trial Dormand-Prince step; returns (y_new, err_inf, k_last)."""
    k2 = lmat @ (y + h * (_A2[0] * k1))
    k3 = lmat @ (y + h * (_A3[0] * k1 + _A3[1] * k2))
    k4 = lmat @ (y + h * (_A4[0] * k1 + _A4[1] * k2 + _A4[2] * k3))
    k5 = lmat @ (y + h * (_A5[0] * k1 + _A5[1] * k2 + _A5[2] * k3 + _A5[3] * k4))
    k6 = lmat @ (y + h * (_A6[0] * k1 + _A6[1] * k2 + _A6[2] * k3
                          + _A6[3] * k4 + _A6[4] * k5))
    y_new = y + h * (_B[0] * k1 + _B[2] * k3 + _B[3] * k4 + _B[4] * k5 + _B[5] * k6)
    k7 = lmat @ y_new
    err = h * (_E[0] * k1 + _E[2] * k3 + _E[3] * k4 + _E[4] * k5
               + _E[5] * k6 + _E[6] * k7)
    return y_new, float(np.max(np.abs(err))), k7


def _integrate(lmat, y, t, targets, tol, record_steps=False, residual_stop=None):
    """Drive _dp_step from t through each target time in order.

    Records (time, state) at every target; with record_steps also at every
    accepted step.  Stops early once ||lmat @ y||_inf < residual_stop (if
    given).  Returns (samples, t, y, dy_inf, stopped_early).
    """
    samples = []
    k1 = lmat @ y
    t_end = targets[-1]
    h_floor = _UNDERFLOW * max(1.0, abs(t_end))
    h = min(0.1 / (1.0 + float(np.max(np.abs(k1)))), t_end - t)
    for target in targets:
        while t < target:
            clipped = min(h, target - t)
            y_new, err, k7 = _dp_step(lmat, y, k1, clipped)
            if err <= tol * clipped:
                t = target if clipped == target - t else t + clipped
                y, k1 = y_new, k7
                if record_steps and t != target:
                    samples.append((t, y.copy()))
                dy = float(np.max(np.abs(k1)))
                if residual_stop is not None and dy < residual_stop:
                    return samples, t, y, dy, True
                if clipped == h:
                    factor = _GROW if err == 0.0 else min(
                        _GROW, max(_SHRINK, _SAFETY * (tol * clipped / err) ** 0.25))
                    h = clipped * factor
            else:
                h = clipped * max(_SHRINK, _SAFETY * (tol * clipped / err) ** 0.25)
                if h < h_floor:
                    raise RuntimeError(
                        f"integration step size underflow at t = {t:.9g} "
                        f"(target {t_end:.9g}); the generator is too stiff "
                        "for this tolerance")
        samples.append((t, y.copy()))
    return samples, t, y, float(np.max(np.abs(k1))), False


@dataclass
class Trajectory:
    """Integration output: states at strictly increasing times.

    max_drift is the worst hermiticity/trace defect found at an emitted
    point before it was corrected; it should stay within a small multiple
    of the integration tolerance.
    """

    times: np.ndarray
    states: list
    params: SystemParams
    max_drift: float


@dataclass
class SteadyState:
    rho: np.ndarray
    residual: float
    unique: bool


def _clean(rho):
    """Re-symmetrize and renormalize; returns (rho, defect_before)."""
    herm = 0.5 * (rho + rho.conj().T)
    drift = float(np.max(np.abs(rho - herm)))
    tr = float(np.trace(herm).real)
    drift = max(drift, abs(tr - 1.0))
    return herm / tr, drift


def propagate(rho0: np.ndarray, p: SystemParams, t_end: float,
              tol: float = 1e-8, t_eval=None) -> Trajectory:
    """Integrate the master equation from rho0 up to t_end.

    With t_eval=None every accepted step is emitted; otherwise exactly the
    requested times (strictly increasing, within [0, t_end]).  Emitted
    states are re-symmetrized and trace-renormalized, with the drift
    before correction tracked on the returned Trajectory.
    """
    if not t_end > 0:
        raise ValueError(f"t_end must be in (0, inf), got {t_end}")
    if not 1e-12 <= tol <= 1e-3:
        raise ValueError(f"tol must be in [1e-12, 1e-3], got {tol}")
    rho0 = np.asarray(rho0, dtype=complex)
    if np.max(np.abs(rho0 - rho0.conj().T)) > 1e-9:
        raise ValueError("initial state is not Hermitian")
    if abs(np.trace(rho0).real - 1.0) > 1e-6:
        raise ValueError(f"initial state has trace {np.trace(rho0).real!r}, expected 1")

    include_zero = True
    if t_eval is None:
        targets = [float(t_end)]
        record_steps = True
    else:
        targets = [float(t) for t in t_eval]
        if any(b - a <= 0 for a, b in zip(targets, targets[1:])):
            raise ValueError("t_eval must be strictly increasing")
        if targets[0] < 0 or targets[-1] > t_end:
            raise ValueError("t_eval must lie within [0, t_end]")
        include_zero = targets[0] == 0.0
        if include_zero:
            targets = targets[1:]
        record_steps = False
        if not targets:  # t_eval was [0.0]
            rho, drift = _clean(rho0)
            return Trajectory(np.array([0.0]), [rho], p, drift)

    lmat = build_liouvillian(p)
    samples, _, _, _, _ = _integrate(lmat, vectorize(rho0), 0.0, targets, tol,
                                     record_steps=record_steps)
    times, states = [], []
    max_drift = 0.0
    if include_zero:
        rho, drift = _clean(rho0)
        times.append(0.0)
        states.append(rho)
        max_drift = drift
    for t, y in samples:
        rho, drift = _clean(unvectorize(y))
        times.append(t)
        states.append(rho)
        max_drift = max(max_drift, drift)
    if max_drift > 10.0 * tol:
        log.warning("propagation drift %.3e exceeds 10*tol", max_drift)
    else:
        log.debug("propagation drift %.3e", max_drift)
    return Trajectory(np.array(times), states, p, max_drift)


# vec indices 0, 5, 10, 15 are the diagonal of rho.
_TRACE_ROW = np.zeros(16)
_TRACE_ROW[0::5] = 1.0

_NULL_TOL = 1e-10


def steady_state(p: SystemParams) -> SteadyState:
    """Solve L vec(rho) = 0 with Tr rho = 1 by a dense linear solve.

    One redundant row of the generator is replaced by the trace
    constraint.  Uniqueness of the stationary state is decided by the
    singular-value spectrum of the unmodified generator; for degenerate
    generators a least-squares solution is returned with unique=False.
    """
    lmat = build_liouvillian(p)
    sv = np.linalg.svd(lmat, compute_uv=False)
    null_dim = int(np.sum(sv < _NULL_TOL * sv[0]))
    unique = null_dim <= 1

    a = lmat.copy()
    a[0, :] = _TRACE_ROW
    b = np.zeros(16, dtype=complex)
    b[0] = 1.0
    if unique:
        try:
            x = np.linalg.solve(a, b)
            x += np.linalg.solve(a, b - a @ x)
        except np.linalg.LinAlgError as exc:
            raise RuntimeError(
                "steady-state solve failed although the generator has a "
                f"one-dimensional nullspace (singular values {sv[-3:]}): {exc}"
            ) from exc
    else:
        x = np.linalg.lstsq(a, b, rcond=None)[0]

    rho, _ = _clean(unvectorize(x))
    residual = float(np.linalg.norm(lmat @ vectorize(rho)))
    if unique and residual > 1e-9:
        raise RuntimeError(
            f"steady-state residual {residual:.3e} exceeds 1e-9 "
            f"(nullspace looked one-dimensional, singular values {sv[-3:]})")
    return SteadyState(rho=rho, residual=residual, unique=unique)


def steady_state_by_evolution(p: SystemParams, t_max: float = 2000.0,
                              tol: float = 1e-9) -> SteadyState:
    """Steady state found by integrating forward from the maximally mixed
    state until the time derivative dies out.

    Independent of steady_state (integration instead of a linear solve);
    intended as its cross-check oracle.  Raises if the residual has not
    dropped below tol by t_max.
    """
    if not t_max > 0:
        raise ValueError(f"t_max must be in (0, inf), got {t_max}")
    lmat = build_liouvillian(p)
    y = vectorize(np.eye(4, dtype=complex) / 4.0)
    # The integrator keeps re-injecting local error of order step_tol*||L||,
    # which floors the reachable residual; step three decades below the
    # target and stop on the max-norm residual at a quarter of tol so the
    # reported 2-norm residual stays below tol with margin.
    step_tol = max(1e-12, 0.001 * tol)
    _, t, y, dy, stopped = _integrate(lmat, y, 0.0, [float(t_max)], step_tol,
                                      residual_stop=0.25 * tol)
    if not stopped:
        raise RuntimeError(
            f"no steady state reached by t = {t_max:g} "
            f"(residual {dy:.3e} > {tol:g})")
    rho, _ = _clean(unvectorize(y))
    residual = float(np.linalg.norm(lmat @ vectorize(rho)))
    sv = np.linalg.svd(lmat, compute_uv=False)
    unique = int(np.sum(sv < _NULL_TOL * sv[0])) <= 1
    log.debug("evolution steady state reached at t = %.3g, residual %.3e", t, residual)
    return SteadyState(rho=rho, residual=residual, unique=unique)
