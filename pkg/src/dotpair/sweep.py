"""Deterministic parameter scans over (detuning, rabi) grids and time grids.

Cells are independent; they may be computed by a process pool, but the
result is always assembled by grid index, so the output is identical for
any worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .dynamics import propagate, steady_state
from .model import SystemParams
from .observables import ObservableSet, observe

__all__ = ["GridSpec", "SweepResult", "sweep_steady", "sweep_transient",
           "worker_count", "WORKERS_ENV"]

WORKERS_ENV = "DOTPAIR_WORKERS"


@dataclass(frozen=True)
class GridSpec:
    """A (detuning, rabi) product grid on top of a base parameter set."""

    detuning_range: tuple[float, float, int]
    rabi_range: tuple[float, float, int]
    base: SystemParams

    def __post_init__(self) -> None:
        for name, (lo, hi, n) in (("detuning_range", self.detuning_range),
                                  ("rabi_range", self.rabi_range)):
            if n < 1:
                raise ValueError(f"{name} count must be >= 1, got {n}")
            if lo > hi:
                raise ValueError(f"{name} has min {lo} > max {hi}")

    def detunings(self) -> np.ndarray:
        lo, hi, n = self.detuning_range
        return np.linspace(lo, hi, n)

    def rabis(self) -> np.ndarray:
        lo, hi, n = self.rabi_range
        return np.linspace(lo, hi, n)


@dataclass
class SweepResult:
    """cells[i][j] holds the observables at rabi index i, detuning index j;
    failed cells stay None and are listed in failures."""

    grid: GridSpec
    cells: list
    failures: list


def worker_count(explicit=None) -> int:
    """Resolve the worker count: explicit argument, else the environment."""
    if explicit is not None:
        return max(1, int(explicit))
    raw = os.environ.get(WORKERS_ENV, "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def _steady_cell(base: SystemParams, rabi: float, delta: float) -> ObservableSet:
    p = replace(base, rabi=float(rabi), detuning=float(delta))
    return observe(steady_state(p).rho, p)


def _apply(task):
    i, j, cell_fn, base, rabi, delta = task
    try:
        return i, j, cell_fn(base, rabi, delta), None
    except Exception as exc:  # per-cell failures must never abort the sweep
        return i, j, None, f"{type(exc).__name__}: {exc}"


def sweep_steady(grid: GridSpec, workers=None, cell_fn=_steady_cell) -> SweepResult:
    """Steady-state observables over the whole grid.

    cell_fn(base, rabi, delta) -> ObservableSet is injectable so the
    scheduling machinery can be exercised with synthetic workloads.
    """
    deltas = grid.detunings()
    rabis = grid.rabis()
    tasks = [(i, j, cell_fn, grid.base, rabis[i], deltas[j])
             for i in range(len(rabis)) for j in range(len(deltas))]
    n = worker_count(workers)
    if n > 1:
        chunk = max(1, len(tasks) // (4 * n))
        with ProcessPoolExecutor(max_workers=n) as pool:
            done = list(pool.map(_apply, tasks, chunksize=chunk))
    else:
        done = [_apply(t) for t in tasks]

    cells = [[None] * len(deltas) for _ in range(len(rabis))]
    failures = []
    for i, j, obs, err in done:
        if err is None:
            cells[i][j] = obs
        else:
            failures.append(((i, j), err))
    return SweepResult(grid=grid, cells=cells, failures=failures)


def sweep_transient(p: SystemParams, rho0: np.ndarray, times,
                    tol: float = 1e-8) -> list:
    """Observables of one trajectory, sampled at the requested times."""
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise ValueError("times must be a nonempty 1-d sequence")
    if np.any(np.diff(times) <= 0):
        raise ValueError("times must be strictly increasing")
    if times[0] < 0:
        raise ValueError(f"times must be nonnegative, got {times[0]}")
    traj = propagate(rho0, p, t_end=float(times[-1]), tol=tol, t_eval=times)
    return [observe(state, p) for state in traj.states]
