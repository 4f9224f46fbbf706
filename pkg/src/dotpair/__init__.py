"""Driven pair of dipole-coupled two-level emitters with radiative and
phonon damping: master-equation dynamics, steady states, entanglement."""

from .dynamics import SteadyState, Trajectory, propagate, steady_state, \
    steady_state_by_evolution
from .model import (DICKE_LABELS, JumpChannel, SystemParams, basis_density,
                    build_hamiltonian, build_jump_channels, build_liouvillian,
                    dicke_to_product, rhs)
from .observables import (ObservableSet, concurrence, intensity, observe,
                          populations, purity)
from .oracle import (NoDriveSolutionParams, PhysicalParams,
                     analytic_populations, dipole_dipole_shift,
                     matexp_populations, mean_phonon_number, phonon_rate,
                     spontaneous_rate, strong_phonon_limits)
from .sweep import GridSpec, SweepResult, sweep_steady, sweep_transient

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "SystemParams", "JumpChannel", "DICKE_LABELS",
    "build_hamiltonian", "build_jump_channels", "build_liouvillian", "rhs",
    "dicke_to_product", "basis_density",
    "Trajectory", "SteadyState", "propagate", "steady_state",
    "steady_state_by_evolution",
    "ObservableSet", "observe", "concurrence", "populations", "intensity",
    "purity",
    "PhysicalParams", "NoDriveSolutionParams", "analytic_populations",
    "matexp_populations", "strong_phonon_limits", "phonon_rate",
    "mean_phonon_number", "dipole_dipole_shift", "spontaneous_rate",
    "GridSpec", "SweepResult", "sweep_steady", "sweep_transient",
]
