"""Propagator accuracy and the two steady-state routes."""

from __future__ import annotations

import numpy as np
import pytest
from scipy.linalg import expm

from dotpair.dynamics import propagate, steady_state, steady_state_by_evolution
from dotpair.model import (SystemParams, basis_density, build_liouvillian,
                           unvectorize, vectorize)
from dotpair.observables import populations

FIG_RATES = dict(chi_r=0.9, omega_dd=15.0, gamma_pn=3.0, n_bar=0.05)


def random_driven(rng):
    return SystemParams(
        chi_r=float(rng.uniform(0, 0.99)),
        omega_dd=float(rng.choice([-1.0, 1.0]) * rng.uniform(5, 20)),
        gamma_pn=float(rng.uniform(0.5, 5)),
        n_bar=float(rng.uniform(0.1, 0.6)),
        rabi=float(rng.uniform(0, 8)),
        detuning=float(rng.uniform(-30, 30)),
    )


def test_ground_state_is_stationary_without_drive_or_heating():
    p = SystemParams(chi_r=0.9, omega_dd=15.0, gamma_pn=3.0, n_bar=0.0)
    traj = propagate(basis_density("g"), p, t_end=5.0, t_eval=[0.0, 2.0, 5.0])
    for rho in traj.states:
        assert np.max(np.abs(rho - basis_density("g"))) < 1e-9


def test_radiative_cascade_matches_hand_solution():
    p = SystemParams(chi_r=0.0, omega_dd=5.0, gamma_pn=0.0)
    times = [0.0, 0.25, 1.0, 3.0]
    traj = propagate(basis_density("e"), p, t_end=3.0, tol=1e-10, t_eval=times)
    for t, rho in zip(times, traj.states):
        ree, rss, raa, rgg = populations(rho)
        assert ree == pytest.approx(np.exp(-2 * t), abs=1e-8)
        assert rss == pytest.approx(np.exp(-t) - np.exp(-2 * t), abs=1e-8)
        assert rgg == pytest.approx((1 - np.exp(-t)) ** 2, abs=1e-8)


def test_propagator_matches_superoperator_exponential():
    """Adaptive integration against scipy's expm of the full 16x16
    generator, on driven parameter sets where no closed form exists."""
    rng = np.random.default_rng(43)
    for _ in range(5):
        p = random_driven(rng)
        lmat = build_liouvillian(p)
        rho0 = basis_density("g")
        times = [0.1, 0.5, 1.7, 4.0]
        traj = propagate(rho0, p, t_end=4.0, tol=1e-10, t_eval=times)
        for t, rho in zip(times, traj.states):
            ref = unvectorize(expm(lmat * t) @ vectorize(rho0))
            assert np.max(np.abs(rho - ref)) < 1e-8


def test_tolerance_actually_controls_accuracy():
    p = SystemParams(**FIG_RATES, rabi=5.0, detuning=-15.0)
    lmat = build_liouvillian(p)
    ref = unvectorize(expm(lmat * 3.0) @ vectorize(basis_density("g")))

    def error_at(tol):
        traj = propagate(basis_density("g"), p, t_end=3.0, tol=tol, t_eval=[3.0])
        return float(np.max(np.abs(traj.states[-1] - ref)))

    coarse, fine = error_at(1e-5), error_at(1e-10)
    assert fine < coarse
    assert fine < 1e-8


def test_emitted_states_stay_physical():
    rng = np.random.default_rng(47)
    for _ in range(3):
        p = random_driven(rng)
        traj = propagate(basis_density("g"), p, t_end=6.0)
        for rho in traj.states:
            assert abs(np.trace(rho).real - 1.0) < 1e-12
            assert np.max(np.abs(rho - rho.conj().T)) < 1e-12
            assert np.linalg.eigvalsh(rho).min() > -1e-8
        assert traj.max_drift <= 10 * 1e-8


def test_dense_output_records_every_step():
    p = SystemParams(**FIG_RATES, rabi=5.0, detuning=-15.0)
    traj = propagate(basis_density("g"), p, t_end=2.0)
    assert traj.times[0] == 0.0
    assert traj.times[-1] == pytest.approx(2.0)
    assert len(traj.times) > 10
    assert np.all(np.diff(traj.times) > 0)


def test_requested_times_are_returned_exactly():
    p = SystemParams(**FIG_RATES)
    times = [0.0, 0.123456, 1.0, 1.999]
    traj = propagate(basis_density("e"), p, t_end=2.0, t_eval=times)
    assert list(traj.times) == times


def test_time_grid_validation():
    p = SystemParams(**FIG_RATES)
    rho0 = basis_density("g")
    with pytest.raises(ValueError, match="strictly increasing"):
        propagate(rho0, p, t_end=2.0, t_eval=[0.0, 1.0, 1.0])
    with pytest.raises(ValueError, match=r"within \[0, t_end\]"):
        propagate(rho0, p, t_end=2.0, t_eval=[0.0, 3.0])
    with pytest.raises(ValueError, match="t_end must be"):
        propagate(rho0, p, t_end=0.0)
    with pytest.raises(ValueError, match="tol must be"):
        propagate(rho0, p, t_end=1.0, tol=1e-2)


def test_initial_state_validation():
    p = SystemParams(**FIG_RATES)
    skew = np.zeros((4, 4), dtype=complex)
    skew[0, 1] = 1.0
    skew[0, 0] = 1.0
    with pytest.raises(ValueError, match="not Hermitian"):
        propagate(skew, p, t_end=1.0)
    with pytest.raises(ValueError, match="trace"):
        propagate(np.eye(4, dtype=complex), p, t_end=1.0)


def test_initial_time_only_returns_initial_state():
    p = SystemParams(**FIG_RATES)
    traj = propagate(basis_density("s"), p, t_end=1.0, t_eval=[0.0])
    assert len(traj.states) == 1
    assert np.max(np.abs(traj.states[0] - basis_density("s"))) < 1e-12


def test_step_underflow_is_reported():
    # a splitting eleven orders of magnitude above gamma is too stiff to
    # integrate over a decay-scale window at this tolerance
    p = SystemParams(omega_dd=1e12, rabi=1.0, gamma_pn=1.0, n_bar=0.1)
    with pytest.raises(RuntimeError, match="step size underflow"):
        propagate(basis_density("g"), p, t_end=10.0, tol=1e-12)


def test_steady_state_at_reference_point():
    p = SystemParams(**FIG_RATES, rabi=5.0, detuning=-15.0)
    st = steady_state(p)
    assert st.unique
    assert st.residual < 1e-9
    assert np.max(np.abs(st.rho - st.rho.conj().T)) < 1e-12
    assert np.trace(st.rho).real == pytest.approx(1.0, abs=1e-12)
    # value frozen after the linear solve and the long-time integration
    # agreed on it to 1e-10
    assert st.rho[2, 2].real == pytest.approx(0.87062419752, abs=1e-6)


def test_undriven_steady_state_is_the_ground_state():
    p = SystemParams(chi_r=0.9, omega_dd=15.0, gamma_pn=3.0, n_bar=0.0)
    st = steady_state(p)
    want = np.zeros((4, 4), dtype=complex)
    want[3, 3] = 1.0
    assert np.max(np.abs(st.rho - want)) < 1e-10


def test_driven_steady_coherences_to_dark_state_vanish():
    # nothing couples |a> coherently, so its coherences die in the steady
    # state even while phonons populate it
    p = SystemParams(**FIG_RATES, rabi=5.0, detuning=-15.0)
    st = steady_state(p)
    for other in (0, 1, 3):
        assert abs(st.rho[2, other]) < 1e-9


def test_degenerate_generator_is_flagged_not_raised():
    # chi_r = 1 with no phonons leaves |a> fully decoupled: the stationary
    # space is two-dimensional
    p = SystemParams(chi_r=1.0, omega_dd=5.0, gamma_pn=0.0)
    st = steady_state(p)
    assert not st.unique
    assert st.residual < 1e-8
    assert np.trace(st.rho).real == pytest.approx(1.0, abs=1e-9)


def test_thermal_ratio_in_phonon_dominated_regime():
    """When phonon transfer dwarfs every radiative rate, the two
    one-excitation populations settle into the Bose ratio (1+n)/n."""
    p = SystemParams(chi_r=0.99, omega_dd=15.0, gamma_pn=1000.0, n_bar=0.3,
                     rabi=5.0, detuning=-15.0)
    st = steady_state(p)
    ratio = st.rho[2, 2].real / st.rho[1, 1].real
    assert ratio == pytest.approx(1.3 / 0.3, rel=1e-2)


def test_evolution_route_confirms_linear_solve():
    rng = np.random.default_rng(53)
    for _ in range(3):
        p = random_driven(rng)
        direct = steady_state(p)
        evolved = steady_state_by_evolution(p)
        assert np.max(np.abs(direct.rho - evolved.rho)) < 1e-7


def test_evolution_route_reports_nonconvergence():
    p = SystemParams(**FIG_RATES, rabi=5.0, detuning=-15.0)
    with pytest.raises(RuntimeError, match="no steady state"):
        steady_state_by_evolution(p, t_max=0.05)
