"""Generator construction: Hamiltonian, jump channels, both assembly routes."""

from __future__ import annotations

import numpy as np
import pytest

from dotpair.model import (
    A, E, G, S,
    PRODUCT_FROM_DICKE, SystemParams,
    basis_density, build_hamiltonian, build_jump_channels, build_liouvillian,
    dicke_to_product, rhs, transition, unvectorize, vectorize,
)
from rate_tables import max_coefficient_error


def random_params(rng, rabi_max=8.0):
    return SystemParams(
        chi_r=float(rng.uniform(0, 1)),
        omega_dd=float(rng.choice([-1.0, 1.0]) * rng.uniform(2, 20)),
        gamma_pn=float(rng.uniform(0, 5)),
        n_bar=float(rng.uniform(0, 1)),
        rabi=float(rng.uniform(0, rabi_max)),
        detuning=float(rng.uniform(-30, 30)),
    )


def random_density(rng):
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = m @ m.conj().T
    return rho / np.trace(rho)


def test_hamiltonian_layout():
    p = SystemParams(omega_dd=15.0, rabi=5.0, detuning=-7.0)
    h = build_hamiltonian(p)
    drive = np.sqrt(2.0) * 5.0
    want = np.array([
        [-14.0, drive, 0.0, 0.0],
        [drive, 8.0, 0.0, drive],
        [0.0, 0.0, -22.0, 0.0],
        [0.0, drive, 0.0, 0.0],
    ], dtype=complex)
    assert np.allclose(h, want, atol=1e-15)
    assert np.allclose(h, h.conj().T)


def test_antisymmetric_state_is_not_driven():
    p = SystemParams(rabi=3.0, detuning=2.0, omega_dd=4.0)
    h = build_hamiltonian(p)
    assert h[A, E] == 0 and h[A, S] == 0 and h[A, G] == 0
    assert h[E, A] == 0 and h[S, A] == 0 and h[G, A] == 0


def test_jump_channels_positive_splitting():
    p = SystemParams(chi_r=0.9, omega_dd=15.0, gamma_pn=3.0, n_bar=0.05)
    chans = build_jump_channels(p)
    assert len(chans) == 4
    sym, asym, down, up = chans
    assert np.array_equal(sym.op, transition(S, E) + transition(G, S))
    assert sym.rate == pytest.approx(1.9)
    assert np.array_equal(asym.op, transition(A, E) - transition(G, A))
    assert asym.rate == pytest.approx(0.1)
    # downward transfer runs |s> -> |a> when |s> lies above |a>
    assert np.array_equal(down.op, transition(A, S))
    assert down.rate == pytest.approx(2 * 3.0 * 1.05)
    assert np.array_equal(up.op, transition(S, A))
    assert up.rate == pytest.approx(2 * 3.0 * 0.05)


def test_phonon_direction_flips_with_splitting_sign():
    p = SystemParams(chi_r=0.9, omega_dd=-15.0, gamma_pn=3.0, n_bar=0.05)
    _, _, down, up = build_jump_channels(p)
    assert np.array_equal(down.op, transition(S, A))
    assert np.array_equal(up.op, transition(A, S))
    assert down.rate == pytest.approx(2 * 3.0 * 1.05)
    assert up.rate == pytest.approx(2 * 3.0 * 0.05)


def test_phonon_transfer_rejected_at_zero_splitting():
    with pytest.raises(ValueError, match="zero s-a splitting"):
        build_jump_channels(SystemParams(gamma_pn=1.0, omega_dd=0.0))
    # no phonon transfer, no constraint: both transfer channels sit at rate 0
    chans = build_jump_channels(SystemParams(gamma_pn=0.0, omega_dd=0.0))
    assert len(chans) == 4
    assert chans[2].rate == 0.0 and chans[3].rate == 0.0


def test_generator_matches_coefficient_table():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(20):
        p = random_params(rng)
        lmat = build_liouvillian(p)
        worst = max(worst, max_coefficient_error(
            lmat, p.gamma, p.chi_r, p.omega_dd, p.gamma_pn, p.n_bar,
            p.rabi, p.detuning))
    assert worst <= 1e-12


def test_rhs_and_superoperator_agree():
    """The direct operator route and the kron-assembled superoperator are
    independent constructions of the same generator."""
    rng = np.random.default_rng(5)
    for _ in range(15):
        p = random_params(rng)
        rho = random_density(rng)
        lmat = build_liouvillian(p)
        via_super = unvectorize(lmat @ vectorize(rho))
        assert np.max(np.abs(via_super - rhs(rho, p))) < 1e-12


def test_generator_preserves_trace():
    rng = np.random.default_rng(7)
    for _ in range(10):
        lmat = build_liouvillian(random_params(rng))
        # the diagonal of d(rho)/dt sums to zero for every input
        trace_rows = lmat[0::5, :].sum(axis=0)
        assert np.max(np.abs(trace_rows)) < 1e-12


def test_generator_preserves_hermiticity():
    rng = np.random.default_rng(8)
    for _ in range(10):
        p = random_params(rng)
        rho = random_density(rng)
        d = rhs(rho, p)
        assert np.max(np.abs(d - d.conj().T)) < 1e-12


def test_population_block_closes_without_drive():
    # with rabi = 0 the populations evolve among themselves only
    rng = np.random.default_rng(9)
    for _ in range(5):
        p = random_params(rng, rabi_max=0.0)
        lmat = build_liouvillian(p)
        for i in range(4):
            row = lmat[4 * i + i, :].copy()
            row[0::5] = 0.0
            assert np.max(np.abs(row)) < 1e-14


def test_params_validation_messages():
    with pytest.raises(ValueError, match="gamma must be"):
        SystemParams(gamma=0.0)
    with pytest.raises(ValueError, match=r"chi_r must be in \[0, 1\]"):
        SystemParams(chi_r=1.2)
    with pytest.raises(ValueError, match="gamma_pn must be"):
        SystemParams(gamma_pn=-0.1)
    with pytest.raises(ValueError, match="n_bar must be"):
        SystemParams(n_bar=-0.5)
    with pytest.raises(ValueError, match="rabi must be"):
        SystemParams(rabi=-1.0)


def test_basis_density_accepts_labels_and_indices():
    assert np.array_equal(basis_density("a"), basis_density(A))
    rho = basis_density("s")
    assert rho[S, S] == 1.0 and np.trace(rho) == 1.0
    with pytest.raises(ValueError, match="initial state"):
        basis_density("x")


def test_product_basis_change_is_unitary():
    t = PRODUCT_FROM_DICKE
    assert np.max(np.abs(t @ t.conj().T - np.eye(4))) < 1e-15


def test_symmetric_state_in_product_basis():
    # |s> is (|eg> + |ge>)/sqrt(2): equal populations and coherence 1/2
    prod = dicke_to_product(basis_density("s"))
    want = np.zeros((4, 4), dtype=complex)
    want[1, 1] = want[2, 2] = want[1, 2] = want[2, 1] = 0.5
    assert np.max(np.abs(prod - want)) < 1e-15


def test_antisymmetric_state_in_product_basis():
    prod = dicke_to_product(basis_density("a"))
    want = np.zeros((4, 4), dtype=complex)
    want[1, 1] = want[2, 2] = 0.5
    want[1, 2] = want[2, 1] = -0.5
    assert np.max(np.abs(prod - want)) < 1e-15


def test_vectorization_is_row_major():
    rho = np.arange(16, dtype=complex).reshape(4, 4)
    v = vectorize(rho)
    for i in range(4):
        for j in range(4):
            assert v[4 * i + j] == rho[i, j]
    assert np.array_equal(unvectorize(v), rho)
