"""Concurrence, populations, intensity, purity and their closed-form checks."""

from __future__ import annotations

import numpy as np
import pytest

from dotpair.model import (PRODUCT_FROM_DICKE, SystemParams, basis_density,
                           dicke_to_product)
from dotpair.observables import (concurrence, intensity, observe, populations,
                                 pure_state_concurrence, purity,
                                 x_state_concurrence)

DICKE_FROM_PRODUCT = PRODUCT_FROM_DICKE.conj().T


def pure_to_dicke(psi_product):
    psi = DICKE_FROM_PRODUCT @ np.asarray(psi_product, dtype=complex)
    return np.outer(psi, psi.conj())


def random_pure_product(rng):
    psi = rng.normal(size=4) + 1j * rng.normal(size=4)
    return psi / np.linalg.norm(psi)


def random_x_state_product(rng):
    diag = rng.dirichlet(np.ones(4))
    r14 = rng.uniform(0, np.sqrt(diag[0] * diag[3]))
    r23 = rng.uniform(0, np.sqrt(diag[1] * diag[2]))
    ph1, ph2 = np.exp(2j * np.pi * rng.uniform(size=2))
    x = np.diag(diag).astype(complex)
    x[0, 3], x[3, 0] = r14 * ph1, (r14 * ph1).conjugate()
    x[1, 2], x[2, 1] = r23 * ph2, (r23 * ph2).conjugate()
    return x


def haar_unitary_2x2(rng):
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_bell_states_have_unit_concurrence():
    assert concurrence(basis_density("s")) == pytest.approx(1.0, abs=1e-12)
    assert concurrence(basis_density("a")) == pytest.approx(1.0, abs=1e-12)
    phi = np.zeros(4, dtype=complex)
    phi[0] = phi[3] = 1 / np.sqrt(2.0)  # (|ee> + |gg>)/sqrt(2)
    assert concurrence(pure_to_dicke(phi)) == pytest.approx(1.0, abs=1e-12)


def test_product_states_have_zero_concurrence():
    assert concurrence(basis_density("e")) == pytest.approx(0.0, abs=1e-12)
    assert concurrence(basis_density("g")) == pytest.approx(0.0, abs=1e-12)
    rng = np.random.default_rng(3)
    for _ in range(50):
        a = rng.normal(size=2) + 1j * rng.normal(size=2)
        b = rng.normal(size=2) + 1j * rng.normal(size=2)
        psi = np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b))
        assert concurrence(pure_to_dicke(psi)) < 1e-10


def test_pure_states_match_closed_form():
    rng = np.random.default_rng(17)
    worst = 0.0
    for _ in range(1000):
        psi = random_pure_product(rng)
        dev = abs(concurrence(pure_to_dicke(psi)) - pure_state_concurrence(psi))
        worst = max(worst, dev)
    assert worst <= 1e-10


def test_x_states_match_closed_form():
    rng = np.random.default_rng(23)
    worst = 0.0
    for _ in range(300):
        x = random_x_state_product(rng)
        rho_d = DICKE_FROM_PRODUCT @ x @ PRODUCT_FROM_DICKE
        dev = abs(concurrence(rho_d) - x_state_concurrence(x))
        worst = max(worst, dev)
    assert worst <= 1e-10


def test_x_state_closed_form_rejects_other_shapes():
    x = random_x_state_product(np.random.default_rng(1))
    x[0, 1] = x[1, 0] = 0.05
    with pytest.raises(ValueError, match="X-shaped"):
        x_state_concurrence(x)


def test_local_unitaries_leave_concurrence_invariant():
    rng = np.random.default_rng(29)
    for _ in range(100):
        x = random_x_state_product(rng)
        base = x_state_concurrence(x)
        u = np.kron(haar_unitary_2x2(rng), haar_unitary_2x2(rng))
        rotated = u @ x @ u.conj().T
        rho_d = DICKE_FROM_PRODUCT @ rotated @ PRODUCT_FROM_DICKE
        assert abs(concurrence(rho_d) - base) <= 1e-9


def test_werner_family_threshold():
    """Mixing the antisymmetric Bell state with white noise: the closed
    form is max(0, (3p - 1)/2), entangled only above p = 1/3."""
    for p in np.linspace(0.0, 1.0, 21):
        rho = p * basis_density("a") + (1 - p) * np.eye(4) / 4.0
        want = max(0.0, (3 * p - 1) / 2)
        assert concurrence(rho) == pytest.approx(want, abs=1e-10)


def test_concurrence_rejects_nonpositive_input():
    bad = np.diag([-0.25, 0.5, 0.5, 0.25]).astype(complex)
    with pytest.raises(ValueError, match="invalid density matrix"):
        concurrence(bad)


def test_populations_read_the_diagonal():
    rho = np.diag([0.1, 0.2, 0.3, 0.4]).astype(complex)
    assert populations(rho) == pytest.approx((0.1, 0.2, 0.3, 0.4))


def test_intensity_channel_weights():
    p = SystemParams(gamma=2.0, chi_r=0.6)
    assert intensity(basis_density("s"), p) == pytest.approx(2.0 * 1.6)
    assert intensity(basis_density("a"), p) == pytest.approx(2.0 * 0.4)
    assert intensity(basis_density("e"), p) == pytest.approx(4.0)
    assert intensity(basis_density("g"), p) == pytest.approx(0.0)


def test_purity_endpoints():
    assert purity(basis_density("s")) == pytest.approx(1.0)
    assert purity(np.eye(4, dtype=complex) / 4.0) == pytest.approx(0.25)


def test_observe_bundles_everything():
    p = SystemParams(chi_r=0.9)
    obs = observe(basis_density("a"), p)
    assert obs.concurrence == pytest.approx(1.0, abs=1e-12)
    assert obs.populations == pytest.approx((0.0, 0.0, 1.0, 0.0))
    assert obs.intensity == pytest.approx(0.1)
    assert obs.purity == pytest.approx(1.0)


def test_observe_validates_populations():
    p = SystemParams()
    with pytest.raises(ValueError, match="sum to"):
        observe(np.diag([0.5, 0.2, 0.2, 0.2]).astype(complex), p)
    with pytest.raises(ValueError, match=r"outside \[0, 1\]"):
        observe(np.diag([1.5, -0.5, 0.0, 0.0]).astype(complex), p)


def test_pure_state_closed_form_endpoints():
    bell = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
    assert pure_state_concurrence(bell) == pytest.approx(1.0)
    assert pure_state_concurrence(np.array([1.0, 0.0, 0.0, 0.0])) == 0.0
