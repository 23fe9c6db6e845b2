import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kloospath.faberschauder import (
    SymmetricHomeo,
    coefficient_sup,
    compose,
    faber_coefficients,
    reconstruct,
    reparam_search,
)
from kloospath.gallery import gallery_function, riemann_rho, takagi
from kloospath.pathcore import kloosterman_path, spike_path, symmetry_report


def test_affine_has_no_tents():
    e = faber_coefficients(lambda t: 3 * t, 8)
    assert all(np.all(b == 0) for b in e.beta)
    assert e.beta0 == 0 and e.beta1 == 3


def test_takagi_coefficients():
    e = faber_coefficients(takagi, 10)
    assert e.coefficient(0, 1) == 0.5
    for m in range(10):
        assert np.allclose(e.beta[m], 2.0 ** -(m + 1))


def test_spike():
    assert faber_coefficients(spike_path(), 3).coefficient(0, 1) == 1j


@pytest.mark.parametrize("M", [1, 4, 9])
def test_reconstruction_interpolates_and_roundtrips(M):
    f = kloosterman_path(5, 1, 13)
    e = faber_coefficients(f, M)
    t = np.linspace(0, 1, 2 ** M + 1)
    assert np.max(np.abs(reconstruct(e, t) - f(t))) < 1e-13
    again = faber_coefficients(e, M)
    assert all(np.allclose(a, b, atol=1e-14) for a, b in zip(e.beta, again.beta))


def test_uniform_convergence():
    t = np.linspace(0, 1, 3001)
    errs = [np.max(np.abs(reconstruct(faber_coefficients(takagi, M), t) - takagi(t))) for M in (4, 8, 12)]
    assert errs[0] > errs[1] > errs[2]


def test_depth_limits():
    with pytest.raises(ValueError):
        faber_coefficients(takagi, 21)
    with pytest.raises(IndexError):
        faber_coefficients(takagi, 3).coefficient(1, 3)


def test_homeo_validation():
    with pytest.raises(ValueError):
        SymmetricHomeo([0, 0.5, 0.4, 1], [0, 0.5, 0.6, 1])
    with pytest.raises(ValueError):
        SymmetricHomeo([0, 0.25, 1], [0, 0.3, 1])
    with pytest.raises(ValueError):
        compose(takagi, ([0, 0.25, 0.75, 1], [0, 0.7, 0.3, 1]))
    phi = SymmetricHomeo([0, 0.25, 0.75, 1], [0, 0.375, 0.625, 1])
    assert phi(0.25) == 0.375
    assert phi.to_csv().splitlines()[0] == "t,phi"
    assert len(phi.to_csv().splitlines()) == 5


# knots on a fine dyadic grid so that 1 - t is exact
_half = st.lists(st.integers(1, 2 ** 20 - 1), min_size=1, max_size=6, unique=True)
homeo = _half.flatmap(
    lambda ks: st.lists(st.integers(1, 2 ** 20 - 1), min_size=len(ks), max_size=len(ks), unique=True).map(
        lambda vs: SymmetricHomeo.from_left_half(np.sort(ks) / 2 ** 21, np.sort(vs) / 2 ** 21)))


@settings(max_examples=40, deadline=None)
@given(homeo)
def test_beta01_invariant_and_symmetry_kept(phi):
    for f in (gallery_function("takagi").evaluator, kloosterman_path(3, 1, 11)):
        g = compose(f, phi)
        assert abs(faber_coefficients(g, 1).coefficient(0, 1) - faber_coefficients(f, 1).coefficient(0, 1)) < 1e-12
        assert symmetry_report(g, grid_size=1025).max_defect < 1e-6


@settings(max_examples=20, deadline=None)
@given(homeo, homeo)
def test_composition_closed(phi, psi):
    chi = phi.then(psi)
    t = np.linspace(0, 1, 257)
    assert np.allclose(chi(t), psi(phi(t)), atol=1e-12)


def test_compose_examples():
    ident = SymmetricHomeo.identity()
    t = np.linspace(0, 1, 65)
    assert np.array_equal(compose(takagi, ident)(t), takagi(t))
    phi = SymmetricHomeo([0, 0.25, 0.75, 1], [0, 0.375, 0.625, 1])
    assert np.allclose(compose(lambda x: x, phi)(t), phi(t))
    assert symmetry_report(compose(gallery_function("takagi").evaluator, phi)).is_F0


def test_reparam_examples():
    r = reparam_search(lambda t: riemann_rho(2 * t, 200))
    assert r.success and r.evaluations == 1
    r = reparam_search(lambda t: 1.5 * t)
    assert r.success and r.achieved < 1e-12


def test_reparam_diagnostic_pulse():
    pulse = lambda t: 3j * (1 - np.abs(2 * np.asarray(t) - 1))  # noqa: E731
    r = reparam_search(pulse, budget=60)
    assert r.achieved <= r.initial
    assert r.evaluations <= 60
    assert abs(coefficient_sup(compose(pulse, r.phi)) - r.achieved) < 1e-12
