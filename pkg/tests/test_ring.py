import numpy as np
import pytest

from superrad.collective import collective_modes
from superrad.emitters import interaction_matrix, line, symmetric_triangle
from superrad.propagator import FieldModel, InteractionModel
from superrad.ring import (
    DipoleStyle,
    RingSpec,
    certify_ring_rwa_invariance,
    rate_gap,
    ring_eigenvalues_fourier,
    ring_emitters,
    ring_matrix,
)


def _multiset_distance(a, b):
    a, b = list(a), list(b)
    worst = 0.0
    for x in a:
        k = min(range(len(b)), key=lambda i: abs(b[i] - x))
        worst = max(worst, abs(b.pop(k) - x))
    return worst


def test_square_out_of_plane():
    ems = ring_emitters(RingSpec(4, 1.0))
    pos = np.array([e.position for e in ems])
    np.testing.assert_allclose(pos, [[1, 0, 0], [0, 1, 0], [-1, 0, 0], [0, -1, 0]], atol=1e-15)
    assert all(e.dipole == (0.0, 0.0, 1.0) for e in ems)


@pytest.mark.parametrize("style", list(DipoleStyle))
def test_ring_matrix_is_circulant(style):
    jp = ring_matrix(RingSpec(7, 0.4, style))
    for n in range(1, 7):
        assert jp[0, n] == pytest.approx(jp[0, 7 - n], rel=1e-12)


def test_three_ring_is_symmetric_triangle():
    side = 0.6
    ring = ring_matrix(RingSpec(3, side / np.sqrt(3.0)))
    tri = interaction_matrix(symmetric_triangle(side))
    np.testing.assert_allclose(ring, tri, rtol=1e-12)


def test_three_ring_fourier_eigenvalues():
    J = 0.3 - 0.8j
    nu = ring_eigenvalues_fourier([0.0, J, J])
    np.testing.assert_allclose(nu, [2 * J, -J, -J], atol=1e-15)


def test_four_ring_fourier_eigenvalues():
    j1, j2 = 1.1 - 0.2j, -0.4 + 0.3j
    nu = ring_eigenvalues_fourier([0.0, j1, j2, j1])
    np.testing.assert_allclose(nu, [j2 + 2 * j1, -j2, j2 - 2 * j1, -j2], atol=1e-15)


@pytest.mark.parametrize("n", [3, 4, 5, 8, 11, 12])
@pytest.mark.parametrize("radius", [0.05, 0.7, 20.0])
def test_fourier_matches_dense(n, radius):
    jp = ring_matrix(RingSpec(n, radius, DipoleStyle.TANGENTIAL))
    dense = [m.eigenvalue for m in collective_modes(jp)]
    assert _multiset_distance(ring_eigenvalues_fourier(jp[0]), dense) < 1e-9


def test_fourier_input_validation():
    with pytest.raises(ValueError):
        ring_eigenvalues_fourier([1.0, 0.5, 0.5])
    with pytest.raises(ValueError):
        ring_eigenvalues_fourier([0.0, 0.5, 0.4, 0.3])
    with pytest.raises(ValueError):
        ring_eigenvalues_fourier([0.0, 0.5, 0.5], n=4)


def test_five_ring_certificate():
    rep = certify_ring_rwa_invariance(RingSpec(5, 0.5))
    assert rep.max_rate_difference < 1e-9
    assert rep.max_shift_difference > 0.0


def test_certificate_raises_on_violation(monkeypatch):
    import superrad.ring as ring

    real = ring.ring_matrix

    def skewed(spec, model, field, rtol):
        jp = real(spec, model, field, rtol)
        return jp + 0.1j * (model is InteractionModel.RWA) * (jp != 0)

    monkeypatch.setattr(ring, "ring_matrix", skewed)
    with pytest.raises(AssertionError):
        ring.certify_ring_rwa_invariance(RingSpec(5, 0.5))


def test_line_is_not_invariant():
    worst = max(rate_gap(line(3, s)) for s in np.linspace(0.1, 2.0, 20))
    assert worst > 1e-3


def test_scalar_ring_is_invariant():
    rep = certify_ring_rwa_invariance(RingSpec(6, 0.3), FieldModel.SCALAR)
    assert rep.max_rate_difference < 1e-9


def test_ring_spec_validation():
    with pytest.raises(ValueError):
        RingSpec(2, 1.0)
    with pytest.raises(ValueError):
        RingSpec(4, -1.0)
    with pytest.raises(ValueError):
        RingSpec(4, 1.0, "diagonal")
