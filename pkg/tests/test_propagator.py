import math

import numpy as np
import pytest

from superrad.propagator import (
    FieldModel,
    InteractionModel,
    SeparationGeometry,
    dyadic_green,
    dyadic_rwa,
    project,
    propagator,
    rwa_error,
    scalar_green,
    scalar_rwa,
)
from superrad.specfun import integral_In

X = (1.0, 0.0, 0.0)
Z = (0.0, 0.0, 1.0)


def test_scalar_green_at_pi():
    g = scalar_green(math.pi)
    assert g.real == pytest.approx(1.0 / (4 * math.pi**2), abs=1e-15)
    assert g.real == pytest.approx(0.025330, abs=1e-6)
    assert abs(g.imag) < 1e-17


def test_scalar_green_at_half_pi():
    g = scalar_green(math.pi / 2)
    assert abs(g.real) < 1e-17
    assert g.imag == pytest.approx(-1.0 / (2 * math.pi**2), rel=1e-14)


@pytest.mark.parametrize("s", [0.01, 0.3, 1.0, 7.5, 120.0])
def test_scalar_green_imaginary_part(s):
    assert scalar_green(s).imag == pytest.approx(-math.sin(s) / (4 * math.pi * s), rel=1e-13, abs=1e-18)


@pytest.mark.parametrize("s", [0.01, 0.5, 1.0, 3.0, 40.0])
def test_scalar_rwa_keeps_imaginary_part(s):
    assert scalar_rwa(s).imag == scalar_green(s).imag


def test_scalar_error_term_at_unit_distance():
    err = rwa_error(1.0, FieldModel.SCALAR)
    assert err == pytest.approx(-integral_In(2, 1.0) / (2 * math.pi) ** 2, rel=1e-12)
    assert err == pytest.approx(-0.37855037576419814 / (2 * math.pi) ** 2, rel=1e-10)


def test_scalar_ten_percent_point():
    # Re[(K_rwa - G)/G] falls to 0.1 between 0.85 and 0.89
    def rel(s):
        return ((scalar_rwa(s) - scalar_green(s)) / scalar_green(s)).real

    assert rel(0.85) > 0.1 > rel(0.89)


def test_zz_projection_has_no_farfield_term():
    for s in (0.2, 1.0, 5.0, 30.0):
        g = project(dyadic_green(SeparationGeometry.along_z(s)), Z, Z)
        want = np.exp(1j * s) / (2 * math.pi * s) * (1j / s - 1 / s**2)
        assert g == pytest.approx(want, rel=1e-13)


def test_xx_projection():
    for s in (0.2, 1.0, 5.0):
        g = project(dyadic_green(SeparationGeometry.along_z(s)), X, X)
        want = -np.exp(1j * s) / (4 * math.pi * s) * (1 + 1j / s - 1 / s**2)
        assert g == pytest.approx(want, rel=1e-13)


def test_dyads_are_symmetric():
    geom = SeparationGeometry.between((0, 0, 0), (0.3, -0.7, 0.2))
    for d in (dyadic_green(geom), dyadic_rwa(geom)):
        np.testing.assert_allclose(d, d.T, rtol=0, atol=1e-15)


@pytest.mark.parametrize("s", [1e-3, 0.1, 1.0, 4.0, 25.0])
def test_dyadic_rwa_keeps_imaginary_part(s):
    geom = SeparationGeometry.between((0, 0, 0), (s * 0.6, 0.0, s * 0.8))
    np.testing.assert_array_equal(dyadic_rwa(geom).imag, dyadic_green(geom).imag)


def test_nearfield_factor_one_half():
    geom = SeparationGeometry.along_z(1e-3)
    k, g = dyadic_rwa(geom), dyadic_green(geom)
    for mu in (X, Z):
        ratio = project(k, mu, mu).real / project(g, mu, mu).real
        assert ratio == pytest.approx(0.5, rel=0.01)


def test_farfield_agreement():
    geom = SeparationGeometry.along_z(50.0)
    k = project(dyadic_rwa(geom), X, X)
    g = project(dyadic_green(geom), X, X)
    assert abs(k - g) < 1e-4 * abs(g)


def test_vector_error_scales_as_inverse_cube():
    a = rwa_error(SeparationGeometry.along_z(1e-3))
    b = rwa_error(SeparationGeometry.along_z(2e-3))
    assert a[2, 2] / b[2, 2] == pytest.approx(8.0, rel=0.01)


def test_scalar_error_scales_as_inverse_square():
    a = rwa_error(1e-4, FieldModel.SCALAR)
    b = rwa_error(2e-4, FieldModel.SCALAR)
    assert a / b == pytest.approx(4.0, rel=1e-3)
    # relative to the exact 1/s propagator the error keeps growing
    assert abs(a) / abs(scalar_green(1e-4)) > 1.9 * abs(b) / abs(scalar_green(2e-4))


@pytest.mark.parametrize("field", list(FieldModel))
def test_error_is_real(field):
    out = rwa_error(SeparationGeometry.along_z(0.7), field)
    assert np.isrealobj(out)


def test_project_identities():
    rr = np.outer(Z, Z)
    assert project(np.eye(3), X, X) == 1.0
    assert project(np.eye(3) - 3 * rr, Z, Z) == -2.0
    assert project(np.eye(3) - rr, Z, Z) == 0.0


def test_project_rejects_non_unit():
    with pytest.raises(ValueError):
        project(np.eye(3), (1.0, 1.0, 0.0), X)


def test_geometry_validation():
    with pytest.raises(ValueError):
        SeparationGeometry(0.0, Z)
    with pytest.raises(ValueError):
        SeparationGeometry(1.0, (0.0, 0.0, 1.1))
    with pytest.raises(ValueError):
        SeparationGeometry.between((1, 2, 3), (1, 2, 3))


def test_dispatch():
    geom = SeparationGeometry.along_z(0.9)
    assert np.array_equal(propagator(geom, "exact"), dyadic_green(geom))
    assert np.array_equal(propagator(geom, InteractionModel.RWA), dyadic_rwa(geom))
    assert propagator(geom, "rwa", "scalar") == scalar_rwa(0.9)
    with pytest.raises(ValueError):
        propagator(geom, "semiclassical")
