import math

import numpy as np
import pytest
from scipy.special import sici

from superrad.errors import QuadratureError
from superrad.specfun import (
    In_farfield_asymptote,
    In_nearfield_asymptote,
    integral_In,
    integrals,
)

from _simpson import simpson_In

# (s, I0, I1, I2) from the interval-doubling Simpson reference in _simpson.py,
# converged to 1e-12 relative; frozen so the suite does not depend on it.
GOLDEN = [
    (1e-3, 1563.4650031433623, 6.332106494876143, 0.998436534996857),
    (3e-3, 517.3645026780492, 5.236609413676024, 0.9953437194758975),
    (1e-2, 152.04392192982374, 4.043385827376735, 0.9847956078070177),
    (3e-2, 48.407689515752466, 2.97446601912467, 0.9564330794358227),
    (0.1, 12.910047283091009, 1.8660764089090887, 0.8708995271690899),
    (0.3, 3.412078411535505, 0.9961666690222356, 0.6929129429618113),
    (1.0, 0.6214496242358191, 0.3433779615564174, 0.37855037576419814),
    (3.0, 0.09731923689736091, 0.07922152116436054, 0.12412686792377016),
    (10.0, 0.009819103501017064, 0.009488539016354665, 0.01808964989829859),
    (30.0, 0.0011086738620195492, 0.0011038611810884114, 0.002193524182429476),
    (100.0, 9.998002392840077e-05, 9.994011949958606e-05, 0.0001997607160038244),
    (1e3, 9.99998000024027e-07, 9.999940001199894e-07, 1.99997600071997e-06),
]


def _closed_form(s):
    # I0, I1, I2 through the sine and cosine integrals
    si, ci = sici(s)
    f = ci * math.sin(s) - (si - math.pi / 2) * math.cos(s)
    g = -ci * math.cos(s) - (si - math.pi / 2) * math.sin(s)
    return f / s, g, 1.0 - s * f


@pytest.mark.parametrize("s, i0, i1, i2", GOLDEN)
def test_golden_values(s, i0, i1, i2):
    got = integrals(s)
    for g, want in zip(got, (i0, i1, i2)):
        assert g == pytest.approx(want, rel=1e-10)


@pytest.mark.parametrize("n, s", [(0, 0.02), (1, 1.0), (2, 5.0), (1, 200.0)])
def test_simpson_reference_agrees(n, s):
    assert integral_In(n, s) == pytest.approx(simpson_In(n, s), rel=1e-10)


@pytest.mark.parametrize("s", [1e-3, 0.05, 0.5, 1.0, 2.0, 8.0])
def test_closed_form_cross_check(s):
    # the closed form cancels badly at large s, so only moderate s is used
    for got, want in zip(integrals(s), _closed_form(s)):
        assert got == pytest.approx(want, rel=1e-9)


def test_order_one_at_unit_distance():
    assert integral_In(1, 1.0) == pytest.approx(0.3433779615564174, rel=1e-12)


def test_order_two_at_tiny_distance():
    assert integral_In(2, 1e-8) == pytest.approx(1.0, abs=1e-7)


def test_order_zero_nearfield():
    # the leading correction is s ln s, about -3% at s = 0.01, so the 1% band
    # is reached only below s ~ 2e-3
    assert 1e-3 * integral_In(0, 1e-3) == pytest.approx(math.pi / 2, rel=0.01)
    assert 0.01 * integral_In(0, 0.01) == pytest.approx(1.5204392192982374, rel=1e-10)


def test_recurrence_on_log_grid():
    for s in np.logspace(-3, 3, 40):
        i0, _, i2 = integrals(s)
        assert abs(i2 + s * s * i0 - 1.0) < 1e-10


def test_farfield_ratio_at_fifty():
    for n in (0, 1, 2):
        assert abs(integral_In(n, 50.0) / In_farfield_asymptote(n, 50.0) - 1.0) < 0.01


def test_nearfield_asymptote_values():
    assert In_nearfield_asymptote(0, 0.5) == pytest.approx(math.pi)
    assert In_nearfield_asymptote(1, 0.1) == pytest.approx(2.302585, abs=1e-6)
    assert In_nearfield_asymptote(2, 3.7) == 1.0


def test_farfield_asymptote_values():
    assert In_farfield_asymptote(2, 100.0) == pytest.approx(2e-4)
    assert In_farfield_asymptote(0, 10.0) == pytest.approx(0.01)


def test_log_asymptote_of_order_one():
    # slow O(1/ln s) approach, so only the trend is checked
    errs = [abs(integral_In(1, s) / -math.log(s) - 1.0) for s in (1e-3, 1e-6, 1e-9)]
    assert errs[0] > errs[1] > errs[2]


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan, "x", None])
def test_rejects_bad_distance(bad):
    with pytest.raises(ValueError):
        integrals(bad)


@pytest.mark.parametrize("n", [3, -1, 1.5, True])
def test_rejects_bad_order(n):
    with pytest.raises(ValueError):
        integral_In(n, 1.0)


def test_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        integrals(1.0, rtol=0.0)


def test_unreachable_tolerance_raises():
    with pytest.raises(QuadratureError):
        integrals(1.2345, rtol=1e-18)
