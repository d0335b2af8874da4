r"""Error integrals of the RWA propagator.

The counter-rotating part of the free-space propagator is expressed through

.. math::

    I_n(s) = \int_0^\infty \frac{u^n e^{-u}}{u^2 + s^2}\, du, \qquad n = 0, 1, 2,

with ``s = k0 R``.  All three orders are evaluated together on shared
quadrature nodes by :func:`integrals`.

The integrand has a Lorentzian peak of height ``1/s**2`` and width ``s`` at
the origin, so the half line is split at ``s``, ``1`` and ``10 (1 + s)``:

* ``[0, s]`` (when ``s < 1``) uses ``u = s tan(theta)``, which turns the
  Lorentzian into the smooth ``u**n exp(-u) / s``;
* ``[s, 1]`` (when ``s < 1``) uses ``u = s exp(t)``, flattening the ``1/u``
  decay of the shoulder;
* finite segments above ``max(s, 1)`` are integrated in ``u`` directly;
* the tail ``[10 (1 + s), inf)`` is done with Gauss-Laguerre after shifting
  the origin; it is bounded by ``exp(-10 (1 + s))``.

Each finite segment is refined adaptively: a 20-point and a 40-point
Gauss-Legendre estimate are compared, and the segment is bisected until they
agree to the relative tolerance.  The integrand is positive, so a local
relative criterion implies the same global relative accuracy.
"""

from functools import lru_cache
import math

import numpy as np

from .errors import QuadratureError

__all__ = [
    "DEFAULT_RTOL",
    "ORDERS",
    "integrals",
    "integral_In",
    "In_nearfield_asymptote",
    "In_farfield_asymptote",
]

DEFAULT_RTOL = 1e-10
ORDERS = (0, 1, 2)

_MAX_DEPTH = 60
_GL_LO = np.polynomial.legendre.leggauss(20)
_GL_HI = np.polynomial.legendre.leggauss(40)
_LAG_LO = np.polynomial.laguerre.laggauss(40)
_LAG_HI = np.polynomial.laguerre.laggauss(80)


def check_distance(s):
    """Validate a dimensionless distance and return it as a float."""
    try:
        s = float(s)
    except (TypeError, ValueError):
        raise ValueError(f"distance must be a real number, got {s!r}") from None
    if not math.isfinite(s) or s <= 0.0:
        raise ValueError(f"distance must be positive and finite, got {s!r}")
    return s


def _check_order(n):
    if isinstance(n, bool) or n not in ORDERS:
        raise ValueError(f"unsupported integral order {n!r}; expected one of {ORDERS}")
    return int(n)


def _powers(u):
    # rows: u**0, u**1, u**2
    return np.stack((np.ones_like(u), u, u * u))


def _gl(f, a, b, rule):
    x, w = rule
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * (f(mid + half * x) @ w)


def _adaptive(f, a, b, rtol):
    """Integrate a positive vector-valued ``f`` over ``[a, b]``."""
    total = np.zeros(3)
    stack = [(a, b, 0)]
    while stack:
        lo, hi, depth = stack.pop()
        coarse = _gl(f, lo, hi, _GL_LO)
        fine = _gl(f, lo, hi, _GL_HI)
        err = np.abs(fine - coarse)
        # absolute floor guards segments where an order underflows to zero
        if np.all(err <= rtol * np.abs(fine) + 1e-300):
            total += fine
            continue
        if depth >= _MAX_DEPTH:
            raise QuadratureError(
                f"adaptive quadrature did not converge on [{lo:.6g}, {hi:.6g}]"
            )
        mid = 0.5 * (lo + hi)
        stack.append((lo, mid, depth + 1))
        stack.append((mid, hi, depth + 1))
    return total


def _tail(s, start, rtol):
    def g(t):
        u = start + t
        return _powers(u) / (u * u + s * s)

    coarse = g(_LAG_LO[0]) @ _LAG_LO[1]
    fine = g(_LAG_HI[0]) @ _LAG_HI[1]
    if np.any(np.abs(fine - coarse) > max(rtol, 1e-8) * np.abs(fine)):
        raise QuadratureError(f"Gauss-Laguerre tail did not converge for s={s!r}")
    return math.exp(-start) * fine


@lru_cache(maxsize=8192)
def _integrals_cached(s, rtol):
    s2 = s * s
    pieces = np.zeros(3)

    if s < 1.0:
        def lorentz_core(theta):
            u = s * np.tan(theta)
            return _powers(u) * (np.exp(-u) / s)

        def shoulder(t):
            u = s * np.exp(t)
            return _powers(u) * (u * np.exp(-u) / (u * u + s2))

        pieces += _adaptive(lorentz_core, 0.0, math.pi / 4.0, rtol)
        pieces += _adaptive(shoulder, 0.0, -math.log(s), rtol)
        knots = [1.0]
    else:
        knots = [0.0, 1.0, s] if s > 1.0 else [0.0, 1.0]

    def plain(u):
        return _powers(u) * (np.exp(-u) / (u * u + s2))

    tail_start = 10.0 * (1.0 + s)
    knots.append(tail_start)
    for lo, hi in zip(knots[:-1], knots[1:]):
        pieces += _adaptive(plain, lo, hi, rtol)
    pieces += _tail(s, tail_start, rtol)
    return float(pieces[0]), float(pieces[1]), float(pieces[2])


def integrals(s, rtol=DEFAULT_RTOL):
    """Return ``(I0(s), I1(s), I2(s))`` to relative accuracy ``rtol``.

    Raises
    ------
    ValueError
        If ``s`` is not a positive finite number or ``rtol`` is not in (0, 1).
    QuadratureError
        If the adaptive refinement fails to converge.
    """
    s = check_distance(s)
    rtol = float(rtol)
    if not 0.0 < rtol < 1.0:
        raise ValueError(f"rtol must lie in (0, 1), got {rtol!r}")
    # the error estimate is the coarse rule's error; ask for a bit more so the
    # returned fine-rule value comfortably meets rtol
    return _integrals_cached(s, rtol * 0.1)


def integral_In(n, s, rtol=DEFAULT_RTOL):
    """Evaluate a single member ``I_n(s)`` of the error-integral family."""
    n = _check_order(n)
    return integrals(s, rtol)[n]


def In_nearfield_asymptote(n, s):
    """Leading small-``s`` behaviour: ``pi/(2s)``, ``-ln s`` and ``1``."""
    n = _check_order(n)
    s = check_distance(s)
    if n == 0:
        return math.pi / (2.0 * s)
    if n == 1:
        return -math.log(s)
    return 1.0


def In_farfield_asymptote(n, s):
    """Leading large-``s`` behaviour ``n!/s**2``."""
    n = _check_order(n)
    s = check_distance(s)
    return math.factorial(n) / (s * s)
