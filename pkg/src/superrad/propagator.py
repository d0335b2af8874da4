"""Free-space propagators in the exact and rotating-wave models.

Everything is normalized by ``k0``: lengths enter only through ``s = k0 R``
and every returned propagator is ``K / k0``.  The exact propagator is the
classical Green function; the RWA propagator differs from it by a purely real
error term built from the :mod:`superrad.specfun` integrals.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .errors import NumericalError
from .specfun import DEFAULT_RTOL, check_distance, integrals

__all__ = [
    "FieldModel",
    "InteractionModel",
    "SeparationGeometry",
    "scalar_green",
    "scalar_rwa",
    "dyadic_green",
    "dyadic_rwa",
    "rwa_error",
    "propagator",
    "project",
    "UNIT_TOL",
]

UNIT_TOL = 1e-12
_IMAG_TOL = 1e-12
_EYE = np.eye(3)


class FieldModel(str, Enum):
    SCALAR = "scalar"
    VECTOR = "vector"


class InteractionModel(str, Enum):
    EXACT = "exact"
    RWA = "rwa"


def unit_vector(v, name="vector"):
    """Return ``v`` as a float array, raising unless it has unit length."""
    v = np.asarray(v, dtype=float)
    if v.shape != (3,) or not np.all(np.isfinite(v)):
        raise ValueError(f"{name} must be a finite 3-vector, got {v!r}")
    if abs(np.linalg.norm(v) - 1.0) > UNIT_TOL:
        raise ValueError(f"{name} must have unit length, |{name}| = {np.linalg.norm(v)!r}")
    return v


@dataclass(frozen=True)
class SeparationGeometry:
    """Dimensionless separation ``s = k0 R`` and unit direction ``rhat``."""

    s: float
    rhat: tuple

    def __post_init__(self):
        object.__setattr__(self, "s", check_distance(self.s))
        object.__setattr__(self, "rhat", tuple(unit_vector(self.rhat, "rhat")))

    @classmethod
    def between(cls, r1, r2):
        """Geometry of the vector ``r2 - r1`` (positions in units of 1/k0)."""
        d = np.asarray(r2, dtype=float) - np.asarray(r1, dtype=float)
        s = float(np.linalg.norm(d))
        if s == 0.0:
            raise ValueError("coincident points have no separation geometry")
        return cls(s, tuple(d / s))

    @classmethod
    def along_z(cls, s):
        """Separation along z, the axis used by the x-x and z-z constellations."""
        return cls(s, (0.0, 0.0, 1.0))

    @property
    def outer(self):
        r = np.asarray(self.rhat)
        return np.outer(r, r)

    def reversed(self):
        return SeparationGeometry(self.s, tuple(-np.asarray(self.rhat)))


def scalar_green(s):
    """Scalar Helmholtz Green function ``-exp(i s) / (4 pi s)``."""
    s = check_distance(s)
    return -np.exp(1j * s) / (4.0 * math.pi * s)


def _scalar_error(s, rtol):
    return -integrals(s, rtol)[2] / (2.0 * math.pi * s) ** 2


def scalar_rwa(s, rtol=DEFAULT_RTOL):
    """Scalar RWA propagator: the Green function plus a real correction."""
    s = check_distance(s)
    return scalar_green(s) + _scalar_error(s, rtol)


def _dyads(geom):
    rr = geom.outer
    return _EYE - rr, _EYE - 3.0 * rr


def dyadic_green(geom):
    """Free-space dyadic Green function ``G0 / k0`` (3x3 complex)."""
    s = geom.s
    transverse, near = _dyads(geom)
    pref = -np.exp(1j * s) / (4.0 * math.pi * s)
    return pref * (transverse + (1j / s - 1.0 / (s * s)) * near)


def _dyadic_error(geom, rtol):
    s = geom.s
    i0, i1, i2 = integrals(s, rtol)
    transverse, near = _dyads(geom)
    denom = (2.0 * math.pi * s) ** 2
    return -(i2 / denom) * transverse - ((i1 + i0) / denom) * near


def dyadic_rwa(geom, rtol=DEFAULT_RTOL):
    """RWA dyadic propagator ``K+ / k0``."""
    return dyadic_green(geom) + _dyadic_error(geom, rtol)


def rwa_error(geom, field=FieldModel.VECTOR, rtol=DEFAULT_RTOL):
    """Real-valued difference ``K_RWA - G`` (which equals ``-K-``).

    ``geom`` may be a :class:`SeparationGeometry` or, for the scalar field, a
    bare distance.  The difference is recomputed from the two complex
    propagators, and a residual imaginary part above ``1e-12`` of its
    magnitude is treated as a quadrature failure.
    """
    field = FieldModel(field)
    if field is FieldModel.SCALAR:
        s = geom.s if isinstance(geom, SeparationGeometry) else geom
        diff = np.asarray(scalar_rwa(s, rtol) - scalar_green(s))
    else:
        diff = dyadic_rwa(geom, rtol) - dyadic_green(geom)
    scale = float(np.max(np.abs(diff)))
    if np.max(np.abs(diff.imag)) > _IMAG_TOL * max(scale, np.finfo(float).tiny):
        raise NumericalError("RWA error term acquired an imaginary part")
    out = diff.real
    return float(out) if out.ndim == 0 else out


def propagator(geom, model, field=FieldModel.VECTOR, rtol=DEFAULT_RTOL):
    """Dispatch to one of the four propagators by model and field type."""
    model = InteractionModel(model)
    field = FieldModel(field)
    if field is FieldModel.SCALAR:
        s = geom.s if isinstance(geom, SeparationGeometry) else geom
        return scalar_green(s) if model is InteractionModel.EXACT else scalar_rwa(s, rtol)
    if model is InteractionModel.EXACT:
        return dyadic_green(geom)
    return dyadic_rwa(geom, rtol)


def project(d, mu1, mu2):
    """Bilinear form ``mu1 . d . mu2`` for unit vectors ``mu1`` and ``mu2``."""
    mu1 = unit_vector(mu1, "mu1")
    mu2 = unit_vector(mu2, "mu2")
    return complex(mu1 @ np.asarray(d) @ mu2)
