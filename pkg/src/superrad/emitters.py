"""Emitter configurations and their pairwise interactions.

Units: positions are ``k0 r`` and every energy or rate is in units of the
single-emitter amplitude decay rate ``gamma = -Im X``.  The interaction of two
emitters is

* vector field: ``J = 6 pi  mu1 . (K / k0) . mu2``
* scalar field: ``J = 4 pi  K / k0``

The prefactors make ``Im J -> -1`` for parallel dipoles as ``s -> 0``, i.e.
the mutual interaction approaches the self-interaction ``X = -i``.  All
quantities are taken at the common observable frequency (pole approximation),
which holds for detunings far below the optical frequency.
"""

from dataclasses import dataclass
import math

import numpy as np

from .propagator import (
    FieldModel,
    InteractionModel,
    SeparationGeometry,
    project,
    propagator,
    unit_vector,
)
from .specfun import DEFAULT_RTOL

__all__ = [
    "EmitterSpec",
    "VECTOR_PREFACTOR",
    "SCALAR_PREFACTOR",
    "self_interaction",
    "interaction",
    "interaction_ratio",
    "interaction_matrix",
    "pair_xx",
    "pair_zz",
    "triangle",
    "symmetric_triangle",
    "line",
]

VECTOR_PREFACTOR = 6.0 * math.pi
SCALAR_PREFACTOR = 4.0 * math.pi


@dataclass(frozen=True)
class EmitterSpec:
    """A point dipole emitter.

    Attributes
    ----------
    position : tuple of float
        Position in units of ``1/k0``.
    dipole : tuple of float
        Unit dipole orientation.
    detuning : float
        Transition frequency offset from the common reference, in units of
        ``gamma``.
    """

    position: tuple
    dipole: tuple = (0.0, 0.0, 1.0)
    detuning: float = 0.0

    def __post_init__(self):
        pos = np.asarray(self.position, dtype=float)
        if pos.shape != (3,) or not np.all(np.isfinite(pos)):
            raise ValueError(f"position must be a finite 3-vector, got {self.position!r}")
        object.__setattr__(self, "position", tuple(float(x) for x in pos))
        object.__setattr__(self, "dipole", tuple(float(x) for x in unit_vector(self.dipole, "dipole")))
        if not math.isfinite(self.detuning):
            raise ValueError(f"detuning must be finite, got {self.detuning!r}")
        object.__setattr__(self, "detuning", float(self.detuning))

    def scaled(self, factor):
        """Copy with the position multiplied by ``factor``."""
        return EmitterSpec(tuple(factor * x for x in self.position), self.dipole, self.detuning)

    def with_detuning(self, detuning):
        return EmitterSpec(self.position, self.dipole, detuning)


def self_interaction(model=InteractionModel.EXACT):
    """Renormalized self-interaction ``X / gamma``.

    The divergent real part is absorbed into the observed transition
    frequency in both models, leaving ``-i``.
    """
    InteractionModel(model)
    return -1j


def interaction(e1, e2, model=InteractionModel.EXACT, field=FieldModel.VECTOR, rtol=DEFAULT_RTOL):
    """Interaction ``J / gamma`` between two distinct emitters."""
    geom = SeparationGeometry.between(e1.position, e2.position)
    field = FieldModel(field)
    k = propagator(geom, model, field, rtol)
    if field is FieldModel.SCALAR:
        return complex(SCALAR_PREFACTOR * k)
    return VECTOR_PREFACTOR * project(k, e1.dipole, e2.dipole)


def interaction_ratio(e1, e2, field=FieldModel.VECTOR, rtol=DEFAULT_RTOL):
    """``(Re J_rwa / Re J_exact, |J_rwa / J_exact|**2)``.

    The first entry is NaN where ``Re J_exact`` vanishes exactly (likewise
    the second where ``J_exact == 0``), so undefined ratios never pass as
    large finite numbers.
    """
    exact = interaction(e1, e2, InteractionModel.EXACT, field, rtol)
    rwa = interaction(e1, e2, InteractionModel.RWA, field, rtol)
    re_ratio = rwa.real / exact.real if exact.real != 0.0 else math.nan
    mag2_ratio = abs(rwa) ** 2 / abs(exact) ** 2 if exact != 0 else math.nan
    return re_ratio, mag2_ratio


def interaction_matrix(emitters, model=InteractionModel.EXACT, field=FieldModel.VECTOR, rtol=DEFAULT_RTOL):
    """Zero-diagonal complex symmetric matrix ``J'`` of pairwise interactions."""
    emitters = list(emitters)
    n = len(emitters)
    if n < 2:
        raise ValueError(f"need at least 2 emitters, got {n}")
    positions = np.array([e.position for e in emitters])
    for i in range(n):
        for j in range(i + 1, n):
            if np.array_equal(positions[i], positions[j]):
                raise ValueError(f"emitters {i} and {j} share position {emitters[i].position}")
    jp = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(i + 1, n):
            jp[i, j] = jp[j, i] = interaction(emitters[i], emitters[j], model, field, rtol)
    return jp


def pair_xx(s, detuning=0.0):
    """Two emitters separated by ``s`` along z with dipoles along x.

    ``detuning`` is the half-splitting: the emitters sit at ``+detuning`` and
    ``-detuning``.
    """
    x = (1.0, 0.0, 0.0)
    return [EmitterSpec((0.0, 0.0, 0.0), x, detuning), EmitterSpec((0.0, 0.0, float(s)), x, -detuning)]


def pair_zz(s, detuning=0.0):
    """Two emitters separated by ``s`` along z with dipoles along z."""
    z = (0.0, 0.0, 1.0)
    return [EmitterSpec((0.0, 0.0, 0.0), z, detuning), EmitterSpec((0.0, 0.0, float(s)), z, -detuning)]


def triangle(side=1.0, rotation_deg=0.0):
    """Equilateral triangle in the xy plane with in-plane dipoles.

    The base runs along x and all dipoles point along y, perpendicular to
    the base, except the apex dipole which is turned in-plane by
    ``rotation_deg``.  Without rotation two of the three couplings are equal.
    """
    side = float(side)
    h = side * math.sqrt(3.0) / 2.0
    phi = math.pi / 2.0 + math.radians(rotation_deg)
    y = (0.0, 1.0, 0.0)
    return [
        EmitterSpec((0.0, 0.0, 0.0), y),
        EmitterSpec((side, 0.0, 0.0), y),
        EmitterSpec((side / 2.0, h, 0.0), (math.cos(phi), math.sin(phi), 0.0)),
    ]


def symmetric_triangle(side=1.0):
    """Equilateral triangle with out-of-plane dipoles: all couplings equal."""
    side = float(side)
    z = (0.0, 0.0, 1.0)
    return [
        EmitterSpec((0.0, 0.0, 0.0), z),
        EmitterSpec((side, 0.0, 0.0), z),
        EmitterSpec((side / 2.0, side * math.sqrt(3.0) / 2.0, 0.0), z),
    ]


def line(n, spacing=1.0, dipole=(1.0, 0.0, 0.0)):
    """``n`` equally spaced emitters along z with a common dipole."""
    if n < 2:
        raise ValueError(f"a line needs at least 2 emitters, got {n}")
    return [EmitterSpec((0.0, 0.0, k * float(spacing)), dipole) for k in range(n)]
