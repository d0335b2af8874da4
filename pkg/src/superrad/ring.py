"""Rings of identical emitters with discrete rotational symmetry.

A regular N-gon whose dipoles share the ring symmetry has a circulant
interaction matrix.  Its eigenvalues are cosine sums of the first row with
real coefficients, so the purely real RWA error cannot leak into the
collective decay rates.
"""

from dataclasses import dataclass
from enum import Enum
import math

import numpy as np

from .collective import decay_rates, rate_discrepancy
from .emitters import EmitterSpec, interaction_matrix
from .propagator import FieldModel, InteractionModel
from .specfun import DEFAULT_RTOL, check_distance

__all__ = [
    "DipoleStyle",
    "RingSpec",
    "RingReport",
    "ring_emitters",
    "ring_matrix",
    "ring_eigenvalues_fourier",
    "certify_ring_rwa_invariance",
    "rate_gap",
]

_CIRCULANT_TOL = 1e-12


class DipoleStyle(str, Enum):
    OUT_OF_PLANE = "out_of_plane"
    RADIAL = "radial"
    TANGENTIAL = "tangential"


@dataclass(frozen=True)
class RingSpec:
    n: int
    radius: float
    dipole_style: DipoleStyle = DipoleStyle.OUT_OF_PLANE

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 3:
            raise ValueError(f"a ring needs an integer N >= 3, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "radius", check_distance(self.radius))
        object.__setattr__(self, "dipole_style", DipoleStyle(self.dipole_style))


def ring_emitters(spec):
    """Emitters at angles ``2 pi n / N`` in the xy plane, zero detuning."""
    out = []
    for k in range(spec.n):
        phi = 2.0 * math.pi * k / spec.n
        c, s = math.cos(phi), math.sin(phi)
        if spec.dipole_style is DipoleStyle.OUT_OF_PLANE:
            dip = (0.0, 0.0, 1.0)
        elif spec.dipole_style is DipoleStyle.RADIAL:
            dip = (c, s, 0.0)
        else:
            dip = (-s, c, 0.0)
        out.append(EmitterSpec((spec.radius * c, spec.radius * s, 0.0), dip))
    return out


def ring_matrix(spec, model=InteractionModel.EXACT, field=FieldModel.VECTOR, rtol=DEFAULT_RTOL):
    """Interaction matrix of the ring, verified to be circulant."""
    jp = interaction_matrix(ring_emitters(spec), model, field, rtol)
    n = spec.n
    scale = max(1.0, float(np.max(np.abs(jp))))
    for m in range(n):
        for k in range(n):
            if abs(jp[m, k] - jp[0, (k - m) % n]) > _CIRCULANT_TOL * scale:
                raise ValueError(f"ring interaction matrix is not circulant at ({m}, {k})")
    return jp


def ring_eigenvalues_fourier(first_row, n=None):
    """Bloch eigenvalues ``nu_k``, ``k = 0 .. N-1``, of a circulant ``J'``.

    ``first_row`` holds ``J_0n``; its first entry must vanish and it must be
    palindromic, ``J_0n == J_0,N-n``.  Results are in Bloch order, not sorted.
    """
    row = np.asarray(first_row, dtype=complex)
    n = len(row) if n is None else int(n)
    if row.shape != (n,) or n < 2:
        raise ValueError(f"first row must have length N={n}, got shape {row.shape}")
    scale = max(1.0, float(np.max(np.abs(row))))
    if abs(row[0]) > _CIRCULANT_TOL * scale:
        raise ValueError("first entry of the row (self term) must be zero")
    if np.max(np.abs(row[1:] - row[1:][::-1])) > _CIRCULANT_TOL * scale:
        raise ValueError("first row is not palindromic; the ring symmetry is broken")

    k = np.arange(n)[:, None]
    if n % 2 == 0:
        half = n // 2
        m = np.arange(1, half)[None, :]
        nu = (-1.0) ** k[:, 0] * row[half]
        if half > 1:
            nu = nu + 2.0 * (np.cos(2.0 * math.pi * m * k / n) @ row[1:half])
    else:
        m = np.arange(1, (n - 1) // 2 + 1)[None, :]
        nu = 2.0 * (np.cos(2.0 * math.pi * m * k / n) @ row[1:(n - 1) // 2 + 1])
    return np.asarray(nu, dtype=complex)


@dataclass(frozen=True)
class RingReport:
    spec: RingSpec
    max_rate_difference: float
    max_shift_difference: float
    eigenvalues_exact: np.ndarray
    eigenvalues_rwa: np.ndarray


def certify_ring_rwa_invariance(spec, field=FieldModel.VECTOR, tol=1e-9, rtol=DEFAULT_RTOL):
    """Compare Bloch-mode decay rates and shifts between the two models.

    The rates must agree to ``tol``; a violation means a bug in the library,
    since the cosine coefficients are real, and raises ``AssertionError``.
    The shifts are expected to differ.
    """
    ev = {}
    for model in InteractionModel:
        ev[model] = ring_eigenvalues_fourier(ring_matrix(spec, model, field, rtol)[0])
    ex, rw = ev[InteractionModel.EXACT], ev[InteractionModel.RWA]
    rate_diff = float(np.max(np.abs(ex.imag - rw.imag)))
    shift_diff = float(np.max(np.abs(ex.real - rw.real)))
    if rate_diff > tol:
        raise AssertionError(
            f"ring decay rates differ by {rate_diff:.3e} between models for {spec}"
        )
    return RingReport(spec, rate_diff, shift_diff, ex, rw)


def rate_gap(emitters, field=FieldModel.VECTOR, rtol=DEFAULT_RTOL):
    """Largest decay-rate difference between the RWA and exact models.

    Works for any configuration; zero (to solver precision) flags a
    candidate RWA-invariant geometry.
    """
    emitters = list(emitters)
    detunings = [e.detuning for e in emitters]
    rates = [
        decay_rates(interaction_matrix(emitters, model, field, rtol), detunings)
        for model in InteractionModel
    ]
    return rate_discrepancy(*rates)
