"""Collective resonances of coupled emitters.

Resonances sit at ``omega_l = Omega + X + nu_l`` with ``nu_l`` the eigenvalues
of ``J'`` (plus a diagonal of detunings for non-identical emitters).  With
``X = -i`` in units of ``gamma`` the collective decay rate of mode ``l`` is
``1 - Im nu_l`` and its level shift is ``Re nu_l``.
"""

from dataclasses import dataclass, field
from enum import Enum
import math

import numpy as np

from .errors import EigenSolverError

__all__ = [
    "CollectiveMode",
    "ModeBranch",
    "CrossingKind",
    "CrossingResult",
    "DEFAULT_GAP_THRESHOLD",
    "two_atom_identical",
    "two_atom_detuned",
    "collective_modes",
    "decay_rates",
    "rate_discrepancy",
    "track_modes",
    "classify_crossing",
    "two_atom_spectrum",
    "rayleigh_visible",
    "cooperativity",
]

SELF_INTERACTION = -1j
CONTINUITY_MIN = 0.5
# Gap scale below which a local minimum of the decay-rate gap counts as an
# avoided crossing.  The 50-degree triangle's exact-model gap is about 0.26
# gamma, so the default sits well above it.
DEFAULT_GAP_THRESHOLD = 0.5
_RESIDUAL_TOL = 1e-9
_DEGENERACY_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class CollectiveMode:
    """One collective resonance; ``eigenvalue`` is ``nu`` in units of gamma."""

    eigenvalue: complex
    eigenvector: np.ndarray

    @property
    def shift(self):
        return self.eigenvalue.real

    @property
    def decay(self):
        return 1.0 - self.eigenvalue.imag

    def __repr__(self):
        return f"CollectiveMode(shift={self.shift:.6g}, decay={self.decay:.6g})"


def _fix_phase(v):
    # largest component real and positive; ties go to the lowest index
    mags = np.abs(v)
    k = int(np.flatnonzero(mags >= mags.max() * (1 - 1e-12))[0])
    return v * (abs(v[k]) / v[k])


def _unit(v):
    v = np.asarray(v, dtype=complex)
    return _fix_phase(v / np.linalg.norm(v))


def two_atom_identical(J):
    """Modes ``nu = +J`` (symmetric) and ``nu = -J`` (antisymmetric)."""
    J = complex(J)
    plus = CollectiveMode(J, _unit([1.0, 1.0]))
    minus = CollectiveMode(-J, _unit([1.0, -1.0]))
    return plus, minus


def _principal_sqrt(z):
    r = complex(np.sqrt(complex(z)))
    if r.real == 0.0 and r.imag < 0.0:
        r = -r
    return r


def two_atom_detuned(J, delta):
    """Modes ``nu = +-sqrt(delta**2 + J**2)`` of a detuned pair.

    ``delta`` is half the difference of the two transition frequencies.  The
    principal square root labels the ``+`` mode, so labels can swap along a
    sweep; use :func:`track_modes` when continuity matters.
    """
    J = complex(J)
    delta = float(delta)
    root = _principal_sqrt(delta * delta + J * J)
    modes = []
    for nu in (root, -root):
        # eigenvector of [[delta, J], [J, -delta]]
        v = np.array([J, nu - delta])
        if np.linalg.norm(v) < 1e-14 * max(1.0, abs(nu), abs(delta)):
            v = np.array([nu + delta, J])
        if np.linalg.norm(v) == 0.0:
            v = np.array([1.0, 0.0])
        modes.append(CollectiveMode(nu, _unit(v)))
    return modes[0], modes[1]


def _check_interaction_matrix(jp):
    jp = np.asarray(jp, dtype=complex)
    if jp.ndim != 2 or jp.shape[0] != jp.shape[1] or jp.shape[0] < 1:
        raise ValueError(f"interaction matrix must be square, got shape {jp.shape}")
    if not np.all(np.isfinite(jp)):
        raise ValueError("interaction matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(jp))))
    if np.max(np.abs(jp - jp.T)) > 1e-12 * scale:
        raise ValueError("interaction matrix must be complex symmetric")
    if np.max(np.abs(np.diag(jp))) > 1e-12 * scale:
        raise ValueError("interaction matrix must have a zero diagonal")
    return jp


def collective_modes(jp, detunings=None):
    """Eigen-decompose ``J' + diag(detunings)``.

    Parameters
    ----------
    jp : (N, N) array_like
        Complex symmetric, zero-diagonal interaction matrix in units of gamma.
    detunings : sequence of float, optional
        Per-emitter transition offsets in units of gamma.

    Returns
    -------
    list of CollectiveMode
        Sorted by decreasing decay rate, then by shift.  Eigenvectors have
        unit norm and a fixed phase convention.

    Raises
    ------
    EigenSolverError
        If LAPACK fails or an eigenpair misses the residual bound
        ``||M v - nu v|| <= 1e-9 ||M||``.
    """
    jp = _check_interaction_matrix(jp)
    m = jp.copy()
    if detunings is not None:
        d = np.asarray(detunings, dtype=float)
        if d.shape != (jp.shape[0],):
            raise ValueError(f"expected {jp.shape[0]} detunings, got shape {d.shape}")
        m[np.diag_indices_from(m)] = d
    try:
        w, v = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"eigensolver failed: {exc}") from exc
    norm = max(float(np.linalg.norm(m, 2)), np.finfo(float).tiny)
    modes = []
    for k in range(len(w)):
        vec = _unit(v[:, k])
        if np.linalg.norm(m @ vec - w[k] * vec) > _RESIDUAL_TOL * norm:
            raise EigenSolverError(f"eigenpair {k} fails the residual check")
        modes.append(CollectiveMode(complex(w[k]), vec))
    modes.sort(key=lambda md: (-md.decay, md.shift))
    return modes


def decay_rates(jp, detunings=None):
    """Collective decay rates in units of gamma, largest first."""
    return np.array([md.decay for md in collective_modes(jp, detunings)])


def rate_discrepancy(rates_a, rates_b):
    """Largest rate difference after pairing both spectra in sorted order.

    Sorted pairing minimizes the largest pairwise difference, so this is the
    model discrepancy independent of how modes are labelled.
    """
    a = np.sort(np.asarray(rates_a, dtype=float))
    b = np.sort(np.asarray(rates_b, dtype=float))
    if a.shape != b.shape:
        raise ValueError("rate spectra have different sizes")
    return float(np.max(np.abs(a - b)))


@dataclass(eq=False)
class ModeBranch:
    """A mode followed through a parameter sweep by eigenvector continuity.

    ``overlaps[k]`` is ``|<v_k, v_k+1>|`` between consecutive points; steps
    where it drops below 0.5 are listed in ``discontinuities``.
    """

    params: np.ndarray
    modes: list
    overlaps: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def eigenvalues(self):
        return np.array([md.eigenvalue for md in self.modes])

    @property
    def decay(self):
        return np.array([md.decay for md in self.modes])

    @property
    def shift(self):
        return np.array([md.shift for md in self.modes])

    @property
    def discontinuities(self):
        return [int(k) for k in np.flatnonzero(self.overlaps < CONTINUITY_MIN)]

    def window(self, lo, hi):
        """Sub-branch restricted to ``lo <= param <= hi``."""
        idx = np.flatnonzero((self.params >= lo) & (self.params <= hi))
        if idx.size == 0:
            raise ValueError(f"no sweep points in [{lo}, {hi}]")
        a, b = int(idx[0]), int(idx[-1])
        return ModeBranch(self.params[a:b + 1], self.modes[a:b + 1], self.overlaps[a:b])


def _clusters(w, tol):
    order = np.argsort(w.real, kind="stable")
    groups = []
    for k in order:
        for g in groups:
            if abs(w[g[0]] - w[k]) <= tol:
                g.append(int(k))
                break
        else:
            groups.append([int(k)])
    return groups


def _match(prev, current, scale):
    """Assign each previous branch a mode of ``current``.

    Degenerate eigenvalues are matched on their invariant subspace: the
    branch vector is projected into it, so the choice of basis returned by
    the eigensolver does not matter.
    """
    w = np.array([md.eigenvalue for md in current])
    vecs = np.array([md.eigenvector for md in current]).T
    groups = _clusters(w, _DEGENERACY_TOL * scale)
    bases = [np.linalg.qr(vecs[:, g])[0] for g in groups]

    candidates = []
    for b, p in enumerate(prev):
        pv = p.eigenvector
        for c, (g, q) in enumerate(zip(groups, bases)):
            weight = float(np.linalg.norm(q.conj().T @ pv))
            dist = min(abs(w[k] - p.eigenvalue) for k in g)
            candidates.append((-weight, dist, b, c))
    candidates.sort()

    free = {c: list(g) for c, g in enumerate(groups)}
    taken = {c: [] for c in range(len(groups))}
    assigned = [None] * len(prev)
    overlaps = np.zeros(len(prev))
    for _, _, b, c in candidates:
        if assigned[b] is not None or not free[c]:
            continue
        p = prev[b]
        k = min(free[c], key=lambda kk: abs(w[kk] - p.eigenvalue))
        free[c].remove(k)
        if len(groups[c]) == 1:
            vec = vecs[:, k]
        else:
            q = bases[c]
            vec = q @ (q.conj().T @ p.eigenvector)
            for u in taken[c]:
                vec = vec - u * (u.conj() @ vec)
            if np.linalg.norm(vec) < 1e-8:
                # branch has no weight left in the subspace; take any unused direction
                for col in q.T:
                    cand = col.copy()
                    for u in taken[c]:
                        cand = cand - u * (u.conj() @ cand)
                    if np.linalg.norm(cand) > 1e-8:
                        vec = cand
                        break
            vec = vec / np.linalg.norm(vec)
            taken[c].append(vec)
        ov = complex(np.vdot(p.eigenvector, vec))
        if abs(ov) > 0:
            vec = vec * (abs(ov) / ov)  # align phase with the previous point
        overlaps[b] = abs(ov)
        assigned[b] = CollectiveMode(complex(w[k]), vec)
    return assigned, overlaps


def track_modes(matrices, params, detunings=None):
    """Follow every collective mode through a sweep.

    Parameters
    ----------
    matrices : sequence of (N, N) arrays
        Interaction matrices ``J'`` at each sweep point.
    params : sequence of float
        Sweep parameter values, one per matrix; they are sorted ascending.
    detunings : array_like, optional
        Per-emitter detunings, either fixed, shape ``(N,)``, or one row per
        sweep point, shape ``(P, N)``.

    Returns
    -------
    list of ModeBranch
        One branch per mode, ordered by decay rate at the first point.
    """
    params = np.asarray(params, dtype=float)
    if len(matrices) != len(params):
        raise ValueError("need one parameter value per matrix")
    if len(params) < 2:
        raise ValueError("a sweep needs at least 2 points")
    order = np.argsort(params, kind="stable")
    params = params[order]
    mats = [np.asarray(matrices[k]) for k in order]
    n = mats[0].shape[0]
    if any(m.shape != (n, n) for m in mats):
        raise ValueError("all matrices in a sweep must have the same size")
    if detunings is None:
        dets = [None] * len(mats)
    else:
        d = np.asarray(detunings, dtype=float)
        if d.ndim == 1:
            dets = [d] * len(mats)
        elif d.shape == (len(mats), n):
            dets = [d[k] for k in order]
        else:
            raise ValueError(f"detunings must have shape ({n},) or ({len(mats)}, {n})")

    first = collective_modes(mats[0], dets[0])
    paths = [[md] for md in first]
    steps = [[] for _ in first]
    for m, d in zip(mats[1:], dets[1:]):
        current = collective_modes(m, d)
        scale = max(1.0, float(np.max(np.abs(m))))
        prev = [p[-1] for p in paths]
        nxt, ov = _match(prev, current, scale)
        for b in range(n):
            paths[b].append(nxt[b])
            steps[b].append(ov[b])
    return [ModeBranch(params.copy(), p, np.array(o)) for p, o in zip(paths, steps)]


class CrossingKind(str, Enum):
    CROSSING = "crossing"
    AVOIDED = "avoided_crossing"
    NEITHER = "neither"


@dataclass(frozen=True)
class CrossingResult:
    kind: CrossingKind
    location: float = math.nan
    gap: float = math.nan


def classify_crossing(b1, b2, threshold=DEFAULT_GAP_THRESHOLD):
    """Classify the decay-rate topology of two tracked branches.

    * ``CROSSING`` if the gap ``decay1 - decay2`` changes sign between two
      adjacent grid points while both branches stay continuous there; the
      location is the linearly interpolated zero.
    * ``AVOIDED`` if ``|gap|`` has a positive interior local minimum below
      ``threshold`` (in units of gamma); the smallest such minimum is
      reported.
    * ``NEITHER`` otherwise.
    """
    if not np.array_equal(b1.params, b2.params):
        raise ValueError("branches were tracked on different parameter grids")
    x = b1.params
    gap = b1.decay - b2.decay
    for k in range(len(x) - 1):
        g0, g1 = gap[k], gap[k + 1]
        flips = g0 * g1 < 0 or (g0 == 0.0 and k > 0 and gap[k - 1] * g1 < 0)
        if not flips:
            continue
        if b1.overlaps[k] >= CONTINUITY_MIN and b2.overlaps[k] >= CONTINUITY_MIN:
            loc = x[k] - g0 * (x[k + 1] - x[k]) / (g1 - g0) if g1 != g0 else x[k]
            return CrossingResult(CrossingKind.CROSSING, float(loc), 0.0)

    mag = np.abs(gap)
    best = None
    for k in range(1, len(x) - 1):
        if mag[k] < mag[k - 1] and mag[k] <= mag[k + 1] and 0 < mag[k] < threshold:
            if best is None or mag[k] < mag[best]:
                best = k
    if best is not None:
        return CrossingResult(CrossingKind.AVOIDED, float(x[best]), float(mag[best]))
    return CrossingResult(CrossingKind.NEITHER)


def two_atom_spectrum(omega_grid, J, delta=0.0):
    """Resonant factor ``|D(omega)|**-2`` of the two-atom source term.

    ``D = (omega - delta - X)(omega + delta - X) - J**2`` with ``X = -i``;
    ``omega`` is measured from the mean observed transition frequency in
    units of gamma.
    """
    w = np.asarray(omega_grid, dtype=float)
    if not np.all(np.isfinite(w)):
        raise ValueError("frequency grid must be finite")
    J = complex(J)
    d = (w - delta - SELF_INTERACTION) * (w + delta - SELF_INTERACTION) - J * J
    return 1.0 / np.abs(d) ** 2


def rayleigh_visible(J):
    """Whether the split doublet is resolved: ``|Re J| >= 1`` (units of gamma).

    The peaks sit ``2 |Re J|`` apart and their half widths add up to ``2``.
    With the sign convention used here ``Re J`` is negative for z-z pairs in
    the near field, hence the modulus.
    """
    return abs(complex(J).real) >= 1.0


def cooperativity(decay_rate):
    """``C = (gamma_c - gamma) / gamma`` for a rate given in units of gamma."""
    decay_rate = float(decay_rate)
    if not decay_rate >= 0.0:
        raise ValueError(f"decay rate must be non-negative, got {decay_rate!r}")
    return decay_rate - 1.0
