"""Declarative parameter sweeps and their result tables.

A scenario is a JSON-compatible tree.  Top-level keys:

``field_model``   ``"vector"`` (default) or ``"scalar"``
``models``        non-empty subset of ``["exact", "rwa"]`` (default both)
``emitters``      one emitter set (see below); or
``constellations`` mapping of column labels to emitter sets
``sweep``         ``{"parameter", "from", "to", "points", "spacing"}``
``outputs``       list of quantities (see :data:`QUANTITIES`)
``scale``         fixed position scale when not swept (default 1)
``detuning``      fixed detuning amplitude when not swept (optional)
``omega``         fixed probe frequency when not swept (default 0)
``mode_order``    ``"sorted"`` (default) or ``"tracked"``
``rtol``          quadrature tolerance (default 1e-10)
``description``   free text

An emitter set is a named preset string, a list of emitter objects
(``position``, ``dipole``, ``detuning``), or an object with exactly one of

* ``"preset"``: ``pair_xx``, ``pair_zz``, ``symmetric_triangle``,
  ``triangle`` (option ``rotation_deg``) or ``line`` (options ``n``,
  ``dipole``);
* ``"ring"``: ``{"n", "radius", "dipole_style"}``;
* ``"list"``: a list of emitter objects;

plus an optional ``detuning_pattern``.  When the scenario has a detuning
(fixed or swept) each emitter gets ``configured + detuning * pattern``; two
emitters default to the pattern ``[1, -1]``, so the detuning is the
half-splitting.  A ``scale`` sweep multiplies all positions.

Unknown keys are rejected with the dotted path of the offending field.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import csv
import hashlib
import io
import json
import math

import numpy as np

from . import __version__
from .collective import collective_modes, rate_discrepancy, track_modes, two_atom_spectrum
from .emitters import (
    EmitterSpec,
    interaction_matrix,
    line,
    pair_xx,
    pair_zz,
    symmetric_triangle,
    triangle,
)
from .errors import ConfigError, NumericalError
from .propagator import FieldModel, InteractionModel
from .ring import DipoleStyle, RingSpec, ring_emitters
from .specfun import DEFAULT_RTOL

__all__ = [
    "QUANTITIES",
    "Scenario",
    "ResultTable",
    "RowError",
    "load_scenario",
    "run_scenario",
    "list_presets",
    "preset_config",
]

QUANTITIES = (
    "re_J", "im_J", "re_ratio", "mag2_ratio", "re_rel_error",
    "rate_k", "shift_k", "spectrum", "rate_gap",
)
PER_MODEL = ("re_J", "im_J", "rate_k", "shift_k", "spectrum")
SWEEP_PARAMETERS = ("scale", "detuning", "omega")
SPACINGS = ("linear", "log")
MODE_ORDERS = ("sorted", "tracked")
SET_PRESETS = ("pair_xx", "pair_zz", "symmetric_triangle", "triangle", "line")

_TOP_KEYS = {
    "description", "field_model", "models", "emitters", "constellations", "sweep",
    "outputs", "scale", "detuning", "omega", "mode_order", "rtol",
}
_SWEEP_KEYS = {"parameter", "from", "to", "points", "spacing"}
_EMITTER_KEYS = {"position", "dipole", "detuning"}


class RowError(NumericalError):
    """Numerical failure at one grid point; aborts the run."""

    def __init__(self, row, param, cause):
        self.row = row
        self.param = param
        super().__init__(f"row {row} (param={param!r}): {cause}")


# ---------------------------------------------------------------- parsing

def _obj(value, path, allowed):
    if not isinstance(value, dict):
        raise ConfigError(path, f"expected an object, got {type(value).__name__}")
    extra = sorted(set(value) - set(allowed))
    if extra:
        where = f"{path}.{extra[0]}" if path else extra[0]
        raise ConfigError(where, "unknown key")
    return value


def _real(value, path, positive=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(path, f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(path, "must be finite")
    if positive and value <= 0.0:
        raise ConfigError(path, f"must be positive, got {value!r}")
    return value


def _int(value, path, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(path, f"expected an integer, got {value!r}")
    if value < minimum:
        raise ConfigError(path, f"must be >= {minimum}, got {value}")
    return value


def _choice(value, path, options):
    if value not in options:
        raise ConfigError(path, f"expected one of {list(options)}, got {value!r}")
    return value


def _vector(value, path):
    if not isinstance(value, list) or len(value) != 3:
        raise ConfigError(path, "expected a list of 3 numbers")
    return tuple(_real(x, f"{path}[{i}]") for i, x in enumerate(value))


def _emitter(value, path):
    value = _obj(value, path, _EMITTER_KEYS)
    if "position" not in value:
        raise ConfigError(f"{path}.position", "required")
    pos = _vector(value["position"], f"{path}.position")
    dip = _vector(value.get("dipole", [0.0, 0.0, 1.0]), f"{path}.dipole")
    det = _real(value.get("detuning", 0.0), f"{path}.detuning")
    try:
        return EmitterSpec(pos, dip, det)
    except ValueError as exc:
        raise ConfigError(path, str(exc)) from None


@dataclass(frozen=True)
class EmitterSet:
    """Emitters at unit scale plus the detuning pattern.

    ``source`` is the normalized config node, kept for serialization.
    """

    emitters: tuple
    pattern: tuple
    source: dict = field(compare=True)


def _emitter_set(value, path):
    if isinstance(value, str):
        value = {"preset": value}
    if isinstance(value, list):
        value = {"list": value}
    if not isinstance(value, dict):
        raise ConfigError(path, "expected a preset name, a list of emitters or an object")
    kinds = [k for k in ("preset", "ring", "list") if k in value]
    if len(kinds) != 1:
        raise ConfigError(path, "needs exactly one of 'preset', 'ring' or 'list'")
    kind = kinds[0]
    src = {}

    if kind == "preset":
        allowed = {"preset", "rotation_deg", "n", "dipole", "detuning_pattern"}
        _obj(value, path, allowed)
        name = _choice(value["preset"], f"{path}.preset", SET_PRESETS)
        src["preset"] = name
        opts = {"triangle": {"rotation_deg"}, "line": {"n", "dipole"}}.get(name, set())
        for key in ("rotation_deg", "n", "dipole"):
            if key in value and key not in opts:
                raise ConfigError(f"{path}.{key}", f"not an option of preset {name!r}")
        if name == "pair_xx":
            ems = pair_xx(1.0)
        elif name == "pair_zz":
            ems = pair_zz(1.0)
        elif name == "symmetric_triangle":
            ems = symmetric_triangle(1.0)
        elif name == "triangle":
            rot = _real(value.get("rotation_deg", 0.0), f"{path}.rotation_deg")
            src["rotation_deg"] = rot
            ems = triangle(1.0, rot)
        else:
            n = _int(value.get("n", 3), f"{path}.n", 2)
            dip = _vector(value.get("dipole", [1.0, 0.0, 0.0]), f"{path}.dipole")
            src["n"], src["dipole"] = n, list(dip)
            try:
                ems = line(n, 1.0, dip)
            except ValueError as exc:
                raise ConfigError(f"{path}.dipole", str(exc)) from None
    elif kind == "ring":
        _obj(value, path, {"ring", "detuning_pattern"})
        node = _obj(value["ring"], f"{path}.ring", {"n", "radius", "dipole_style"})
        for key in ("n", "radius"):
            if key not in node:
                raise ConfigError(f"{path}.ring.{key}", "required")
        n = _int(node["n"], f"{path}.ring.n", 3)
        radius = _real(node["radius"], f"{path}.ring.radius", positive=True)
        style = _choice(
            node.get("dipole_style", "out_of_plane"),
            f"{path}.ring.dipole_style",
            [s.value for s in DipoleStyle],
        )
        src["ring"] = {"n": n, "radius": radius, "dipole_style": style}
        ems = ring_emitters(RingSpec(n, radius, style))
    else:
        _obj(value, path, {"list", "detuning_pattern"})
        if not isinstance(value["list"], list):
            raise ConfigError(f"{path}.list", "expected a list of emitters")
        ems = [_emitter(e, f"{path}.list[{i}]") for i, e in enumerate(value["list"])]
        src["list"] = [
            {"position": list(e.position), "dipole": list(e.dipole), "detuning": e.detuning}
            for e in ems
        ]

    if len(ems) < 2:
        raise ConfigError(path, f"needs at least 2 emitters, got {len(ems)}")
    pos = [e.position for e in ems]
    if len(set(pos)) != len(pos):
        raise ConfigError(path, "two emitters share a position")

    if "detuning_pattern" in value:
        pp = f"{path}.detuning_pattern"
        raw = value["detuning_pattern"]
        if not isinstance(raw, list) or len(raw) != len(ems):
            raise ConfigError(pp, f"expected a list of {len(ems)} numbers")
        pattern = tuple(_real(x, f"{pp}[{i}]") for i, x in enumerate(raw))
        src["detuning_pattern"] = list(pattern)
    elif len(ems) == 2:
        pattern = (1.0, -1.0)
    else:
        pattern = None
    return EmitterSet(tuple(ems), pattern, src)


@dataclass(frozen=True)
class Sweep:
    parameter: str
    start: float
    stop: float
    points: int
    spacing: str = "linear"

    def grid(self):
        if self.spacing == "log":
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)

    def to_config(self):
        return {
            "parameter": self.parameter, "from": self.start, "to": self.stop,
            "points": self.points, "spacing": self.spacing,
        }


def _sweep(value, path):
    value = _obj(value, path, _SWEEP_KEYS)
    for key in ("parameter", "from", "to", "points"):
        if key not in value:
            raise ConfigError(f"{path}.{key}", "required")
    param = _choice(value["parameter"], f"{path}.parameter", SWEEP_PARAMETERS)
    start = _real(value["from"], f"{path}.from")
    stop = _real(value["to"], f"{path}.to")
    points = _int(value["points"], f"{path}.points", 2)
    spacing = _choice(value.get("spacing", "linear"), f"{path}.spacing", SPACINGS)
    if not start < stop:
        raise ConfigError(f"{path}.to", f"must exceed 'from' ({start!r}), got {stop!r}")
    if spacing == "log" and start <= 0.0:
        raise ConfigError(f"{path}.from", "log spacing needs a positive start")
    if param == "scale" and start <= 0.0:
        raise ConfigError(f"{path}.from", "a scale sweep needs a positive start")
    return Sweep(param, start, stop, points, spacing)


@dataclass(frozen=True)
class Scenario:
    """A validated sweep; build one with :func:`load_scenario`."""

    field_model: FieldModel
    models: tuple
    groups: tuple  # ((label, EmitterSet), ...); label "" for a single set
    sweep: Sweep
    outputs: tuple
    scale: float = 1.0
    detuning: float = None
    omega: float = 0.0
    mode_order: str = "sorted"
    rtol: float = DEFAULT_RTOL
    description: str = ""

    def to_config(self):
        """Normalized JSON-compatible tree; loading it gives back ``self``."""
        cfg = {
            "description": self.description,
            "field_model": self.field_model.value,
            "models": [m.value for m in self.models],
            "sweep": self.sweep.to_config(),
            "outputs": list(self.outputs),
            "scale": self.scale,
            "omega": self.omega,
            "mode_order": self.mode_order,
            "rtol": self.rtol,
        }
        if self.detuning is not None:
            cfg["detuning"] = self.detuning
        if len(self.groups) == 1 and self.groups[0][0] == "":
            cfg["emitters"] = dict(self.groups[0][1].source)
        else:
            cfg["constellations"] = {lab: dict(g.source) for lab, g in self.groups}
        return cfg

    def canonical_json(self):
        return json.dumps(self.to_config(), sort_keys=True, separators=(",", ":"))

    def config_hash(self):
        return hashlib.sha256(self.canonical_json().encode("utf-8")).hexdigest()


def load_scenario(config):
    """Validate a config tree (or JSON text) and return a :class:`Scenario`.

    Raises
    ------
    ConfigError
        With the dotted path of the first offending field.
    """
    if isinstance(config, (str, bytes)):
        try:
            config = json.loads(config)
        except json.JSONDecodeError as exc:
            raise ConfigError("", f"invalid JSON: {exc}") from None
    cfg = _obj(config, "", _TOP_KEYS)

    field_model = FieldModel(_choice(cfg.get("field_model", "vector"), "field_model", ["scalar", "vector"]))
    raw_models = cfg.get("models", ["exact", "rwa"])
    if not isinstance(raw_models, list) or not raw_models:
        raise ConfigError("models", "expected a non-empty list")
    models = []
    for i, m in enumerate(raw_models):
        m = InteractionModel(_choice(m, f"models[{i}]", ["exact", "rwa"]))
        if m in models:
            raise ConfigError(f"models[{i}]", f"duplicate model {m.value!r}")
        models.append(m)
    models.sort(key=lambda m: m.value)

    if ("emitters" in cfg) == ("constellations" in cfg):
        raise ConfigError("emitters", "give exactly one of 'emitters' or 'constellations'")
    if "emitters" in cfg:
        groups = (("", _emitter_set(cfg["emitters"], "emitters")),)
    else:
        node = cfg["constellations"]
        if not isinstance(node, dict) or not node:
            raise ConfigError("constellations", "expected a non-empty object")
        groups = []
        for label in sorted(node):
            if not label.isidentifier():
                raise ConfigError(f"constellations.{label}", "labels must be identifiers")
            groups.append((label, _emitter_set(node[label], f"constellations.{label}")))
        groups = tuple(groups)

    if "sweep" not in cfg:
        raise ConfigError("sweep", "required")
    sweep = _sweep(cfg["sweep"], "sweep")

    raw_out = cfg.get("outputs")
    if not isinstance(raw_out, list) or not raw_out:
        raise ConfigError("outputs", "expected a non-empty list")
    outputs = []
    for i, q in enumerate(raw_out):
        q = _choice(q, f"outputs[{i}]", QUANTITIES)
        if q in outputs:
            raise ConfigError(f"outputs[{i}]", f"duplicate quantity {q!r}")
        outputs.append(q)

    scale = _real(cfg.get("scale", 1.0), "scale", positive=True)
    detuning = _real(cfg["detuning"], "detuning") if "detuning" in cfg else None
    omega = _real(cfg.get("omega", 0.0), "omega")
    mode_order = _choice(cfg.get("mode_order", "sorted"), "mode_order", MODE_ORDERS)
    rtol = _real(cfg.get("rtol", DEFAULT_RTOL), "rtol", positive=True)
    if rtol >= 1.0:
        raise ConfigError("rtol", "must be below 1")
    description = cfg.get("description", "")
    if not isinstance(description, str):
        raise ConfigError("description", "expected a string")

    uses_detuning = detuning is not None or sweep.parameter == "detuning"
    for label, g in groups:
        where = f"constellations.{label}" if label else "emitters"
        if uses_detuning and g.pattern is None:
            raise ConfigError(f"{where}.detuning_pattern", "required when a detuning is applied")
        if len(g.emitters) != 2 and "spectrum" in outputs:
            raise ConfigError(f"outputs[{outputs.index('spectrum')}]", "'spectrum' needs exactly two emitters")
    if sweep.parameter == "omega" and "spectrum" not in outputs:
        raise ConfigError("sweep.parameter", "an omega sweep needs 'spectrum' in outputs")

    return Scenario(
        field_model, tuple(models), groups, sweep, tuple(outputs),
        scale, detuning, omega, mode_order, rtol, description,
    )


# ---------------------------------------------------------------- evaluation

def _column_names(sc):
    cols = ["param"]
    for q in sc.outputs:
        for label, g in sc.groups:
            tag = f"_{label}" if label else ""
            n = len(g.emitters)
            if q in PER_MODEL:
                for m in sc.models:
                    if q in ("rate_k", "shift_k"):
                        base = q[:-2]
                        cols.extend(f"{base}_{k}{tag}_{m.value}" for k in range(n))
                    else:
                        cols.append(f"{q}{tag}_{m.value}")
            else:
                cols.append(f"{q}{tag}")
    return cols


def _configure(g, sc, param):
    """Emitters and detunings of one set at one grid point."""
    scale = param if sc.sweep.parameter == "scale" else sc.scale
    amp = param if sc.sweep.parameter == "detuning" else sc.detuning
    ems = [e.scaled(scale) for e in g.emitters]
    det = np.array([e.detuning for e in ems])
    if amp is not None:
        det = det + amp * np.asarray(g.pattern)
    return ems, det


@dataclass
class _Point:
    values: dict
    matrices: dict  # (label, model) -> (J', detunings)


def _evaluate(sc, param):
    out = {}
    mats = {}
    omega = param if sc.sweep.parameter == "omega" else sc.omega
    needs_matrix = any(q in ("rate_k", "shift_k", "rate_gap") for q in sc.outputs)
    needs_both = any(q in ("re_ratio", "mag2_ratio", "re_rel_error", "rate_gap") for q in sc.outputs)
    models = list(InteractionModel) if needs_both else list(sc.models)
    for label, g in sc.groups:
        tag = f"_{label}" if label else ""
        ems, det = _configure(g, sc, param)
        jps = {}
        for m in models:
            if needs_matrix:
                jps[m] = interaction_matrix(ems, m, sc.field_model, sc.rtol)
            else:
                jps[m] = interaction_matrix(ems[:2], m, sc.field_model, sc.rtol)
        pair = {m: complex(jps[m][0, 1]) for m in models}
        rates = {}
        for m in models:
            if needs_matrix:
                modes = collective_modes(jps[m], det)
                rates[m] = modes
                mats[(label, m)] = (jps[m], det)
        for q in sc.outputs:
            if q == "re_J":
                for m in sc.models:
                    out[f"re_J{tag}_{m.value}"] = pair[m].real
            elif q == "im_J":
                for m in sc.models:
                    out[f"im_J{tag}_{m.value}"] = pair[m].imag
            elif q == "re_ratio":
                ex, rw = pair[InteractionModel.EXACT], pair[InteractionModel.RWA]
                out[f"re_ratio{tag}"] = rw.real / ex.real if ex.real != 0.0 else math.nan
            elif q == "mag2_ratio":
                ex, rw = pair[InteractionModel.EXACT], pair[InteractionModel.RWA]
                out[f"mag2_ratio{tag}"] = abs(rw) ** 2 / abs(ex) ** 2 if ex != 0 else math.nan
            elif q == "re_rel_error":
                ex, rw = pair[InteractionModel.EXACT], pair[InteractionModel.RWA]
                out[f"re_rel_error{tag}"] = ((rw - ex) / ex).real if ex != 0 else math.nan
            elif q in ("rate_k", "shift_k"):
                for m in sc.models:
                    for k, md in enumerate(rates[m]):
                        key = f"{q[:-2]}_{k}{tag}_{m.value}"
                        out[key] = md.decay if q == "rate_k" else md.shift
            elif q == "rate_gap":
                a = [md.decay for md in rates[InteractionModel.EXACT]]
                b = [md.decay for md in rates[InteractionModel.RWA]]
                out[f"rate_gap{tag}"] = rate_discrepancy(a, b)
            elif q == "spectrum":
                centre = 0.5 * (det[0] + det[1])
                half = 0.5 * (det[0] - det[1])
                for m in sc.models:
                    val = two_atom_spectrum([omega - centre], pair[m], half)[0]
                    out[f"spectrum{tag}_{m.value}"] = float(val)
    return _Point(out, mats)


def _retrack(sc, grid, points, values):
    """Relabel rate/shift columns by eigenvector continuity."""
    for label, g in sc.groups:
        tag = f"_{label}" if label else ""
        for m in sc.models:
            mats = [p.matrices[(label, m)][0] for p in points]
            dets = np.array([p.matrices[(label, m)][1] for p in points])
            branches = track_modes(mats, grid, dets)
            for k, br in enumerate(branches):
                if "rate_k" in sc.outputs:
                    values[f"rate_{k}{tag}_{m.value}"] = br.decay
                if "shift_k" in sc.outputs:
                    values[f"shift_{k}{tag}_{m.value}"] = br.shift


@dataclass
class ResultTable:
    """Sweep results in ascending parameter order."""

    columns: list
    rows: list
    config_hash: str
    config_json: str
    version: str = __version__

    def column(self, name):
        i = self.columns.index(name)
        return np.array([r[i] for r in self.rows], dtype=float)

    def to_csv(self):
        buf = io.StringIO()
        buf.write(f"# superrad {self.version}\n")
        buf.write(f"# config_sha256: {self.config_hash}\n")
        buf.write(f"# config: {self.config_json}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([repr(float(x)) for x in r])
        return buf.getvalue()

    def to_json(self):
        doc = {
            "version": self.version,
            "config_sha256": self.config_hash,
            "config": json.loads(self.config_json),
            "columns": self.columns,
            "rows": [[float(x) if math.isfinite(x) else None for x in r] for r in self.rows],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def run_scenario(config, threads=1):
    """Run a sweep and return its :class:`ResultTable`.

    Grid points are evaluated independently on a pool of ``threads``
    workers; results are collected in parameter order, so the table does
    not depend on the thread count.

    Raises
    ------
    ConfigError
        If ``config`` is not a valid scenario.
    RowError
        On a quadrature or eigensolver failure, naming the row.
    """
    sc = config if isinstance(config, Scenario) else load_scenario(config)
    threads = int(threads)
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    grid = sc.sweep.grid()

    def work(item):
        i, p = item
        try:
            return _evaluate(sc, float(p))
        except NumericalError as exc:
            raise RowError(i, float(p), exc) from exc

    if threads == 1:
        points = [work(it) for it in enumerate(grid)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            points = list(pool.map(work, enumerate(grid)))

    cols = _column_names(sc)
    values = {c: np.array([p.values[c] for p in points]) for c in cols[1:]}
    if sc.mode_order == "tracked" and any(q in ("rate_k", "shift_k") for q in sc.outputs):
        _retrack(sc, grid, points, values)
    values["param"] = grid
    rows = [[float(values[c][i]) for c in cols] for i in range(len(grid))]
    return ResultTable(cols, rows, sc.config_hash(), sc.canonical_json())


# ---------------------------------------------------------------- presets

def _linear(param, lo, hi, n):
    return {"parameter": param, "from": lo, "to": hi, "points": n, "spacing": "linear"}


_PRESETS = {
    "fig2": (
        "Scalar field: exact and RWA interaction and the relative RWA error vs distance",
        {
            "field_model": "scalar",
            "emitters": "pair_zz",
            "sweep": _linear("scale", 0.05, 3.0, 296),
            "outputs": ["re_J", "im_J", "re_rel_error"],
        },
    ),
    "fig3a": (
        "Real-part ratio RWA/exact for x-x and z-z pairs vs distance",
        {
            "constellations": {"xx": "pair_xx", "zz": "pair_zz"},
            "sweep": _linear("scale", 0.05, 6.0, 596),
            "outputs": ["re_ratio"],
        },
    ),
    "fig3b": (
        "Squared-modulus ratio RWA/exact for x-x and z-z pairs, log distance grid",
        {
            "constellations": {"xx": "pair_xx", "zz": "pair_zz"},
            "sweep": {"parameter": "scale", "from": 0.01, "to": 10.0, "points": 301, "spacing": "log"},
            "outputs": ["mag2_ratio", "re_ratio"],
        },
    ),
    "fig4a": (
        "x-x pair: real and imaginary interaction in both models vs distance",
        {
            "emitters": "pair_xx",
            "sweep": _linear("scale", 0.1, 6.0, 591),
            "outputs": ["re_J", "im_J"],
        },
    ),
    "fig4b": (
        "z-z pair: real and imaginary interaction in both models vs distance",
        {
            "emitters": "pair_zz",
            "sweep": _linear("scale", 0.1, 6.0, 591),
            "outputs": ["re_J", "im_J"],
        },
    ),
    "fig5a": (
        "Detuned x-x pair at unit distance: collective rates and model gap vs detuning",
        {
            "emitters": "pair_xx",
            "scale": 1.0,
            "sweep": _linear("detuning", 0.0, 10.0, 1001),
            "outputs": ["rate_k", "shift_k", "rate_gap"],
            "mode_order": "tracked",
        },
    ),
    "fig5b": (
        "x-x pair with half-splitting 2: collective rates and model gap vs distance",
        {
            "emitters": "pair_xx",
            "detuning": 2.0,
            "sweep": _linear("scale", 0.1, 6.0, 591),
            "outputs": ["rate_k", "rate_gap"],
            "mode_order": "tracked",
        },
    ),
    "fig6b": (
        "Triangle with apex dipole turned by 15 degrees: three rate branches per model",
        {
            "emitters": {"preset": "triangle", "rotation_deg": 15.0},
            "sweep": _linear("scale", 0.1, 3.0, 291),
            "outputs": ["rate_k", "shift_k"],
            "mode_order": "tracked",
        },
    ),
    "fig6c": (
        "Triangle with apex dipole turned by 15 degrees: largest rate gap between models",
        {
            "emitters": {"preset": "triangle", "rotation_deg": 15.0},
            "sweep": _linear("scale", 0.1, 3.0, 291),
            "outputs": ["rate_gap"],
        },
    ),
    "fig7": (
        "Triangle with apex dipole turned by 50 degrees: rate branches per model",
        {
            "emitters": {"preset": "triangle", "rotation_deg": 50.0},
            "sweep": _linear("scale", 0.1, 3.0, 291),
            "outputs": ["rate_k"],
            "mode_order": "tracked",
        },
    ),
    "spectrum": (
        "Emission spectrum of an x-x pair at distance 0.5 in both models",
        {
            "emitters": "pair_xx",
            "scale": 0.5,
            "sweep": _linear("omega", -15.0, 15.0, 601),
            "outputs": ["spectrum", "re_J"],
        },
    ),
    "ring5": (
        "Five-emitter ring with radial dipoles: rate gap vs radius (stays at zero)",
        {
            "emitters": {"ring": {"n": 5, "radius": 1.0, "dipole_style": "radial"}},
            "sweep": _linear("scale", 0.1, 2.0, 191),
            "outputs": ["rate_gap", "rate_k"],
        },
    ),
    "line3": (
        "Three collinear emitters with parallel dipoles: rate gap vs spacing",
        {
            "emitters": {"preset": "line", "n": 3},
            "sweep": _linear("scale", 0.1, 2.0, 191),
            "outputs": ["rate_gap", "rate_k"],
        },
    ),
}

for _name, (_desc, _cfg) in _PRESETS.items():
    _cfg["description"] = _desc


def list_presets():
    """``[(name, description), ...]`` sorted by name."""
    return sorted((name, desc) for name, (desc, _) in _PRESETS.items())


def preset_config(name):
    """Normalized config tree of a named preset."""
    if name not in _PRESETS:
        raise ConfigError("preset", f"unknown preset {name!r}; see list-presets")
    return load_scenario(json.loads(json.dumps(_PRESETS[name][1]))).to_config()
