"""Collective emission of point dipoles with and without the rotating-wave approximation."""

__version__ = "0.1.0"

from .errors import ConfigError, EigenSolverError, NumericalError, QuadratureError
from .specfun import integrals, integral_In, In_farfield_asymptote, In_nearfield_asymptote
from .propagator import (
    FieldModel,
    InteractionModel,
    SeparationGeometry,
    dyadic_green,
    dyadic_rwa,
    propagator,
    rwa_error,
    scalar_green,
    scalar_rwa,
)
from .emitters import (
    EmitterSpec,
    interaction,
    interaction_matrix,
    interaction_ratio,
    line,
    pair_xx,
    pair_zz,
    self_interaction,
    symmetric_triangle,
    triangle,
)
from .collective import (
    CollectiveMode,
    CrossingKind,
    ModeBranch,
    classify_crossing,
    collective_modes,
    cooperativity,
    decay_rates,
    rate_discrepancy,
    rayleigh_visible,
    track_modes,
    two_atom_detuned,
    two_atom_identical,
    two_atom_spectrum,
)
from .ring import (
    DipoleStyle,
    RingSpec,
    certify_ring_rwa_invariance,
    rate_gap,
    ring_eigenvalues_fourier,
    ring_emitters,
    ring_matrix,
)
from .scenario import ResultTable, Scenario, list_presets, load_scenario, preset_config, run_scenario
