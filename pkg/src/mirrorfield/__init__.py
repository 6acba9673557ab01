"""Spontaneous emission near a lossy, asymmetric mirror coating.

The package models a two-level emitter at distance x from a thin coated
interface between air and a denser dielectric.  The coating reflects,
transmits and absorbs with independent amplitudes on each side, and the
emitter's decay rate relative to its homogeneous-space value follows in
closed form from those amplitudes.
"""

from .errors import (
    ConfigError,
    DegenerateTransparency,
    DomainError,
    EnergyViolation,
    MirrorFieldError,
    QuadratureBudgetExceeded,
    RangeError,
)
from .interface import (
    AIR,
    Medium,
    MirrorInterface,
    MirrorSideSummary,
    NormalisationPair,
    SideCoefficients,
    SideRateTerms,
    fresnel_normal_reflectivity,
    interface_from_mapping,
    lossless_interface,
    mirror_parameter,
    normalisation_constants,
    normalisation_from_rates,
    parse_interface_text,
    refractive_index,
    side_rate_terms,
    validate_interface,
)
from .modes import (
    PolarisationBasis,
    WaveDirection,
    coupling_amplitude,
    free_mode_amplitude,
    medium_mode_amplitude,
    mirror_field_amplitude,
    polarisation_basis,
    polarisation_vector,
)
from .oracle import (
    DEFAULT_QUADRATURE,
    OracleReport,
    QuadratureSpec,
    decay_rate_1d_oracle,
    decay_rate_2d_oracle,
    oracle_compare,
    panel_count,
)
from .rates import (
    CODATA2018,
    NATURAL_UNITS,
    AtomParams,
    DecayRateCurve,
    DipoleOrientation,
    PhysicalConstants,
    dimensionless_distance,
    excited_population,
    gamma_air,
    gamma_med,
    oscillatory_bracket,
    relative_decay_rate,
    sample_decay_curve,
    unnormalised_decay_rate,
)
from .sweep import (
    ORACLE_U_VALUES,
    OracleCase,
    ResultTable,
    SweepConfig,
    format_csv,
    parse_csv,
    replay_provenance,
    seeded_oracle_cases,
    write_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AIR",
    "AtomParams",
    "CODATA2018",
    "ConfigError",
    "DEFAULT_QUADRATURE",
    "DecayRateCurve",
    "DegenerateTransparency",
    "DipoleOrientation",
    "DomainError",
    "EnergyViolation",
    "Medium",
    "MirrorFieldError",
    "MirrorInterface",
    "MirrorSideSummary",
    "NATURAL_UNITS",
    "NormalisationPair",
    "ORACLE_U_VALUES",
    "OracleCase",
    "OracleReport",
    "PhysicalConstants",
    "PolarisationBasis",
    "QuadratureBudgetExceeded",
    "QuadratureSpec",
    "RangeError",
    "ResultTable",
    "SideCoefficients",
    "SideRateTerms",
    "SweepConfig",
    "WaveDirection",
    "coupling_amplitude",
    "decay_rate_1d_oracle",
    "decay_rate_2d_oracle",
    "dimensionless_distance",
    "excited_population",
    "format_csv",
    "free_mode_amplitude",
    "fresnel_normal_reflectivity",
    "gamma_air",
    "gamma_med",
    "interface_from_mapping",
    "lossless_interface",
    "medium_mode_amplitude",
    "mirror_field_amplitude",
    "mirror_parameter",
    "normalisation_constants",
    "normalisation_from_rates",
    "oracle_compare",
    "oscillatory_bracket",
    "panel_count",
    "parse_csv",
    "parse_interface_text",
    "polarisation_basis",
    "polarisation_vector",
    "refractive_index",
    "relative_decay_rate",
    "replay_provenance",
    "sample_decay_curve",
    "seeded_oracle_cases",
    "side_rate_terms",
    "unnormalised_decay_rate",
    "validate_interface",
    "write_csv",
]
