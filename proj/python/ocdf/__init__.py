"""Object control/data-flow models for object-oriented classes."""

from ._core import (
    AbstractionLevel,
    CutSuggestion,
    Diagnostic,
    Feature,
    FeatureKind,
    Flow,
    FlowKind,
    OcdfClass,
    OcdfError,
    OcdfModel,
    RaceHazard,
    RankDir,
    Severity,
    SubstructureReport,
    Visibility,
    build_class,
    deserialize,
    detect_races,
    explain,
    extract,
    project,
    render_dot,
    serialize,
    substructures,
    validate,
)

__all__ = [
    "AbstractionLevel",
    "CutSuggestion",
    "Diagnostic",
    "Feature",
    "FeatureKind",
    "Flow",
    "FlowKind",
    "OcdfClass",
    "OcdfError",
    "OcdfModel",
    "RaceHazard",
    "RankDir",
    "Severity",
    "SubstructureReport",
    "Visibility",
    "build_class",
    "deserialize",
    "detect_races",
    "explain",
    "extract",
    "project",
    "render_dot",
    "serialize",
    "substructures",
    "validate",
]
