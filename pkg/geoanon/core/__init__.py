"""
Core model: domain types, run configuration and equivalence classes.
"""
from .types import (
    Point2D,
    InitialRegion,
    Attribute,
    QuasiIdentifierSchema,
    Record,
    EquivalenceClassKey,
    EquivalenceClass,
    Site,
)
from .config import AnonymizationConfig, CoordinateSource
from .classes import compute_equivalence_classes, validate_record, class_sizes

__all__ = (
    "Point2D",
    "InitialRegion",
    "Attribute",
    "QuasiIdentifierSchema",
    "Record",
    "EquivalenceClassKey",
    "EquivalenceClass",
    "Site",
    "AnonymizationConfig",
    "CoordinateSource",
    "compute_equivalence_classes",
    "validate_record",
    "class_sizes",
)
