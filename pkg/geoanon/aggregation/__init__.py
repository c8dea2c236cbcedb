"""
Aggregation of initial regions and suppression of small classes.
"""
from .voronoi import assign_regions_to_sites, brute_force_assignment, nearest_site_positions
from .merge import merge_classes, suppress
from .pipeline import (
    PHASES,
    PhaseTimer,
    AggregatedRegion,
    AnonymizationResult,
    bind_populations,
    anonymize,
)

__all__ = (
    "assign_regions_to_sites",
    "brute_force_assignment",
    "nearest_site_positions",
    "merge_classes",
    "suppress",
    "PHASES",
    "PhaseTimer",
    "AggregatedRegion",
    "AnonymizationResult",
    "bind_populations",
    "anonymize",
)
