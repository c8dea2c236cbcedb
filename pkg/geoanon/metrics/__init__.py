"""
Evaluation of an aggregation: suppression, compactness, discernibility,
non-uniform entropy and running time.
"""
from .measures import (
    suppression_count,
    compactness,
    discernibility,
    non_uniform_entropy,
    timing_report,
)
from .report import MetricsReport, build_report, generalization_pairs, ENTROPY_SCOPE

__all__ = (
    "suppression_count",
    "compactness",
    "discernibility",
    "non_uniform_entropy",
    "timing_report",
    "MetricsReport",
    "build_report",
    "generalization_pairs",
    "ENTROPY_SCOPE",
)
