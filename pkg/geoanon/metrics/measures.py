"""Quality measures of an aggregation.

Suppression, compactness and discernibility read an AnonymizationResult;
non-uniform entropy works on the original and generalized region of every
surviving record.
"""
from collections import Counter
from collections.abc import Hashable, Mapping, Sequence
import math
import numpy as np
from ..aggregation import AnonymizationResult
from ..core import InitialRegion
from ..exceptions import ValidationError


def suppression_count(result: AnonymizationResult) -> int:
    return len(result.suppressed_record_ids)


def _region_points(
    regions: Sequence[InitialRegion] | Mapping[str, InitialRegion]
) -> dict[str, tuple[float, float]]:
    if isinstance(regions, Mapping):
        regions = list(regions.values())
    return {region.id: region.point.as_tuple() for region in regions}


def compactness(
    result: AnonymizationResult,
    regions: Sequence[InitialRegion] | Mapping[str, InitialRegion],
) -> float:
    """compactness.

    Sum, over every aggregated region, of the distances from its member
    points to their unweighted mean. Lower is better.
    """
    points = _region_points(regions)
    partial: list[float] = []
    for aggregated in result.aggregated_regions:
        try:
            members = np.array(
                [points[region_id] for region_id in aggregated.member_region_ids],
                dtype=float,
            )
        except KeyError as exc:
            raise ValidationError(f"Unknown initial region {exc}") from exc
        if len(members) == 0:
            continue
        centre = members.mean(axis=0)
        partial.extend(np.hypot(members[:, 0] - centre[0], members[:, 1] - centre[1]))
    return math.fsum(partial)


def discernibility(result: AnonymizationResult, k: int) -> int:
    """Sum of squared class sizes over merged classes with at least k members."""
    return sum(
        eq_class.size**2
        for aggregated in result.aggregated_regions
        for eq_class in aggregated.merged_classes
        if eq_class.size >= k
    )


def non_uniform_entropy(
    original_region_per_record: Sequence[Hashable],
    generalized_region_per_record: Sequence[Hashable],
) -> float:
    """non_uniform_entropy.

    ``-sum(log2 Pr(original | generalized))`` over records, in bits, with
    Pr estimated from the frequencies of the given records.
    """
    if len(original_region_per_record) != len(generalized_region_per_record):
        raise ValidationError(
            "Original and generalized values must have the same length"
        )
    pairs = Counter(zip(original_region_per_record, generalized_region_per_record))
    generalized = Counter(generalized_region_per_record)
    return math.fsum(
        count * math.log2(generalized[b] / count) for (_, b), count in pairs.items()
    )


def timing_report(phase_durations: Mapping[str, float]) -> dict[str, float]:
    """Per-phase durations plus their ``total``."""
    report = {name: float(value) for name, value in phase_durations.items()}
    report["total"] = math.fsum(report.values())
    return report
