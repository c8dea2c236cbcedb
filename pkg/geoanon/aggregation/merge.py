"""Merging equivalence classes of aggregated regions, and suppression."""
from collections import defaultdict
from collections.abc import Mapping, Sequence
from ..core import EquivalenceClass, EquivalenceClassKey
from ..exceptions import ConfigError


def merge_classes(
    groups: Mapping[int, Sequence[str]],
    per_region_classes: Mapping[str, Sequence[EquivalenceClass]],
) -> dict[int, list[EquivalenceClass]]:
    """merge_classes.

    Unions classes with the same key across the initial regions of every
    aggregated region. Regions without records contribute nothing.

    Returns:
        dict: site index -> merged classes sorted by key.
    """
    merged: dict[int, list[EquivalenceClass]] = {}
    for site, region_ids in groups.items():
        members: dict[EquivalenceClassKey, list[str]] = defaultdict(list)
        for region_id in region_ids:
            for eq_class in per_region_classes.get(region_id, ()):
                members[eq_class.key].extend(eq_class.member_ids)
        merged[site] = [
            EquivalenceClass(key=key, member_ids=tuple(members[key]))
            for key in sorted(members)
        ]
    return merged


def suppress(
    merged: Mapping[int, Sequence[EquivalenceClass]], k: int
) -> tuple[dict[int, list[EquivalenceClass]], list[str]]:
    """suppress.

    Drops every class with fewer than ``k`` members, whole.

    Returns:
        tuple: (site index -> surviving classes, suppressed record ids in
        site, key, member order).
    """
    if k < 1:
        raise ConfigError(f"k must be >= 1, got {k}")
    surviving: dict[int, list[EquivalenceClass]] = {}
    suppressed: list[str] = []
    for site, classes in merged.items():
        kept = []
        for eq_class in classes:
            if eq_class.size >= k:
                kept.append(eq_class)
            else:
                suppressed.extend(eq_class.member_ids)
        surviving[site] = kept
    return surviving, suppressed
