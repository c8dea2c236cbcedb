"""Anonymization pipeline.

place sites -> assign initial regions to sites -> merge classes -> suppress.
"""
from collections import Counter
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass, field
import time
from typing import Optional
from navconfig.logging import logging
from ..core import (
    AnonymizationConfig,
    EquivalenceClass,
    InitialRegion,
    Point2D,
    QuasiIdentifierSchema,
    Record,
    Site,
    compute_equivalence_classes,
)
from ..exceptions import ValidationError
from ..placement import AbstractPlacement, choose_site_count, get_placement
from .merge import merge_classes, suppress
from .voronoi import assign_regions_to_sites

logger = logging.getLogger("geoanon.pipeline")

PHASES = ("load", "classes", "placement", "aggregation", "metrics")


class PhaseTimer:
    """Wall-clock durations per phase, accumulated in milliseconds."""

    def __init__(self, durations: Optional[dict[str, float]] = None) -> None:
        self.durations: dict[str, float] = {} if durations is None else durations

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            self.add(name, (time.perf_counter() - started) * 1000.0)

    def add(self, name: str, milliseconds: float) -> None:
        self.durations[name] = self.durations.get(name, 0.0) + milliseconds

    def as_dict(self) -> dict[str, float]:
        return {name: self.durations.get(name, 0.0) for name in PHASES} | {
            name: value
            for name, value in self.durations.items()
            if name not in PHASES
        }


@dataclass(frozen=True, slots=True)
class AggregatedRegion:
    """Union of the initial regions nearest to one site."""
    id: int
    site: Point2D
    member_region_ids: tuple[str, ...]
    classes: tuple[EquivalenceClass, ...] = ()
    suppressed_classes: tuple[EquivalenceClass, ...] = ()

    @property
    def population_after_suppression(self) -> int:
        return sum(eq_class.size for eq_class in self.classes)

    @property
    def merged_classes(self) -> tuple[EquivalenceClass, ...]:
        return tuple(sorted(self.classes + self.suppressed_classes, key=lambda c: c.key))


@dataclass
class AnonymizationResult:
    aggregated_regions: list[AggregatedRegion]
    suppressed_record_ids: list[str]
    config: AnonymizationConfig
    site_count: int
    sites: list[Site] = field(default_factory=list)
    record_count: int = 0
    placement: str = "balanced_density"
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def aggregated_of(self) -> dict[str, int]:
        """Initial region id -> aggregated region id."""
        return {
            region_id: aggregated.id
            for aggregated in self.aggregated_regions
            for region_id in aggregated.member_region_ids
        }

    @property
    def surviving_record_ids(self) -> list[str]:
        return [
            member
            for aggregated in self.aggregated_regions
            for eq_class in aggregated.classes
            for member in eq_class.member_ids
        ]

    @property
    def surviving_count(self) -> int:
        return self.record_count - len(self.suppressed_record_ids)

    def is_k_anonymous(self, k: Optional[int] = None) -> bool:
        k = self.config.k if k is None else k
        return all(
            eq_class.size >= k
            for aggregated in self.aggregated_regions
            for eq_class in aggregated.classes
        )


def bind_populations(
    regions: Sequence[InitialRegion], records: Sequence[Record]
) -> list[InitialRegion]:
    """Set every region population to its record count.

    Raises:
        ValidationError: a record names an unknown region.
    """
    known = {region.id for region in regions}
    counts: Counter[str] = Counter()
    for record in records:
        if record.region_id not in known:
            raise ValidationError(
                f"Record {record.id} references unknown region '{record.region_id}'",
                record_id=record.id,
                region_id=record.region_id,
            )
        counts[record.region_id] += 1
    return [region.with_population(counts[region.id]) for region in regions]


def anonymize(
    regions: Sequence[InitialRegion],
    records: Sequence[Record],
    schema: QuasiIdentifierSchema,
    config: AnonymizationConfig,
    placement: Optional[AbstractPlacement] = None,
    timer: Optional[PhaseTimer] = None,
) -> AnonymizationResult:
    """anonymize.

    Aggregates the initial regions into Voronoi regions of balanced-density
    sites (or of the given placement) and suppresses every equivalence class
    smaller than ``config.k`` inside its aggregated region.

    Raises:
        ConfigError: invalid k, site count or placement.
        ValidationError: inconsistent records.
    """
    timer = timer or PhaseTimer()
    config.check(len(regions))
    placement = placement or get_placement(config.placement)
    with timer.phase("load"):
        bound = bind_populations(regions, records)
    with timer.phase("classes"):
        per_region = compute_equivalence_classes(records, schema)
    if not bound:
        logger.warning("No initial regions: nothing to aggregate")
        for name in ("placement", "aggregation"):
            timer.add(name, 0.0)
        return AnonymizationResult(
            aggregated_regions=[],
            suppressed_record_ids=[],
            config=config,
            site_count=0,
            record_count=len(records),
            placement=placement.name,
            timings=timer.durations,
        )
    with timer.phase("placement"):
        s = choose_site_count(
            len(records),
            config.k,
            schema.class_count,
            config.site_count,
            region_count=len(bound),
        )
        sites = placement(bound, s)
    with timer.phase("aggregation"):
        groups = assign_regions_to_sites(bound, sites)
        merged = merge_classes(groups, per_region)
        surviving, suppressed_ids = suppress(merged, config.k)
        locations = {site.index: site.location for site in sites}
        aggregated: list[AggregatedRegion] = []
        for index, members in groups.items():
            if not members:
                logger.warning(f"Site {index} captured no initial region: dropped")
                continue
            kept = surviving[index]
            kept_keys = {eq_class.key for eq_class in kept}
            aggregated.append(
                AggregatedRegion(
                    id=index,
                    site=locations[index],
                    member_region_ids=tuple(members),
                    classes=tuple(kept),
                    suppressed_classes=tuple(
                        c for c in merged[index] if c.key not in kept_keys
                    ),
                )
            )
    logger.info(
        f"Aggregated {len(bound)} regions into {len(aggregated)} "
        f"(s={s}, k={config.k}); suppressed {len(suppressed_ids)} "
        f"of {len(records)} records"
    )
    return AnonymizationResult(
        aggregated_regions=aggregated,
        suppressed_record_ids=suppressed_ids,
        config=config,
        site_count=s,
        sites=sites,
        record_count=len(records),
        placement=placement.name,
        timings=timer.durations,
    )
