"""Synthetic census-style microdata.

Each region receives a population drawn uniformly from ``population_range``
and that many records; every attribute value is drawn from the categorical
distribution of the region's group (province, state, ...).
"""
from collections.abc import Sequence
import math
from pathlib import Path
from typing import Any, Optional
import numpy as np
from datamodel import BaseModel, Field
from navconfig.logging import logging
from ..conf import DEFAULT_GROUP, POPULATION_HIGH, POPULATION_LOW, RNG_ALGORITHM
from ..core import InitialRegion, QuasiIdentifierSchema, Record
from ..exceptions import ValidationError
from ..libs.json import read_json

logger = logging.getLogger("geoanon.synthetic")

PROBABILITY_TOLERANCE = 1e-9


def default_population_range() -> list:
    return [POPULATION_LOW, POPULATION_HIGH]


class DistributionSpec(BaseModel):
    """DistributionSpec.

    Per-group, per-attribute category probabilities plus the inclusive
    population range of a region.
    """
    population_range: list = Field(
        required=False, default_factory=default_population_range
    )
    groups: dict = Field(required=False, default_factory=dict)

    class Meta:
        strict: bool = True
        title: str = "DistributionSpec"

    @property
    def bounds(self) -> tuple[int, int]:
        lo, hi = self.population_range
        return int(lo), int(hi)

    def check(self, schema: QuasiIdentifierSchema) -> "DistributionSpec":
        if len(self.population_range) != 2:
            raise ValidationError("population_range must be [lo, hi]")
        lo, hi = self.bounds
        if lo < 0 or lo > hi:
            raise ValidationError(f"Invalid population range [{lo}, {hi}]")
        for group in self.groups:
            self.vectors(group, schema)
        return self

    def vectors(self, group: str, schema: QuasiIdentifierSchema) -> list[np.ndarray]:
        """Probability vectors of a group, aligned with the schema categories."""
        try:
            attributes = self.groups[group]
        except KeyError as exc:
            raise ValidationError(
                f"No distribution for group '{group}'", group=group
            ) from exc
        vectors = []
        for attr in schema.attributes:
            if attr.name not in attributes:
                raise ValidationError(
                    f"Group '{group}' has no distribution for attribute "
                    f"'{attr.name}'",
                    group=group,
                    attribute=attr.name,
                )
            probs = attributes[attr.name]
            unknown = sorted(set(probs) - set(attr.categories))
            if unknown:
                raise ValidationError(
                    f"Group '{group}', attribute '{attr.name}': unknown "
                    f"categories {', '.join(unknown)}",
                    group=group,
                    attribute=attr.name,
                )
            vector = np.array(
                [float(probs.get(label, 0.0)) for label in attr.categories]
            )
            if (vector < 0).any() or abs(math.fsum(vector) - 1.0) > PROBABILITY_TOLERANCE:
                raise ValidationError(
                    f"Group '{group}', attribute '{attr.name}': probabilities "
                    "must be non-negative and sum to 1",
                    group=group,
                    attribute=attr.name,
                )
            vectors.append(vector)
        return vectors

    def to_document(self) -> dict[str, Any]:
        lo, hi = self.bounds
        return {"population_range": [lo, hi], "groups": self.groups}


def load_distribution_spec(
    path: str | Path, schema: QuasiIdentifierSchema
) -> DistributionSpec:
    document = read_json(path)
    if not isinstance(document, dict):
        raise ValidationError(f"Distribution file {path} must hold a JSON object")
    try:
        spec = DistributionSpec(
            population_range=list(
                document.get("population_range", default_population_range())
            ),
            groups=dict(document.get("groups", {})),
        )
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"Invalid distribution file {path}: {exc}") from exc
    return spec.check(schema)


def _cumulative(vectors: list[np.ndarray]) -> list[np.ndarray]:
    cumulative = []
    for vector in vectors:
        cum = np.cumsum(vector)
        cum[-1] = 1.0
        cumulative.append(cum)
    return cumulative


def generate_synthetic(
    regions: Sequence[InitialRegion],
    spec: DistributionSpec,
    schema: QuasiIdentifierSchema,
    seed: int,
) -> tuple[list[InitialRegion], list[Record]]:
    """generate_synthetic.

    Regions are visited in id order. For each one the generator draws the
    population, then a (population x d) matrix of uniforms read record by
    record, attribute by attribute; each uniform selects a category through
    the cumulative distribution. The same inputs always produce the same
    output.

    Returns:
        regions with populations (id order) and their records.
    """
    lo, hi = spec.bounds
    ordered = sorted(regions, key=lambda region: region.id)
    tables: dict[str, list[np.ndarray]] = {}
    for region in ordered:
        group = region.group or DEFAULT_GROUP
        if group not in tables:
            tables[group] = _cumulative(spec.vectors(group, schema))
    rng = np.random.Generator(np.random.PCG64(seed))
    width = len(str(hi))
    populated: list[InitialRegion] = []
    records: list[Record] = []
    for region in ordered:
        cumulative = tables[region.group or DEFAULT_GROUP]
        population = int(rng.integers(lo, hi, endpoint=True))
        uniforms = rng.random((population, schema.d))
        codes = np.empty((population, schema.d), dtype=np.int64)
        for column, cum in enumerate(cumulative):
            codes[:, column] = np.minimum(
                np.searchsorted(cum, uniforms[:, column], side="right"),
                len(cum) - 1,
            )
        populated.append(region.with_population(population))
        records.extend(
            Record(
                id=f"{region.id}-{number:0{width}d}",
                region_id=region.id,
                values=tuple(values),
            )
            for number, values in enumerate(codes.tolist(), start=1)
        )
    logger.info(
        f"Generated {len(records)} records over {len(populated)} regions "
        f"(seed={seed}, rng={RNG_ALGORITHM})"
    )
    return populated, records


def estimate_distributions(
    records: Sequence[Record],
    regions: Sequence[InitialRegion],
    schema: QuasiIdentifierSchema,
    population_range: Optional[list] = None,
) -> DistributionSpec:
    """Unweighted per-group category frequencies of a sample.

    Survey weights are not applied; every sampled record counts once.
    """
    group_of = {region.id: region.group or DEFAULT_GROUP for region in regions}
    by_group: dict[str, list[tuple[int, ...]]] = {}
    for record in records:
        try:
            group = group_of[record.region_id]
        except KeyError as exc:
            raise ValidationError(
                f"Record {record.id} references unknown region "
                f"'{record.region_id}'",
                record_id=record.id,
            ) from exc
        by_group.setdefault(group, []).append(record.values)
    groups: dict[str, dict[str, dict[str, float]]] = {}
    for group in sorted(by_group):
        values = np.array(by_group[group], dtype=np.int64).reshape(-1, schema.d)
        total = values.shape[0]
        groups[group] = {
            attr.name: {
                label: float(count) / total
                for label, count in zip(
                    attr.categories,
                    np.bincount(values[:, column], minlength=len(attr.categories)),
                )
            }
            for column, attr in enumerate(schema.attributes)
        }
    return DistributionSpec(
        population_range=list(population_range or default_population_range()),
        groups=groups,
    )
