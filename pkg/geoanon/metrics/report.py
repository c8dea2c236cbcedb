"""Metrics report, as written to report.json."""
from collections.abc import Mapping, Sequence
from typing import Any, Optional
from datamodel import BaseModel, Field
from ..aggregation import AnonymizationResult, PhaseTimer
from ..conf import METRIC_PRECISION, RNG_ALGORITHM
from ..core import InitialRegion, Record
from ..exceptions import ValidationError
from ..libs.models import build_model
from ..version import __version__
from .measures import (
    compactness,
    discernibility,
    non_uniform_entropy,
    suppression_count,
    timing_report,
)

ENTROPY_SCOPE = "surviving_records"
REQUIRED_FIELDS = (
    "parameters",
    "suppressed_count",
    "compactness",
    "discernibility",
    "non_uniform_entropy",
)
NUMERIC_FIELDS = {
    "suppressed_count": int,
    "compactness": (int, float),
    "discernibility": int,
    "non_uniform_entropy": (int, float),
}
REPORT_FIELDS = (
    "parameters",
    "suppressed_count",
    "compactness",
    "discernibility",
    "non_uniform_entropy",
    "timings_ms",
    "aggregated_region_count",
    "record_count",
    "surviving_count",
    "placement",
    "rng_algorithm",
    "entropy_scope",
    "version",
)


class MetricsReport(BaseModel):
    """MetricsReport.

    The five quality measures of one run with the parameters that produced
    them. Only ``timings_ms`` depends on the machine.
    """
    parameters: dict = Field(required=True)
    suppressed_count: int = Field(required=True, default=0)
    compactness: float = Field(required=True, default=0.0)
    discernibility: int = Field(required=True, default=0)
    non_uniform_entropy: float = Field(required=True, default=0.0)
    timings_ms: dict = Field(required=False, default_factory=dict)
    aggregated_region_count: int = Field(required=False, default=0)
    record_count: int = Field(required=False, default=0)
    surviving_count: int = Field(required=False, default=0)
    placement: str = Field(required=False, default="balanced_density")
    rng_algorithm: str = Field(required=False, default=RNG_ALGORITHM)
    entropy_scope: str = Field(required=False, default=ENTROPY_SCOPE)
    version: str = Field(required=False, default=__version__)

    class Meta:
        strict: bool = True
        title: str = "MetricsReport"

    def to_document(self) -> dict[str, Any]:
        return {
            "parameters": dict(self.parameters),
            "suppressed_count": self.suppressed_count,
            "compactness": self.compactness,
            "discernibility": self.discernibility,
            "non_uniform_entropy": self.non_uniform_entropy,
            "timings_ms": dict(self.timings_ms),
            "aggregated_region_count": self.aggregated_region_count,
            "record_count": self.record_count,
            "surviving_count": self.surviving_count,
            "placement": self.placement,
            "rng_algorithm": self.rng_algorithm,
            "entropy_scope": self.entropy_scope,
            "version": self.version,
        }

    @classmethod
    def from_document(
        cls, document: Mapping[str, Any], source: str = "report"
    ) -> "MetricsReport":
        if not isinstance(document, Mapping):
            raise ValidationError(f"Invalid MetricsReport in {source}: not an object")
        missing = [key for key in REQUIRED_FIELDS if key not in document]
        if missing:
            raise ValidationError(
                f"Invalid MetricsReport in {source}: missing {', '.join(missing)}"
            )
        if not isinstance(document["parameters"], Mapping):
            raise ValidationError(
                f"Invalid MetricsReport in {source}: parameters must be an object"
            )
        for key, kind in NUMERIC_FIELDS.items():
            value = document.get(key)
            if isinstance(value, bool) or not isinstance(value, kind):
                raise ValidationError(
                    f"Invalid MetricsReport in {source}: {key} must be numeric, got {value!r}"
                )
        return build_model(
            cls,
            source,
            **{key: document[key] for key in REPORT_FIELDS if key in document},
        )


def round_metric(value: float, precision: int = METRIC_PRECISION) -> float:
    return round(float(value), precision)


def generalization_pairs(
    result: AnonymizationResult, records: Sequence[Record]
) -> tuple[list[str], list[int]]:
    """(original region, aggregated region) of every surviving record."""
    aggregated_of = result.aggregated_of
    removed = set(result.suppressed_record_ids)
    surviving = [record for record in records if record.id not in removed]
    return (
        [record.region_id for record in surviving],
        [aggregated_of[record.region_id] for record in surviving],
    )


def run_parameters(result: AnonymizationResult) -> dict[str, Any]:
    return {
        "k": result.config.k,
        "s": result.site_count,
        "seed": result.config.seed,
        "site_count": result.config.site_count,
        "coordinate_source": result.config.coordinate_source,
    }


def build_report(
    result: AnonymizationResult,
    regions: Sequence[InitialRegion],
    records: Sequence[Record],
    timer: Optional[PhaseTimer] = None,
    precision: int = METRIC_PRECISION,
) -> MetricsReport:
    timer = timer or PhaseTimer(result.timings)
    with timer.phase("metrics"):
        original, generalized = generalization_pairs(result, records)
        values = {
            "suppressed_count": suppression_count(result),
            "compactness": round_metric(compactness(result, regions), precision),
            "discernibility": discernibility(result, result.config.k),
            "non_uniform_entropy": round_metric(
                non_uniform_entropy(original, generalized), precision
            ),
        }
    return MetricsReport(
        parameters=run_parameters(result),
        timings_ms={
            name: round_metric(value, 3)
            for name, value in timing_report(timer.as_dict()).items()
        },
        aggregated_region_count=len(result.aggregated_regions),
        record_count=result.record_count,
        surviving_count=result.surviving_count,
        placement=result.placement,
        **values,
    )
