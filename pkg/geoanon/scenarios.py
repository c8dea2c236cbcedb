"""Comparison scenarios.

A scenario selects quasi-identifiers and sets k and the site count; each one
is run with balanced-density placement and with the uniform-grid baseline at
the same number of sites.
"""
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Optional
from datamodel import BaseModel, Field
from navconfig.logging import logging
from .aggregation import PhaseTimer, anonymize
from .core import AnonymizationConfig, InitialRegion, QuasiIdentifierSchema, Record
from .exceptions import GeoAnonException, ValidationError
from .ingest import project_records
from .libs.json import read_json
from .libs.models import build_model
from .metrics import build_report
from .placement import BalancedDensityPlacement, UniformGridPlacement

logger = logging.getLogger("geoanon.bench")

BENCH_COLUMNS = (
    "scenario",
    "method",
    "label",
    "d",
    "k",
    "s",
    "aggregated_region_count",
    "surviving_count",
    "suppressed_count",
    "compactness",
    "discernibility",
    "non_uniform_entropy",
    "error",
)
TIMING_COLUMNS = (
    "scenario",
    "method",
    "load",
    "classes",
    "placement",
    "aggregation",
    "metrics",
    "total",
)


class Scenario(BaseModel):
    name: str = Field(required=True)
    quasi_identifiers: list = Field(required=False, default_factory=list)
    k: int = Field(required=True)
    sites: Optional[int] = Field(required=False, default=None)

    class Meta:
        strict: bool = True
        title: str = "Scenario"


def load_scenarios(path: str | Path) -> list[Scenario]:
    document = read_json(path)
    if not isinstance(document, list):
        raise ValidationError(f"Scenarios file {path} must hold a JSON array")
    scenarios = []
    for position, item in enumerate(document):
        if not isinstance(item, dict) or "name" not in item or "k" not in item:
            raise ValidationError(
                f"Scenario #{position + 1} needs at least 'name' and 'k'"
            )
        try:
            fields = {
                "name": str(item["name"]),
                "quasi_identifiers": list(item.get("quasi_identifiers") or []),
                "k": int(item["k"]),
                "sites": None if item.get("sites") is None else int(item["sites"]),
            }
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"Invalid scenario #{position + 1}: {exc}") from exc
        scenarios.append(build_model(Scenario, f"scenario #{position + 1}", **fields))
    names = [scenario.name for scenario in scenarios]
    if len(set(names)) != len(names):
        raise ValidationError("Scenario names must be unique")
    return scenarios


def run_scenario(
    scenario: Scenario,
    regions: Sequence[InitialRegion],
    records: Sequence[Record],
    schema: QuasiIdentifierSchema,
    seed: int = 0,
) -> tuple[list[dict[str, Any]], list[dict[str, Any]]]:
    """Rows of metrics and timings, one per placement."""
    rows, timings = [], []
    for placement in (BalancedDensityPlacement(), UniformGridPlacement()):
        row: dict[str, Any] = {column: None for column in BENCH_COLUMNS}
        row.update(
            scenario=scenario.name,
            method=placement.name,
            label=placement.label,
            d=len(scenario.quasi_identifiers),
            k=scenario.k,
        )
        timer = PhaseTimer()
        try:
            with timer.phase("load"):
                subschema, projected = project_records(
                    list(records), schema, list(scenario.quasi_identifiers)
                )
            config = AnonymizationConfig(
                k=scenario.k,
                site_count=scenario.sites,
                seed=seed,
                placement=placement.name,
            )
            result = anonymize(
                regions, projected, subschema, config, placement=placement, timer=timer
            )
            report = build_report(result, regions, projected, timer)
            row.update(
                s=result.site_count,
                aggregated_region_count=report.aggregated_region_count,
                surviving_count=report.surviving_count,
                suppressed_count=report.suppressed_count,
                compactness=report.compactness,
                discernibility=report.discernibility,
                non_uniform_entropy=report.non_uniform_entropy,
                error="",
            )
        except GeoAnonException as exc:
            logger.warning(f"Scenario {scenario.name} ({placement.name}) failed: {exc}")
            row["error"] = str(exc)
        except Exception as exc:  # pylint: disable=W0718
            logger.exception(f"Scenario {scenario.name} ({placement.name}) crashed")
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
        durations = timer.as_dict()
        timings.append(
            {
                "scenario": scenario.name,
                "method": placement.name,
                **{name: round(durations.get(name, 0.0), 3) for name in TIMING_COLUMNS[2:-1]},
                "total": round(sum(durations.values()), 3),
            }
        )
    return rows, timings


def run_bench(
    scenarios: Sequence[Scenario],
    regions: Sequence[InitialRegion],
    records: Sequence[Record],
    schema: QuasiIdentifierSchema,
    seed: int = 0,
) -> tuple[list[dict[str, Any]], list[dict[str, Any]]]:
    """Scenarios run sequentially so their timings never overlap."""
    rows: list[dict[str, Any]] = []
    timings: list[dict[str, Any]] = []
    for scenario in scenarios:
        scenario_rows, scenario_timings = run_scenario(
            scenario, regions, records, schema, seed
        )
        rows.extend(scenario_rows)
        timings.extend(scenario_timings)
    return rows, timings
