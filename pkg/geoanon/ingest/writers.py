"""Writers for datasets and anonymized outputs.

CSV files use ``\\n`` line endings and pandas' shortest round-trip float
representation, so identical inputs give identical bytes.
"""
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path
from typing import Any
import pandas as pd
from ..conf import ANONYMIZED_FILE, ASSIGNMENT_FILE, REPORT_FILE, SITES_FILE, SUPPRESSED_FILE
from ..core import InitialRegion, QuasiIdentifierSchema, Record, Site
from ..exceptions import IngestError
from ..libs.json import write_json


def _to_csv(frame: pd.DataFrame, path: Path) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, lineterminator="\n")
    except OSError as exc:
        raise IngestError(f"Cannot write {path.name}: {exc}", path=path) from exc
    return path


def _label_columns(
    records: Sequence[Record], schema: QuasiIdentifierSchema
) -> dict[str, list[str]]:
    return {
        attr.name: [attr.categories[record.values[pos]] for record in records]
        for pos, attr in enumerate(schema.attributes)
    }


def write_records(
    records: Sequence[Record], schema: QuasiIdentifierSchema, path: str | Path
) -> Path:
    frame = pd.DataFrame(
        {
            "record_id": [record.id for record in records],
            "region_id": [record.region_id for record in records],
            **_label_columns(records, schema),
        },
        columns=["record_id", "region_id", *schema.names],
    )
    return _to_csv(frame, Path(path))


def write_regions(regions: Sequence[InitialRegion], path: str | Path) -> Path:
    frame = pd.DataFrame(
        {
            "region_id": [region.id for region in regions],
            "x": [region.point.x for region in regions],
            "y": [region.point.y for region in regions],
            "population": [region.population for region in regions],
            "group": [region.group or "" for region in regions],
        },
        columns=["region_id", "x", "y", "population", "group"],
    )
    return _to_csv(frame, Path(path))


def write_assignment(
    regions: Sequence[InitialRegion],
    aggregated_of: Mapping[str, int],
    path: str | Path,
) -> Path:
    frame = pd.DataFrame(
        {
            "region_id": [region.id for region in regions],
            "x": [region.point.x for region in regions],
            "y": [region.point.y for region in regions],
            "population": [region.population for region in regions],
            "aggregated_region_id": [aggregated_of[region.id] for region in regions],
        },
        columns=["region_id", "x", "y", "population", "aggregated_region_id"],
    )
    return _to_csv(frame, Path(path))


def write_sites(sites: Sequence[Site], path: str | Path) -> Path:
    frame = pd.DataFrame(
        {
            "site": [site.index for site in sites],
            "x": [site.location.x for site in sites],
            "y": [site.location.y for site in sites],
        },
        columns=["site", "x", "y"],
    )
    return _to_csv(frame, Path(path))


def write_anonymized(
    records: Sequence[Record],
    schema: QuasiIdentifierSchema,
    aggregated_of: Mapping[str, int],
    suppressed: Iterable[str],
    report: Mapping[str, Any],
    out_dir: str | Path,
) -> dict[str, Path]:
    """write_anonymized.

    Writes the surviving records with ``region_id`` replaced by
    ``aggregated_region_id``, the suppressed ids (one per line) and the
    metrics report.

    Returns:
        dict: output name -> path.
    """
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IngestError(f"Cannot create output directory: {exc}", path=out_dir) from exc
    suppressed_ids = list(suppressed)
    removed = set(suppressed_ids)
    surviving = [record for record in records if record.id not in removed]
    frame = pd.DataFrame(
        {
            "record_id": [record.id for record in surviving],
            "aggregated_region_id": [
                aggregated_of[record.region_id] for record in surviving
            ],
            **_label_columns(surviving, schema),
        },
        columns=["record_id", "aggregated_region_id", *schema.names],
    )
    outputs = {"anonymized": _to_csv(frame, out_dir.joinpath(ANONYMIZED_FILE))}
    sidecar = out_dir.joinpath(SUPPRESSED_FILE)
    try:
        sidecar.write_text(
            "".join(f"{rid}\n" for rid in suppressed_ids), encoding="utf-8"
        )
    except OSError as exc:
        raise IngestError(f"Cannot write suppressed ids: {exc}", path=sidecar) from exc
    outputs["suppressed"] = sidecar
    outputs["report"] = write_json(out_dir.joinpath(REPORT_FILE), dict(report))
    return outputs


def read_assignment(path: str | Path) -> pd.DataFrame:
    path = Path(path)
    try:
        frame = pd.read_csv(
            path,
            dtype={"region_id": str, "aggregated_region_id": "int64"},
            keep_default_na=False,
        )
    except (OSError, pd.errors.EmptyDataError) as exc:
        raise IngestError(f"Cannot read assignment: {exc}", path=path) from exc
    return frame
