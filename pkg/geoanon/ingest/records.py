"""Schema and record loaders."""
from pathlib import Path
import pandas as pd
from navconfig.logging import logging
from ..core import QuasiIdentifierSchema, Record
from ..exceptions import IngestError, ValidationError
from ..libs.json import read_json

logger = logging.getLogger("geoanon.ingest")

RECORD_COLUMNS = ("record_id", "region_id")


def load_schema(path: str | Path) -> QuasiIdentifierSchema:
    document = read_json(path)
    if not isinstance(document, dict):
        raise ValidationError(f"Schema file {path} must hold a JSON object")
    return QuasiIdentifierSchema.from_dict(document)


def load_records(path: str | Path, schema: QuasiIdentifierSchema) -> list[Record]:
    """load_records.

    Reads ``record_id,region_id,<attr1>,...`` and maps category labels to
    schema indices. Columns not named by the schema are ignored, so one
    records file serves every quasi-identifier selection.

    Unresolved region ids are left to the pipeline to report.
    """
    path = Path(path)
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        return []
    except OSError as exc:
        raise IngestError(f"Cannot read records file: {exc}", path=path) from exc
    missing = [c for c in (*RECORD_COLUMNS, *schema.names) if c not in df.columns]
    if missing:
        raise ValidationError(
            f"Records file {path} is missing columns: {', '.join(missing)}",
            path=str(path),
            columns=missing,
        )
    columns = []
    for name in schema.names:
        codes = df[name].map(schema.lookup(name))
        unknown = codes.isna()
        if unknown.any():
            row = int(unknown.to_numpy().nonzero()[0][0])
            raise ValidationError(
                f"Row {row + 1}: unknown category '{df[name].iloc[row]}' "
                f"for attribute '{name}'",
                row=row + 1,
                attribute=name,
            )
        columns.append(codes.astype("int64").tolist())
    ids = df["record_id"].tolist()
    region_ids = df["region_id"].tolist()
    values = list(zip(*columns)) if columns else [()] * len(ids)
    records = [
        Record(id=rid, region_id=region, values=tuple(vals))
        for rid, region, vals in zip(ids, region_ids, values)
    ]
    logger.debug(f"Loaded {len(records)} records from {path}")
    return records


def project_records(
    records: list[Record], schema: QuasiIdentifierSchema, names: list[str]
) -> tuple[QuasiIdentifierSchema, list[Record]]:
    """Restrict records to a selection of quasi-identifiers."""
    subschema = schema.select(names)
    positions = schema.positions(names)
    return subschema, [record.project(positions) for record in records]
