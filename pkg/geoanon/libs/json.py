"""JSON encoding for every artifact geoanon writes.

Keys are sorted and output is indented so files are byte-stable.
"""
from pathlib import Path
from typing import Any
import orjson
from ..exceptions import IngestError, ValidationError

JSON_OPTIONS = (
    orjson.OPT_INDENT_2
    | orjson.OPT_SORT_KEYS
    | orjson.OPT_SERIALIZE_NUMPY
    | orjson.OPT_NON_STR_KEYS
)


def json_encoder(obj: Any) -> str:
    return orjson.dumps(obj, option=JSON_OPTIONS).decode("utf-8") + "\n"


def json_decoder(content: str | bytes) -> Any:
    try:
        return orjson.loads(content)
    except orjson.JSONDecodeError as exc:
        raise ValidationError(f"Invalid JSON document: {exc}") from exc


def read_json(path: str | Path) -> Any:
    path = Path(path)
    try:
        content = path.read_bytes()
    except OSError as exc:
        raise IngestError(f"Cannot read JSON file: {exc}", path=path) from exc
    try:
        return json_decoder(content)
    except ValidationError as exc:
        raise ValidationError(f"{exc} (path: {path})", path=str(path)) from exc


def write_json(path: str | Path, obj: Any) -> Path:
    path = Path(path)
    try:
        path.write_text(json_encoder(obj), encoding="utf-8")
    except OSError as exc:
        raise IngestError(f"Cannot write JSON file: {exc}", path=path) from exc
    return path
