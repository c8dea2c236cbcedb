"""Initial regionalization loader.

Regions come from CSV (``region_id,x,y,population,group[,wkt]``) or from a
GeoJSON FeatureCollection. Each region is reduced to one planar point, either
the provided coordinates or the area-weighted centroid of its polygon.
"""
from dataclasses import dataclass
import math
from pathlib import Path
from typing import Any, Optional
import pandas as pd
from shapely import wkt as shapely_wkt
from shapely.errors import ShapelyError
from shapely.geometry import shape
from shapely.geometry.base import BaseGeometry
from navconfig.logging import logging
from ..core import CoordinateSource, InitialRegion, Point2D
from ..exceptions import IngestError, ValidationError
from ..libs.json import read_json

logger = logging.getLogger("geoanon.ingest")

GEOJSON_SUFFIXES = (".geojson", ".json")


@dataclass(slots=True)
class RegionFileRow:
    region_id: str
    x: Optional[float] = None
    y: Optional[float] = None
    polygon: Optional[BaseGeometry] = None
    population: Optional[int] = None
    group_label: Optional[str] = None

    @property
    def has_coordinates(self) -> bool:
        return self.x is not None and self.y is not None


def _vertex_mean(geometry: BaseGeometry) -> Point2D:
    if geometry.geom_type == "MultiPolygon":
        coords = [c for poly in geometry.geoms for c in poly.exterior.coords[:-1]]
    elif geometry.geom_type == "Polygon":
        coords = list(geometry.exterior.coords[:-1])
    else:
        coords = list(geometry.coords)
    if not coords:
        raise ValidationError("Empty polygon has no vertices")
    xs, ys = zip(*coords)
    return Point2D(math.fsum(xs) / len(xs), math.fsum(ys) / len(ys))


def polygon_centroid(geometry: BaseGeometry, region_id: str = "") -> Point2D:
    """Area-weighted centroid; vertex mean when the polygon has no area."""
    if geometry.is_empty:
        raise ValidationError(
            f"Region {region_id} has an empty polygon", region_id=region_id
        )
    if geometry.area == 0:
        logger.warning(
            f"Region {region_id}: degenerate polygon (zero area), "
            "using the mean of its vertices"
        )
        return _vertex_mean(geometry)
    centroid = geometry.centroid
    return Point2D(float(centroid.x), float(centroid.y))


def _as_float(value: Any, field: str, region_id: str) -> Optional[float]:
    if value is None or value == "":
        return None
    try:
        return float(value)
    except (TypeError, ValueError) as exc:
        raise ValidationError(
            f"Region {region_id}: invalid {field} '{value}'",
            region_id=region_id,
        ) from exc


def _as_population(value: Any, region_id: str) -> Optional[int]:
    if value is None or value == "":
        return None
    try:
        population = int(value)
    except (TypeError, ValueError) as exc:
        raise ValidationError(
            f"Region {region_id}: invalid population '{value}'",
            region_id=region_id,
        ) from exc
    if population < 0:
        raise ValidationError(
            f"Region {region_id}: negative population {population}",
            region_id=region_id,
        )
    return population


def _read_csv_rows(path: Path) -> list[RegionFileRow]:
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError:
        return []
    except OSError as exc:
        raise IngestError(f"Cannot read regions file: {exc}", path=path) from exc
    if "region_id" not in df.columns:
        raise ValidationError(
            f"Regions file {path} has no 'region_id' column", path=str(path)
        )
    rows = []
    for item in df.to_dict(orient="records"):
        rid = str(item["region_id"])
        polygon = None
        if item.get("wkt"):
            try:
                polygon = shapely_wkt.loads(item["wkt"])
            except ShapelyError as exc:
                raise ValidationError(
                    f"Region {rid}: invalid WKT polygon", region_id=rid
                ) from exc
        rows.append(
            RegionFileRow(
                region_id=rid,
                x=_as_float(item.get("x"), "x", rid),
                y=_as_float(item.get("y"), "y", rid),
                polygon=polygon,
                population=_as_population(item.get("population"), rid),
                group_label=item.get("group") or None,
            )
        )
    return rows


def _read_geojson_rows(path: Path) -> list[RegionFileRow]:
    document = read_json(path)
    if not isinstance(document, dict) or document.get("type") != "FeatureCollection":
        raise ValidationError(
            f"Regions file {path} is not a GeoJSON FeatureCollection",
            path=str(path),
        )
    rows = []
    for position, feature in enumerate(document.get("features") or []):
        properties = feature.get("properties") or {}
        if "region_id" not in properties:
            raise ValidationError(
                f"Feature #{position} has no 'region_id' property",
                path=str(path),
            )
        rid = str(properties["region_id"])
        row = RegionFileRow(
            region_id=rid,
            x=_as_float(properties.get("x"), "x", rid),
            y=_as_float(properties.get("y"), "y", rid),
            population=_as_population(properties.get("population"), rid),
            group_label=properties.get("group") or None,
        )
        geometry = feature.get("geometry")
        if geometry:
            try:
                geom = shape(geometry)
            except (ShapelyError, KeyError, TypeError, ValueError) as exc:
                raise ValidationError(
                    f"Region {rid}: invalid geometry", region_id=rid
                ) from exc
            if geom.geom_type == "Point":
                row.x, row.y = float(geom.x), float(geom.y)
            elif geom.geom_type in ("Polygon", "MultiPolygon"):
                row.polygon = geom
            else:
                raise ValidationError(
                    f"Region {rid}: unsupported geometry {geom.geom_type}",
                    region_id=rid,
                )
        rows.append(row)
    return rows


def read_region_rows(path: str | Path) -> list[RegionFileRow]:
    path = Path(path)
    if not path.exists():
        raise IngestError("Regions file not found", path=path)
    if path.suffix.lower() in GEOJSON_SUFFIXES:
        return _read_geojson_rows(path)
    return _read_csv_rows(path)


def region_point(row: RegionFileRow, source: CoordinateSource) -> Point2D:
    if source is CoordinateSource.POLYGON_CENTROID and row.polygon is not None:
        point = polygon_centroid(row.polygon, row.region_id)
    elif row.has_coordinates:
        point = Point2D(row.x, row.y)  # type: ignore[arg-type]
    elif source is CoordinateSource.POLYGON_CENTROID:
        raise ValidationError(
            f"Region {row.region_id} has neither a polygon nor coordinates",
            region_id=row.region_id,
        )
    else:
        raise ValidationError(
            f"Region {row.region_id} is missing x/y coordinates",
            region_id=row.region_id,
        )
    if not point.is_finite:
        raise ValidationError(
            f"Region {row.region_id} has non-finite coordinates",
            region_id=row.region_id,
        )
    return point


def load_regions(
    path: str | Path,
    coordinate_source: CoordinateSource | str = CoordinateSource.PROVIDED,
) -> list[InitialRegion]:
    """load_regions.

    Args:
        path: regions CSV or GeoJSON file.
        coordinate_source: ``provided`` coordinates or ``polygon_centroid``.

    Raises:
        ValidationError: duplicated id, missing or non-finite coordinates.
        IngestError: the file cannot be read.
    """
    source = CoordinateSource(coordinate_source)
    regions: list[InitialRegion] = []
    seen: set[str] = set()
    for row in read_region_rows(path):
        if row.region_id in seen:
            raise ValidationError(
                f"Duplicated region id '{row.region_id}'",
                region_id=row.region_id,
            )
        seen.add(row.region_id)
        regions.append(
            InitialRegion(
                id=row.region_id,
                point=region_point(row, source),
                population=row.population or 0,
                group=row.group_label,
            )
        )
    logger.debug(f"Loaded {len(regions)} regions from {path}")
    return regions


def read_region_geometries(path: str | Path) -> dict[str, BaseGeometry]:
    """Polygons by region id, for map rendering; empty for point-only files."""
    return {
        row.region_id: row.polygon
        for row in read_region_rows(path)
        if row.polygon is not None
    }
