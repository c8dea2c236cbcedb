"""Static maps of an aggregation: SVG and GeoJSON."""
from collections.abc import Mapping, Sequence
from enum import Enum
from typing import Any, Optional
import pandas as pd
from shapely.geometry import MultiPoint, Point, box, mapping
from shapely.geometry.base import BaseGeometry
from shapely.ops import voronoi_diagram
from navconfig.logging import logging
from ..exceptions import ValidationError
from .palette import region_color
from .parser import TemplateParser

logger = logging.getLogger("geoanon.render")

ASSIGNMENT_COLUMNS = ("region_id", "x", "y", "aggregated_region_id")


class MapFormat(str, Enum):
    SVG = "svg"
    GEOJSON = "geojson"


def _check_assignment(assignment: pd.DataFrame) -> None:
    missing = [column for column in ASSIGNMENT_COLUMNS if column not in assignment]
    if missing:
        raise ValidationError(f"Assignment is missing columns: {', '.join(missing)}")


def _bounds(xs: Sequence[float], ys: Sequence[float], padding: float = 0.05):
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    pad_x = (max_x - min_x) * padding or 0.5
    pad_y = (max_y - min_y) * padding or 0.5
    return min_x - pad_x, min_y - pad_y, max_x + pad_x, max_y + pad_y


def voronoi_cells(
    sites: Sequence[tuple[float, float]], envelope: tuple[float, float, float, float]
) -> list[BaseGeometry]:
    """Voronoi cells of the sites, clipped to ``envelope``."""
    frame = box(*envelope)
    if len(set(sites)) < 2:
        return [frame]
    diagram = voronoi_diagram(MultiPoint(list(sites)), envelope=frame)
    cells = [cell.intersection(frame) for cell in diagram.geoms]
    cells = [cell for cell in cells if not cell.is_empty]
    return sorted(cells, key=lambda cell: (cell.centroid.y, cell.centroid.x))


def render_svg(
    assignment: pd.DataFrame,
    sites: Optional[pd.DataFrame] = None,
    voronoi: bool = False,
    width: int = 800,
    title: str = "geoanon aggregation",
    parser: Optional[TemplateParser] = None,
) -> str:
    """render_svg.

    One ``<g>`` per aggregated region holding a circle per initial region,
    filled with the region colour. ``voronoi`` adds the outline of the Voronoi
    cell of every site.
    """
    _check_assignment(assignment)
    parser = parser or TemplateParser()
    xs = assignment["x"].astype(float).tolist()
    ys = assignment["y"].astype(float).tolist()
    site_xy: list[tuple[float, float]] = []
    if sites is not None and len(sites):
        site_xy = list(zip(sites["x"].astype(float), sites["y"].astype(float)))
    if not xs and not site_xy:
        envelope = (0.0, 0.0, 1.0, 1.0)
    else:
        envelope = _bounds(
            xs + [x for x, _ in site_xy], ys + [y for _, y in site_xy]
        )
    min_x, min_y, max_x, max_y = envelope
    scale = width / (max_x - min_x)
    height = max(1, round((max_y - min_y) * scale))

    def project(x: float, y: float) -> tuple[str, str]:
        return f"{(x - min_x) * scale:.3f}", f"{(max_y - y) * scale:.3f}"

    groups = []
    for aggregated_id, members in assignment.groupby(
        "aggregated_region_id", sort=True
    ):
        points = []
        for row in members.itertuples(index=False):
            cx, cy = project(float(row.x), float(row.y))
            points.append({"cx": cx, "cy": cy, "region_id": row.region_id})
        groups.append(
            {
                "id": int(aggregated_id),
                "color": region_color(int(aggregated_id)),
                "points": points,
            }
        )
    markers = []
    arm = 4.0
    for x, y in site_xy:
        cx, cy = ((x - min_x) * scale, (max_y - y) * scale)
        markers.append(
            {
                "cx": f"{cx:.3f}",
                "cy": f"{cy:.3f}",
                "x0": f"{cx - arm:.3f}",
                "x1": f"{cx + arm:.3f}",
                "y0": f"{cy - arm:.3f}",
                "y1": f"{cy + arm:.3f}",
            }
        )
    cells = []
    if voronoi:
        if not site_xy:
            raise ValidationError("Voronoi overlay needs the sites of the run")
        for cell in voronoi_cells(site_xy, envelope):
            polygons = getattr(cell, "geoms", [cell])
            for polygon in polygons:
                if polygon.geom_type != "Polygon":
                    continue
                cells.append(
                    " ".join(
                        ",".join(project(x, y)) for x, y in polygon.exterior.coords
                    )
                )
    return parser.render(
        "map.svg.j2",
        {
            "width": width,
            "height": height,
            "title": title,
            "radius": "3",
            "groups": groups,
            "sites": markers,
            "cells": cells,
        },
    )


def render_geojson(
    assignment: pd.DataFrame,
    geometries: Optional[Mapping[str, BaseGeometry]] = None,
) -> dict[str, Any]:
    """FeatureCollection with one feature per initial region.

    The region polygon is used when known, the region point otherwise.
    """
    _check_assignment(assignment)
    geometries = geometries or {}
    features = []
    for row in assignment.itertuples(index=False):
        geometry = geometries.get(row.region_id)
        if geometry is None:
            geometry = Point(float(row.x), float(row.y))
        properties = {
            "region_id": row.region_id,
            "aggregated_region_id": int(row.aggregated_region_id),
        }
        if "population" in assignment:
            properties["population"] = int(row.population)
        features.append(
            {"type": "Feature", "geometry": mapping(geometry), "properties": properties}
        )
    return {"type": "FeatureCollection", "features": features}
