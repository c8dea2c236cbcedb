"""
Static renders of an aggregation.
"""
from .maps import MapFormat, render_svg, render_geojson, voronoi_cells
from .palette import region_color
from .parser import TemplateParser

__all__ = (
    "MapFormat",
    "render_svg",
    "render_geojson",
    "voronoi_cells",
    "region_color",
    "TemplateParser",
)
