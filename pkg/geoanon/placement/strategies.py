"""Placement strategies: balanced density and the uniform-grid baseline."""
from collections.abc import Sequence
import math
from ..core import InitialRegion, Point2D, Site
from ..exceptions import ConfigError
from .abstract import AbstractPlacement
from .density import place_sites


class BalancedDensityPlacement(AbstractPlacement):
    name = "balanced_density"
    label = "balanced density"

    def place(self, regions: Sequence[InitialRegion], s: int) -> list[Site]:
        return place_sites(regions, s)


class UniformGridPlacement(AbstractPlacement):
    """UniformGridPlacement.

    Population-agnostic comparison baseline: ``ceil(sqrt(s))`` columns over
    the bounding box of the points, as many rows as needed, one site at the
    centre of each of the first ``s`` grid cells (row-major, bottom row
    first).
    """
    name = "uniform_grid"
    label = "uniform grid (baseline)"
    padding: float = 0.5

    def place(self, regions: Sequence[InitialRegion], s: int) -> list[Site]:
        if not regions:
            return []
        if not 1 <= s <= len(regions):
            raise ConfigError(
                f"Cannot place {s} sites over {len(regions)} initial regions"
            )
        xs = [region.point.x for region in regions]
        ys = [region.point.y for region in regions]
        min_x, max_x = min(xs), max(xs)
        min_y, max_y = min(ys), max(ys)
        if max_x == min_x:
            min_x, max_x = min_x - self.padding, max_x + self.padding
        if max_y == min_y:
            min_y, max_y = min_y - self.padding, max_y + self.padding
        cols = math.isqrt(s)
        if cols * cols < s:
            cols += 1
        rows = -(-s // cols)
        width = (max_x - min_x) / cols
        height = (max_y - min_y) / rows
        return [
            Site(
                index=i,
                location=Point2D(
                    min_x + (i % cols + 0.5) * width,
                    min_y + (i // cols + 0.5) * height,
                ),
            )
            for i in range(s)
        ]
