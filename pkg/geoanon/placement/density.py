"""Balanced-density site placement.

The plane is cut into horizontal rows of roughly equal population, each row
into cells of roughly equal population, and one site is placed at the mean of
the points of every cell. Cell boundaries are never drawn: rows and cells are
containers of region points.
"""
from collections.abc import Sequence
from dataclasses import dataclass
import math
from typing import Optional
from navconfig.logging import logging
from ..core import InitialRegion, Point2D, Site
from ..exceptions import ConfigError, InfeasibleCellError

logger = logging.getLogger("geoanon.placement.density")


@dataclass(frozen=True, slots=True)
class PlacedPoint:
    region_id: str
    point: Point2D
    population: int


@dataclass(frozen=True, slots=True)
class Row:
    """Points of one row, ordered by x."""
    points: tuple[PlacedPoint, ...]

    @property
    def population(self) -> int:
        return sum(pt.population for pt in self.points)

    def __len__(self) -> int:
        return len(self.points)


@dataclass(frozen=True, slots=True)
class Cell:
    """Contiguous x-range of a row; holds exactly one site."""
    points: tuple[PlacedPoint, ...]

    @property
    def population(self) -> int:
        return sum(pt.population for pt in self.points)

    def __len__(self) -> int:
        return len(self.points)


def y_order(pt: PlacedPoint) -> tuple[float, float, str]:
    return (pt.point.y, pt.point.x, pt.region_id)


def x_order(pt: PlacedPoint) -> tuple[float, float, str]:
    return (pt.point.x, pt.point.y, pt.region_id)


def round_ratio(numerator: int, denominator: int) -> int:
    """numerator / denominator rounded to the nearest integer, halves up.

    Both operands are non-negative integers, so halves round away from zero.
    """
    return (2 * numerator + denominator) // (2 * denominator)


def initial_row_count(s: int) -> int:
    """R(sqrt(s)), at least 1."""
    root = math.isqrt(s)
    # (root + 0.5)^2 = root^2 + root + 0.25, never an integer
    if s - root * root > root:
        root += 1
    return max(1, root)


def ideal_row_population(p: int, r: int) -> int:
    """R(p / r)."""
    return round_ratio(p, r)


def _walk(
    points: Sequence[PlacedPoint],
    ideal: int,
    limit: Optional[int] = None,
    hold_empty_tail: bool = False,
) -> list[list[PlacedPoint]]:
    """Greedy walk cutting a group each time the ideal population is passed.

    The point that passes the ideal stays in the group when
    ``after - ideal <= ideal - before``, otherwise it opens the next group.
    A group is never closed with zero population. With ``limit`` the last
    group takes the whole remainder; with ``hold_empty_tail`` a group is not
    closed when only zero-population points follow it.
    """
    groups: list[list[PlacedPoint]] = []
    current: list[PlacedPoint] = []
    population = 0
    remaining = sum(pt.population for pt in points)
    # the current group takes every remaining point
    absorbing = limit is not None and limit <= 1

    def close(group: list[PlacedPoint]) -> bool:
        groups.append(group)
        return limit is not None and len(groups) == limit - 1

    for pt in points:
        if absorbing:
            current.append(pt)
            continue
        before = population
        current.append(pt)
        population += pt.population
        remaining -= pt.population
        if population < ideal:
            continue
        if before == 0 or population - ideal <= ideal - before:
            if hold_empty_tail and remaining == 0:
                absorbing = True
                continue
            absorbing = close(current)
            current, population = [], 0
            continue
        current.pop()
        absorbing = close(current)
        current, population = [pt], pt.population
        if absorbing or population < ideal:
            continue
        if hold_empty_tail and remaining == 0:
            absorbing = True
        else:
            absorbing = close(current)
            current, population = [], 0
    if current:
        groups.append(current)
    return groups


def partition_into_rows(
    points: Sequence[PlacedPoint], ideal: int, r: int
) -> list[Row]:
    """partition_into_rows.

    Walks the points bottom-up (y order) and cuts rows at the ideal row
    population. The number of rows may end up different from ``r``: an early
    remainder row absorbs what is left, or extra rows are created while the
    ideal keeps being passed.
    """
    if not points:
        return []
    ordered = sorted(points, key=y_order)
    groups = _walk(ordered, ideal, hold_empty_tail=True)
    if len(groups) != r:
        logger.debug(f"Row walk produced {len(groups)} rows instead of {r}")
    return [Row(points=tuple(sorted(group, key=x_order))) for group in groups]


def merge_excess_rows(rows: list[Row], s: int) -> list[Row]:
    """Merge the least populated rows until there are at most ``s``."""
    rows = list(rows)
    while len(rows) > s:
        i = min(range(len(rows)), key=lambda idx: (rows[idx].population, idx))
        if i == 0:
            j = 1
        elif i == len(rows) - 1:
            j = i - 1
        else:
            j = i - 1 if rows[i - 1].population <= rows[i + 1].population else i + 1
        lo, hi = min(i, j), max(i, j)
        merged = Row(points=tuple(sorted(rows[lo].points + rows[hi].points, key=x_order)))
        rows[lo:hi + 1] = [merged]
        logger.debug(f"Merged rows {lo} and {hi}: more rows than sites ({s})")
    return rows


def cells_per_row(row: Row, p: int, s: int) -> int:
    """R(s * r_alpha) with r_alpha = row population / p, at least 1."""
    if p <= 0:
        return 1
    return max(1, round_ratio(s * row.population, p))


def reconcile_cell_counts(rows: Sequence[Row], p: int, s: int) -> list[int]:
    """Per-row cell counts summing to exactly ``s``.

    Rounded counts are capped by the number of points of the row; cells are
    then added to the rows furthest below their exact quota (``s * r_alpha``)
    or removed from the rows furthest above it, one at a time, lowest row
    index first on ties.
    """
    counts = [min(cells_per_row(row, p, s), len(row)) for row in rows]
    p = max(p, 1)

    def deficit(idx: int) -> int:
        # (quota - count) scaled by p, exact in integers
        return s * rows[idx].population - counts[idx] * p

    while sum(counts) < s:
        candidates = [i for i, row in enumerate(rows) if counts[i] < len(row)]
        if not candidates:
            raise InfeasibleCellError(
                f"Cannot place {s} cells over {sum(len(r) for r in rows)} points"
            )
        best = max(candidates, key=lambda idx: (deficit(idx), -idx))
        counts[best] += 1
    while sum(counts) > s:
        candidates = [i for i in range(len(rows)) if counts[i] > 1]
        if not candidates:
            raise InfeasibleCellError(
                f"Cannot reduce {len(rows)} rows to {s} cells"
            )
        best = min(candidates, key=lambda idx: (deficit(idx), idx))
        counts[best] -= 1
    return counts


def _split(points: list[PlacedPoint]) -> tuple[list[PlacedPoint], list[PlacedPoint]]:
    """Cut at the position that best balances the two halves."""
    total = sum(pt.population for pt in points)
    best_at, best_gap, left = 1, None, 0
    for at in range(1, len(points)):
        left += points[at - 1].population
        gap = abs(total - 2 * left)
        if best_gap is None or gap < best_gap:
            best_at, best_gap = at, gap
    return points[:best_at], points[best_at:]


def partition_row_into_cells(
    row: Row, r_c: int, ideal_cell_population: int
) -> list[Cell]:
    """partition_row_into_cells.

    Walks the row left to right the same way rows are cut. The last cell
    takes whatever remains; when the walk yields too few cells, the most
    populated cell with two or more points is split in two until there are
    ``r_c`` cells.

    Raises:
        InfeasibleCellError: ``r_c`` is below 1 or above the point count.
    """
    if r_c < 1 or r_c > len(row):
        raise InfeasibleCellError(
            f"Row with {len(row)} points cannot hold {r_c} cells",
            cells=r_c,
            points=len(row),
        )
    groups = _walk(row.points, ideal_cell_population, limit=r_c)
    while len(groups) < r_c:
        splittable = [i for i, group in enumerate(groups) if len(group) >= 2]
        if not splittable:
            raise InfeasibleCellError(f"No cell can be split to reach {r_c} cells")
        largest = max(
            splittable,
            key=lambda idx: (sum(pt.population for pt in groups[idx]), -idx),
        )
        groups[largest:largest + 1] = list(_split(groups[largest]))
    return [Cell(points=tuple(group)) for group in groups]


def cell_site(cell: Cell) -> Point2D:
    """Mean of the cell points."""
    if not cell.points:
        raise InfeasibleCellError("Empty cell has no site")
    n = len(cell.points)
    return Point2D(
        math.fsum(pt.point.x for pt in cell.points) / n,
        math.fsum(pt.point.y for pt in cell.points) / n,
    )


def balanced_density_cells(
    regions: Sequence[InitialRegion], s: int
) -> list[list[Cell]]:
    """Rows of cells for ``s`` sites (bottom row first, cells left to right)."""
    if not 1 <= s <= len(regions):
        raise ConfigError(
            f"Cannot place {s} sites over {len(regions)} initial regions"
        )
    points = [PlacedPoint(r.id, r.point, r.population) for r in regions]
    p = sum(pt.population for pt in points)
    if p == 0:
        logger.warning(
            "All regions have zero population: placing sites as if every "
            "region held one record"
        )
        points = [PlacedPoint(pt.region_id, pt.point, 1) for pt in points]
        p = len(points)
    r = initial_row_count(s)
    ideal = max(1, ideal_row_population(p, r))
    rows = merge_excess_rows(partition_into_rows(points, ideal, r), s)
    counts = reconcile_cell_counts(rows, p, s)
    return [
        partition_row_into_cells(row, count, max(1, round_ratio(row.population, count)))
        for row, count in zip(rows, counts)
    ]


def place_sites(regions: Sequence[InitialRegion], s: int) -> list[Site]:
    """One site per balanced-density cell, indexed row by row."""
    if not regions:
        return []
    cells = [cell for row in balanced_density_cells(regions, s) for cell in row]
    return [Site(index=i, location=cell_site(cell)) for i, cell in enumerate(cells)]
