"""
Site placement: how many sites, and where.
"""
from ..exceptions import ConfigError
from .abstract import AbstractPlacement
from .count import choose_site_count
from .density import (
    PlacedPoint,
    Row,
    Cell,
    initial_row_count,
    ideal_row_population,
    partition_into_rows,
    cells_per_row,
    reconcile_cell_counts,
    partition_row_into_cells,
    cell_site,
    balanced_density_cells,
    place_sites,
)
from .strategies import BalancedDensityPlacement, UniformGridPlacement

PLACEMENTS: dict[str, type[AbstractPlacement]] = {
    BalancedDensityPlacement.name: BalancedDensityPlacement,
    UniformGridPlacement.name: UniformGridPlacement,
}


def get_placement(name: str) -> AbstractPlacement:
    try:
        return PLACEMENTS[name]()
    except KeyError as exc:
        raise ConfigError(
            f"Unknown placement '{name}', expected one of: {', '.join(PLACEMENTS)}"
        ) from exc


__all__ = (
    "AbstractPlacement",
    "BalancedDensityPlacement",
    "UniformGridPlacement",
    "PLACEMENTS",
    "get_placement",
    "choose_site_count",
    "PlacedPoint",
    "Row",
    "Cell",
    "initial_row_count",
    "ideal_row_population",
    "partition_into_rows",
    "cells_per_row",
    "reconcile_cell_counts",
    "partition_row_into_cells",
    "cell_site",
    "balanced_density_cells",
    "place_sites",
)
