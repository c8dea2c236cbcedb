"""Voronoi membership by nearest-site search.

A point lies in the Voronoi region of a site exactly when that site is its
nearest one, so no diagram is built: sites go into a k-d tree and every
region point is matched to its nearest site. Equidistant sites are resolved
to the lowest site index.
"""
from collections.abc import Sequence
import numpy as np
from scipy.spatial import cKDTree
from ..conf import KDTREE_LEAFSIZE, TIE_TOLERANCE
from ..core import InitialRegion, Site
from ..exceptions import ValidationError


def _coordinates(regions: Sequence[InitialRegion]) -> np.ndarray:
    points = np.array(
        [region.point.as_tuple() for region in regions], dtype=float
    ).reshape(-1, 2)
    if not np.isfinite(points).all():
        raise ValidationError("Region points must have finite coordinates")
    return points


def _site_coordinates(sites: Sequence[Site]) -> np.ndarray:
    if not sites:
        raise ValidationError("At least one site is required")
    ordered = sorted(sites, key=lambda site: site.index)
    return np.array(
        [site.location.as_tuple() for site in ordered], dtype=float
    ).reshape(-1, 2)


def _squared_distances(point: np.ndarray, candidates: np.ndarray) -> np.ndarray:
    return (point[0] - candidates[:, 0]) ** 2 + (point[1] - candidates[:, 1]) ** 2


def _group(
    regions: Sequence[InitialRegion], sites: Sequence[Site], nearest: np.ndarray
) -> dict[int, list[str]]:
    indexes = sorted(site.index for site in sites)
    groups: dict[int, list[str]] = {index: [] for index in indexes}
    for region, position in zip(regions, nearest.tolist()):
        groups[indexes[position]].append(region.id)
    return groups


def nearest_site_positions(
    points: np.ndarray,
    site_points: np.ndarray,
    leafsize: int = KDTREE_LEAFSIZE,
    tolerance: float = TIE_TOLERANCE,
) -> np.ndarray:
    """Position (in ``site_points``) of the nearest site of every point.

    The tree answers the nearest distance; every site within that distance
    (plus a relative tolerance) is then re-checked with exact squared
    distances, and the first minimum wins.
    """
    if len(points) == 0:
        return np.empty(0, dtype=np.int64)
    tree = cKDTree(site_points, leafsize=leafsize)
    distances, nearest = tree.query(points, k=1)
    nearest = np.asarray(nearest, dtype=np.int64)
    radius = distances * (1.0 + tolerance) + 1e-12
    candidates = tree.query_ball_point(points, r=radius)
    for i, found in enumerate(candidates):
        if len(found) < 2:
            continue
        found = np.sort(np.asarray(found, dtype=np.int64))
        squared = _squared_distances(points[i], site_points[found])
        nearest[i] = found[int(np.argmin(squared))]
    return nearest


def assign_regions_to_sites(
    regions: Sequence[InitialRegion],
    sites: Sequence[Site],
    leafsize: int = KDTREE_LEAFSIZE,
) -> dict[int, list[str]]:
    """assign_regions_to_sites.

    Returns:
        dict: site index -> region ids (input order); every site is a key,
        possibly with an empty list.
    """
    site_points = _site_coordinates(sites)
    points = _coordinates(regions)
    return _group(regions, sites, nearest_site_positions(points, site_points, leafsize))


def brute_force_assignment(
    regions: Sequence[InitialRegion], sites: Sequence[Site]
) -> dict[int, list[str]]:
    """All-pairs nearest-site search, O(n * s); reference for the tree path."""
    site_points = _site_coordinates(sites)
    points = _coordinates(regions)
    if len(points) == 0:
        return _group(regions, sites, np.empty(0, dtype=np.int64))
    squared = (points[:, 0:1] - site_points[None, :, 0]) ** 2 + (
        points[:, 1:2] - site_points[None, :, 1]
    ) ** 2
    return _group(regions, sites, np.argmin(squared, axis=1))
