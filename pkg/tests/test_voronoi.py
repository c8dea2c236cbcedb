import numpy as np
import pytest
from geoanon.aggregation import assign_regions_to_sites, brute_force_assignment
from geoanon.core import Point2D, Site
from geoanon.exceptions import ValidationError
from .conftest import make_regions


def sites_at(coords):
    return [Site(i, Point2D(float(x), float(y))) for i, (x, y) in enumerate(coords)]


def test_nearest_site():
    groups = assign_regions_to_sites(make_regions([(1, 1)]), sites_at([(0, 0), (10, 0)]))
    assert groups == {0: ["r00000"], 1: []}


def test_tie_goes_to_lowest_index():
    groups = assign_regions_to_sites(make_regions([(5, 0)]), sites_at([(0, 0), (10, 0)]))
    assert groups[0] == ["r00000"]


def test_coincident_sites():
    groups = assign_regions_to_sites(make_regions([(3, 3)]), sites_at([(1, 1), (1, 1)]))
    assert groups == {0: ["r00000"], 1: []}


def test_needs_a_site():
    with pytest.raises(ValidationError):
        assign_regions_to_sites(make_regions([(0, 0)]), [])


def test_no_regions():
    assert assign_regions_to_sites([], sites_at([(0, 0), (1, 1)])) == {0: [], 1: []}


def test_matches_brute_force_large():
    rng = np.random.default_rng(123)
    regions = make_regions(rng.random((2000, 2)).tolist())
    sites = sites_at(rng.random((50, 2)).tolist())
    assert assign_regions_to_sites(regions, sites) == brute_force_assignment(regions, sites)


@pytest.mark.parametrize("seed", range(50))
def test_matches_brute_force_with_ties(seed):
    rng = np.random.default_rng(seed)
    n_sites = int(rng.integers(1, 51))
    n_points = int(rng.integers(1, 2001))
    if seed % 2:
        # integer grid: many points equidistant from several sites
        sites = sites_at(rng.integers(0, 8, size=(n_sites, 2)).tolist())
        regions = make_regions((rng.integers(0, 16, size=(n_points, 2)) / 2).tolist())
    else:
        sites = sites_at((rng.random((n_sites, 2)) * 100).tolist())
        regions = make_regions((rng.random((n_points, 2)) * 100).tolist())
    assert assign_regions_to_sites(regions, sites) == brute_force_assignment(regions, sites)
