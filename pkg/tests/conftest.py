from pathlib import Path
import numpy as np
import pytest
from geoanon.core import Attribute, InitialRegion, Point2D, QuasiIdentifierSchema, Record

FIXTURES = Path(__file__).resolve().parent.joinpath("fixtures")
GOLDEN = Path(__file__).resolve().parent.joinpath("golden")


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def golden() -> Path:
    return GOLDEN


@pytest.fixture
def schema() -> QuasiIdentifierSchema:
    return QuasiIdentifierSchema(
        attributes=(
            Attribute("sex", ("F", "M")),
            Attribute("age", ("young", "old")),
        )
    )


def make_regions(coords, populations=None, prefix="r"):
    populations = populations or [0] * len(coords)
    return [
        InitialRegion(id=f"{prefix}{i:05d}", point=Point2D(float(x), float(y)), population=int(p))
        for i, ((x, y), p) in enumerate(zip(coords, populations))
    ]


def random_dataset(rng: np.random.Generator, n_regions: int, n_records: int, d: int, categories: int = 3):
    """Random regions in the unit square and records spread over them."""
    schema = QuasiIdentifierSchema(
        attributes=tuple(
            Attribute(f"q{j}", tuple(f"c{c}" for c in range(categories))) for j in range(d)
        )
    )
    regions = make_regions(rng.random((n_regions, 2)).tolist())
    owners = rng.integers(0, n_regions, size=n_records)
    values = rng.integers(0, categories, size=(n_records, d))
    records = [
        Record(id=f"p{i:06d}", region_id=regions[owner].id, values=tuple(int(v) for v in row))
        for i, (owner, row) in enumerate(zip(owners.tolist(), values.tolist()))
    ]
    return schema, regions, records
