import numpy as np
import pytest
from geoanon.core import Attribute, QuasiIdentifierSchema
from geoanon.exceptions import ValidationError
from geoanon.ingest import (
    DistributionSpec,
    estimate_distributions,
    generate_synthetic,
    load_distribution_spec,
    load_regions,
)
from .conftest import make_regions


def test_populations_within_range(fixtures, schema):
    spec = load_distribution_spec(fixtures / "dist_spec.json", schema)
    regions = load_regions(fixtures / "regions.csv")
    populated, records = generate_synthetic(regions, spec, schema, seed=42)
    assert all(400 <= region.population <= 700 for region in populated)
    assert sum(region.population for region in populated) == len(records)
    assert records[0].id == "A-001"


def test_degenerate_distribution(fixtures, schema):
    spec = load_distribution_spec(fixtures / "dist_spec.json", schema)
    regions = [r for r in load_regions(fixtures / "regions.csv") if r.group == "south"]
    _, records = generate_synthetic(regions, spec, schema, seed=1)
    assert {record.values[1] for record in records} == {0}


def test_deterministic(fixtures, schema):
    spec = load_distribution_spec(fixtures / "dist_spec.json", schema)
    regions = load_regions(fixtures / "regions.csv")
    assert generate_synthetic(regions, spec, schema, 5) == generate_synthetic(
        list(reversed(regions)), spec, schema, 5
    )
    assert generate_synthetic(regions, spec, schema, 5) != generate_synthetic(
        regions, spec, schema, 6
    )


def test_empty_regions(fixtures, schema):
    spec = load_distribution_spec(fixtures / "dist_spec.json", schema)
    assert generate_synthetic([], spec, schema, 0) == ([], [])


def test_missing_group_is_named(schema):
    spec = DistributionSpec(population_range=[1, 2], groups={})
    regions = make_regions([(0, 0)])
    with pytest.raises(ValidationError, match="default"):
        generate_synthetic(regions, spec, schema, 0)


def test_probabilities_must_sum_to_one(schema):
    spec = DistributionSpec(
        groups={"default": {"sex": {"F": 0.5, "M": 0.4}, "age": {"young": 1.0}}}
    )
    with pytest.raises(ValidationError, match="sum to 1"):
        spec.check(schema)


def test_category_frequency_fidelity():
    binary = QuasiIdentifierSchema(attributes=(Attribute("b", ("zero", "one")),))
    spec = DistributionSpec(groups={"default": {"b": {"zero": 0.3, "one": 0.7}}})
    regions = make_regions(np.random.default_rng(3).random((200, 2)).tolist())
    populated, records = generate_synthetic(regions, spec, binary, seed=2024)
    assert len(records) >= 80_000
    zeros = sum(1 for record in records if record.values == (0,))
    assert abs(zeros / len(records) - 0.3) <= 0.01


def test_estimate_recovers_generator_frequencies(fixtures, schema):
    spec = load_distribution_spec(fixtures / "dist_spec.json", schema)
    regions = load_regions(fixtures / "regions.csv")
    populated, records = generate_synthetic(regions, spec, schema, seed=9)
    estimated = estimate_distributions(records, populated, schema).check(schema)
    assert sorted(estimated.groups) == ["north", "south"]
    assert estimated.groups["south"]["age"] == {"young": 1.0, "old": 0.0}
    assert estimated.groups["north"]["age"]["old"] == pytest.approx(0.7, abs=0.05)
