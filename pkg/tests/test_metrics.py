from collections import Counter
import math
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from geoanon.aggregation import AggregatedRegion, AnonymizationResult, anonymize
from geoanon.core import AnonymizationConfig, EquivalenceClass, Point2D
from geoanon.exceptions import ValidationError
from geoanon.ingest import load_records, load_regions
from geoanon.metrics import (
    MetricsReport,
    build_report,
    compactness,
    discernibility,
    non_uniform_entropy,
    suppression_count,
    timing_report,
)
from .conftest import make_regions, random_dataset


def result_of(aggregated, suppressed=(), k=1):
    return AnonymizationResult(
        aggregated_regions=list(aggregated),
        suppressed_record_ids=list(suppressed),
        config=AnonymizationConfig(k=k),
        site_count=len(aggregated),
    )


def classes_of(*sizes):
    return tuple(
        EquivalenceClass((i,), tuple(f"m{i}-{j}" for j in range(size)))
        for i, size in enumerate(sizes)
    )


def test_suppression_count():
    assert suppression_count(result_of([], ["a", "b", "c"])) == 3


def test_compactness_two_points():
    regions = make_regions([(0, 0), (4, 0)])
    aggregated = AggregatedRegion(0, Point2D(2, 0), ("r00000", "r00001"))
    assert compactness(result_of([aggregated]), regions) == pytest.approx(4.0)


def test_compactness_singletons_is_zero():
    regions = make_regions([(0, 0), (4, 0)])
    result = result_of([
        AggregatedRegion(0, Point2D(0, 0), ("r00000",)),
        AggregatedRegion(1, Point2D(4, 0), ("r00001",)),
    ])
    assert compactness(result, regions) == 0.0


def brute_compactness(groups, coords):
    total = 0.0
    for members in groups:
        cx = sum(coords[m][0] for m in members) / len(members)
        cy = sum(coords[m][1] for m in members) / len(members)
        total += sum(math.dist(coords[m], (cx, cy)) for m in members)
    return total


@pytest.mark.parametrize("seed", range(50))
def test_compactness_oracle(seed):
    rng = np.random.default_rng(seed)
    coords = rng.random((60, 2)) * 1000
    regions = make_regions(coords.tolist())
    owner = rng.integers(0, 7, size=60)
    groups = [[i for i in range(60) if owner[i] == g] for g in range(7)]
    groups = [g for g in groups if g]
    result = result_of([
        AggregatedRegion(n, Point2D(0, 0), tuple(regions[i].id for i in g))
        for n, g in enumerate(groups)
    ])
    assert compactness(result, regions) == pytest.approx(
        brute_compactness(groups, coords.tolist()), rel=1e-9
    )


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.tuples(st.floats(-1e3, 1e3), st.floats(-1e3, 1e3)), min_size=1, max_size=20
    ),
    st.floats(-1e3, 1e3),
    st.floats(-1e3, 1e3),
    st.floats(0.1, 10),
)
def test_compactness_translation_and_scale(coords, dx, dy, factor):
    ids = tuple(f"r{i:05d}" for i in range(len(coords)))
    result = result_of([AggregatedRegion(0, Point2D(0, 0), ids)])
    base = compactness(result, make_regions(coords))
    moved = compactness(result, make_regions([(x + dx, y + dy) for x, y in coords]))
    scaled = compactness(result, make_regions([(x * factor, y * factor) for x, y in coords]))
    assert moved == pytest.approx(base, rel=1e-6, abs=1e-6)
    assert scaled == pytest.approx(base * factor, rel=1e-6, abs=1e-6)


def test_discernibility_closed_form():
    aggregated = AggregatedRegion(
        0, Point2D(0, 0), ("r",), classes=classes_of(5, 3), suppressed_classes=()
    )
    small = AggregatedRegion(
        1, Point2D(0, 0), ("q",), classes=(),
        suppressed_classes=(EquivalenceClass((9,), ("x", "y")),),
    )
    assert discernibility(result_of([aggregated, small]), 3) == 34


def test_discernibility_singletons():
    singles = AggregatedRegion(0, Point2D(0, 0), ("r",), suppressed_classes=classes_of(1, 1, 1))
    assert discernibility(result_of([singles]), 2) == 0


@pytest.mark.parametrize("seed", range(50))
def test_discernibility_oracle(seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, 8))
    aggregated, sizes = [], []
    for n in range(int(rng.integers(1, 10))):
        region_sizes = rng.integers(1, 15, size=int(rng.integers(0, 12))).tolist()
        sizes.extend(region_sizes)
        merged = classes_of(*region_sizes)
        aggregated.append(
            AggregatedRegion(
                n,
                Point2D(0, 0),
                (f"r{n:05d}",),
                classes=tuple(c for c in merged if c.size >= k),
                suppressed_classes=tuple(c for c in merged if c.size < k),
            )
        )
    expected = sum(size * size for size in sizes if size >= k)
    assert discernibility(result_of(aggregated, k=k), k) == expected


def test_entropy_identity_is_zero():
    assert non_uniform_entropy(["A", "B", "C"], ["A", "B", "C"]) == 0.0


def test_entropy_closed_form():
    assert non_uniform_entropy(["A", "A", "B", "B"], [0, 0, 0, 0]) == pytest.approx(4.0)


def test_entropy_empty():
    assert non_uniform_entropy([], []) == 0.0


@pytest.mark.parametrize("seed", range(50))
def test_entropy_oracle(seed):
    rng = np.random.default_rng(seed)
    original = rng.integers(0, 30, size=500).tolist()
    generalized = [o // 7 for o in original]
    by_general = Counter(generalized)
    by_pair = Counter(zip(original, generalized))
    expected = -sum(math.log2(by_pair[(a, b)] / by_general[b]) for a, b in zip(original, generalized))
    assert non_uniform_entropy(original, generalized) == pytest.approx(expected, rel=1e-12)
    for b in by_general:
        assert sum(c for (_, g), c in by_pair.items() if g == b) == by_general[b]


def test_timing_report_total():
    report = timing_report({"load": 1.5, "placement": 2.0, "aggregation": 0.5})
    assert report["total"] == pytest.approx(4.0)
    assert report["total"] >= max(v for name, v in report.items() if name != "total")


def test_report_on_fixture(fixtures, schema, golden):
    regions = load_regions(fixtures / "regions.csv")
    records = load_records(fixtures / "records.csv", schema)
    result = anonymize(regions, records, schema, AnonymizationConfig(k=2, site_count=2))
    report = build_report(result, regions, records)
    assert report.suppressed_count == 2
    assert report.compactness == 2.0
    assert report.discernibility == 26
    assert report.non_uniform_entropy == 9.709505945
    assert set(report.timings_ms) >= {"load", "classes", "placement", "aggregation", "metrics", "total"}
    document = report.to_document()
    assert MetricsReport.from_document(document).to_document() == document


@pytest.mark.parametrize(
    "change",
    [
        {"parameters": None},
        {"compactness": "abc"},
        {"discernibility": True},
        {"non_uniform_entropy": [1.0]},
    ],
)
def test_report_from_malformed_document(change):
    document = {
        "parameters": {"k": 2},
        "suppressed_count": 0,
        "compactness": 1.5,
        "discernibility": 4,
        "non_uniform_entropy": 0.0,
    }
    document.update(change)
    with pytest.raises(ValidationError, match="MetricsReport"):
        MetricsReport.from_document(document)


def test_report_from_document_missing_key():
    with pytest.raises(ValidationError, match="missing parameters"):
        MetricsReport.from_document(
            {"suppressed_count": 0, "compactness": 0.0, "discernibility": 0, "non_uniform_entropy": 0.0}
        )

def test_report_identity_run(fixtures, schema):
    regions = load_regions(fixtures / "regions.csv")
    records = load_records(fixtures / "records.csv", schema)
    result = anonymize(regions, records, schema, AnonymizationConfig(k=1, site_count=4))
    report = build_report(result, regions, records)
    assert (report.suppressed_count, report.compactness, report.non_uniform_entropy) == (0, 0.0, 0.0)


@pytest.mark.parametrize("seed", range(3))
def test_entropy_scope_is_surviving_records(seed):
    rng = np.random.default_rng(seed)
    schema, regions, records = random_dataset(rng, 20, 300, 2)
    result = anonymize(regions, records, schema, AnonymizationConfig(k=5, site_count=4))
    report = build_report(result, regions, records)
    assert report.surviving_count + report.suppressed_count == len(records)
    assert report.surviving_count == len(result.surviving_record_ids)
