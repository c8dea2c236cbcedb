import pandas as pd
import pytest
from geoanon.commands import main
from geoanon.exceptions import ValidationError
from geoanon.ingest import load_records, load_regions
from geoanon.libs.json import read_json, write_json
from geoanon.scenarios import Scenario, load_scenarios, run_bench


def bench(fixtures, out, *source):
    return main([
        "bench",
        "--regions", str(fixtures / "regions.csv"),
        *source,
        "--schema", str(fixtures / "schema.json"),
        "--scenarios", str(fixtures / "scenarios.json"),
        "--out", str(out),
    ])


def test_bench_rows(fixtures, tmp_path):
    assert bench(fixtures, tmp_path, "--records", str(fixtures / "records.csv")) == 0
    table = pd.read_csv(tmp_path / "bench.csv", keep_default_na=False)
    assert len(table) == 4
    assert table["method"].tolist() == ["balanced_density", "uniform_grid"] * 2
    assert (table["error"] == "").all()
    no_qids = table[table["scenario"] == "no_qids"]
    assert no_qids["d"].tolist() == [0, 0]
    assert no_qids["suppressed_count"].tolist() == [0, 0]
    assert no_qids["discernibility"].tolist() == [72, 72]
    assert no_qids["non_uniform_entropy"].tolist() == [12.0, 12.0]
    sex_age = table[table["scenario"] == "sex_age"]
    assert sex_age["suppressed_count"].tolist() == [2, 2]
    assert sex_age["compactness"].tolist() == [2.0, 2.0]
    timings = pd.read_csv(tmp_path / "bench_timings.csv")
    assert len(timings) == 4
    assert (timings["total"] >= timings["placement"]).all()


def test_bench_is_reproducible(fixtures, tmp_path):
    source = ("--dist-spec", str(fixtures / "dist_spec.json"))
    assert bench(fixtures, tmp_path / "one", *source) == 0
    assert bench(fixtures, tmp_path / "two", *source) == 0
    assert (tmp_path / "one" / "bench.csv").read_bytes() == (tmp_path / "two" / "bench.csv").read_bytes()
    manifest = read_json(tmp_path / "one" / "manifest.json")
    assert list(manifest["outputs"]) == ["bench.csv"]


def test_bench_needs_records(fixtures, tmp_path):
    assert bench(fixtures, tmp_path) == 2


def test_scenario_errors_are_reported_per_row(fixtures, schema):
    regions = load_regions(fixtures / "regions.csv")
    records = load_records(fixtures / "records.csv", schema)
    scenarios = [Scenario(name="too_many_sites", quasi_identifiers=["sex"], k=2, sites=9)]
    rows, timings = run_bench(scenarios, regions, records, schema)
    assert len(rows) == 2
    assert all("exceeds" in row["error"] for row in rows)
    assert len(timings) == 2


def test_unknown_quasi_identifier(fixtures, schema):
    regions = load_regions(fixtures / "regions.csv")
    records = load_records(fixtures / "records.csv", schema)
    rows, _ = run_bench(
        [Scenario(name="typo", quasi_identifiers=["sexx"], k=2)], regions, records, schema
    )
    assert all("sexx" in row["error"] for row in rows)


def test_scenario_names_unique(tmp_path):
    path = write_json(tmp_path / "scenarios.json", [{"name": "a", "k": 2}, {"name": "a", "k": 3}])
    with pytest.raises(ValidationError, match="unique"):
        load_scenarios(path)


def test_scenario_needs_k(tmp_path):
    path = write_json(tmp_path / "scenarios.json", [{"name": "a"}])
    with pytest.raises(ValidationError):
        load_scenarios(path)


def test_scenario_bad_quasi_identifiers(tmp_path):
    path = write_json(
        tmp_path / "scenarios.json", [{"name": "a", "k": 2, "quasi_identifiers": 5}]
    )
    with pytest.raises(ValidationError, match="scenario #1"):
        load_scenarios(path)
