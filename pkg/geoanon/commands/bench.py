"""Run comparison scenarios on one dataset."""
from pathlib import Path
import pandas as pd
from ..core import CoordinateSource
from ..exceptions import IngestError
from ..ingest import (
    generate_synthetic,
    load_distribution_spec,
    load_records,
    load_regions,
    load_schema,
)
from ..scenarios import BENCH_COLUMNS, TIMING_COLUMNS, load_scenarios, run_bench
from .abstract import BaseCommand
from .exceptions import UsageError
from .manifest import RunManifest

BENCH_FILE = "bench.csv"
TIMINGS_FILE = "bench_timings.csv"


def write_table(rows: list[dict], columns: tuple, path: Path) -> Path:
    frame = pd.DataFrame(rows, columns=list(columns), dtype=object)
    try:
        frame.to_csv(path, index=False, lineterminator="\n")
    except OSError as exc:
        raise IngestError(f"Cannot write {path.name}: {exc}", path=path) from exc
    return path


class BenchCommand(BaseCommand):
    help = "Compare balanced-density placement with a uniform-grid baseline."

    def parse_arguments(self, parser):
        parser.add_argument("--regions", required=True)
        parser.add_argument("--records", default=None, help="records CSV (or --dist-spec)")
        parser.add_argument("--dist-spec", default=None, help="generate records instead")
        parser.add_argument("--schema", required=True)
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--scenarios", required=True)
        parser.add_argument("--out", required=True)
        parser.add_argument(
            "--coordinate-source",
            choices=[source.value for source in CoordinateSource],
            default=CoordinateSource.PROVIDED.value,
        )

    def run(self, options):
        """Writes bench.csv (metrics), bench_timings.csv and manifest.json."""
        if not options.records and not options.dist_spec:
            raise UsageError("bench needs --records or --dist-spec")
        out = Path(options.out)
        out.mkdir(parents=True, exist_ok=True)
        schema = load_schema(options.schema)
        scenarios = load_scenarios(options.scenarios)
        regions = load_regions(options.regions, options.coordinate_source)
        if options.records:
            records = load_records(options.records, schema)
        else:
            spec = load_distribution_spec(options.dist_spec, schema)
            regions, records = generate_synthetic(regions, spec, schema, options.seed)
        rows, timings = run_bench(scenarios, regions, records, schema, options.seed)
        outputs = {
            "bench": write_table(rows, BENCH_COLUMNS, out.joinpath(BENCH_FILE)),
            "timings": write_table(timings, TIMING_COLUMNS, out.joinpath(TIMINGS_FILE)),
        }
        manifest = RunManifest(
            subcommand="bench",
            config={
                "coordinate_source": options.coordinate_source,
                "scenarios": [scenario.name for scenario in scenarios],
            },
            seed=options.seed,
        )
        for name in ("regions", "records", "dist_spec", "schema", "scenarios"):
            manifest.add_input(name, getattr(options, name))
        # timings change between runs; only the metrics table is digested
        manifest.add_outputs({"bench": outputs["bench"]})
        manifest.write(out)
        failed = sum(1 for row in rows if row["error"])
        return (
            f"{len(scenarios)} scenarios, {len(rows)} rows written to {out}"
            + (f" ({failed} failed)" if failed else "")
        )
