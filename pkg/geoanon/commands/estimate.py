"""Estimate a distribution file from a sample of records."""
from pathlib import Path
from ..ingest import estimate_distributions, load_records, load_regions, load_schema
from ..libs.json import write_json
from .abstract import BaseCommand
from .manifest import RunManifest


class EstimateCommand(BaseCommand):
    help = "Estimate per-group category frequencies from a record sample."

    def parse_arguments(self, parser):
        parser.add_argument("--regions", required=True)
        parser.add_argument("--records", required=True)
        parser.add_argument("--schema", required=True)
        parser.add_argument("--out", required=True, help="output directory")
        parser.add_argument(
            "--population-range", type=int, nargs=2, default=None, metavar=("LO", "HI")
        )

    def run(self, options):
        out = Path(options.out)
        out.mkdir(parents=True, exist_ok=True)
        schema = load_schema(options.schema)
        regions = load_regions(options.regions)
        records = load_records(options.records, schema)
        spec = estimate_distributions(
            records, regions, schema, options.population_range
        ).check(schema)
        path = write_json(out.joinpath("dist_spec.json"), spec.to_document())
        manifest = RunManifest(subcommand="estimate", config={"population_range": list(spec.bounds)})
        manifest.add_input("regions", options.regions)
        manifest.add_input("records", options.records)
        manifest.add_input("schema", options.schema)
        manifest.add_outputs({"dist_spec": path})
        manifest.write(out)
        return f"Distribution of {len(spec.groups)} groups written to {path}"
