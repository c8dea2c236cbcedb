"""Generate a synthetic census-style dataset."""
from pathlib import Path
from ..core import CoordinateSource
from ..ingest import (
    generate_synthetic,
    load_distribution_spec,
    load_regions,
    load_schema,
    write_records,
    write_regions,
)
from .abstract import BaseCommand
from .manifest import RunManifest


class GenerateCommand(BaseCommand):
    help = "Generate synthetic records for a regionalization."

    def parse_arguments(self, parser):
        parser.add_argument("--regions", required=True, help="regions CSV or GeoJSON")
        parser.add_argument("--dist-spec", required=True, help="distribution JSON")
        parser.add_argument("--schema", required=True, help="quasi-identifier schema JSON")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--out", required=True, help="output directory")
        parser.add_argument(
            "--coordinate-source",
            choices=[source.value for source in CoordinateSource],
            default=CoordinateSource.PROVIDED.value,
        )

    def run(self, options):
        """Writes records.csv, regions.csv (with populations) and manifest.json."""
        out = Path(options.out)
        schema = load_schema(options.schema)
        spec = load_distribution_spec(options.dist_spec, schema)
        regions = load_regions(options.regions, options.coordinate_source)
        populated, records = generate_synthetic(regions, spec, schema, options.seed)
        outputs = {
            "records": write_records(records, schema, out.joinpath("records.csv")),
            "regions": write_regions(populated, out.joinpath("regions.csv")),
        }
        manifest = RunManifest(
            subcommand="generate",
            config={
                "coordinate_source": options.coordinate_source,
                "population_range": list(spec.bounds),
            },
            seed=options.seed,
        )
        manifest.add_input("regions", options.regions)
        manifest.add_input("dist_spec", options.dist_spec)
        manifest.add_input("schema", options.schema)
        manifest.add_outputs(outputs)
        manifest.write(out)
        return f"Generated {len(records)} records over {len(populated)} regions in {out}"
