"""Anonymize a dataset by Voronoi aggregation and suppression."""
from pathlib import Path
from ..aggregation import PhaseTimer, anonymize, bind_populations
from ..conf import ASSIGNMENT_FILE, DEFAULT_K, SITES_FILE
from ..core import AnonymizationConfig, CoordinateSource
from ..ingest import (
    load_records,
    load_regions,
    load_schema,
    write_anonymized,
    write_assignment,
    write_sites,
)
from ..metrics import build_report
from ..placement import PLACEMENTS
from .abstract import BaseCommand
from .manifest import RunManifest


def summary(report: dict) -> str:
    return "\n".join(
        [
            f"{'suppressed records':<22}{report['suppressed_count']}",
            f"{'compactness':<22}{report['compactness']:.9f}",
            f"{'discernibility':<22}{report['discernibility']}",
            f"{'non-uniform entropy':<22}{report['non_uniform_entropy']:.9f}",
            f"{'running time (ms)':<22}{report['timings_ms'].get('total', 0.0):.3f}",
        ]
    )


class AnonymizeCommand(BaseCommand):
    help = "Aggregate initial regions and suppress classes smaller than k."

    def parse_arguments(self, parser):
        parser.add_argument("--regions", required=True)
        parser.add_argument("--records", required=True)
        parser.add_argument("--schema", required=True)
        parser.add_argument("--k", type=int, default=DEFAULT_K)
        parser.add_argument("--sites", type=int, default=None, help="site count override")
        parser.add_argument("--seed", type=int, default=0)
        parser.add_argument("--out", required=True)
        parser.add_argument(
            "--coordinate-source",
            choices=[source.value for source in CoordinateSource],
            default=CoordinateSource.PROVIDED.value,
        )
        parser.add_argument(
            "--placement", choices=list(PLACEMENTS), default="balanced_density"
        )

    def run(self, options):
        """Writes anonymized.csv, suppressed_ids.txt, report.json, assignment.csv,
        sites.csv and manifest.json."""
        out = Path(options.out)
        config = AnonymizationConfig(
            k=options.k,
            site_count=options.sites,
            seed=options.seed,
            coordinate_source=options.coordinate_source,
            placement=options.placement,
        )
        config.check()
        timer = PhaseTimer()
        with timer.phase("load"):
            schema = load_schema(options.schema)
            regions = load_regions(options.regions, config.source)
            records = load_records(options.records, schema)
        result = anonymize(regions, records, schema, config, timer=timer)
        report = build_report(result, regions, records, timer).to_document()
        outputs = write_anonymized(
            records,
            schema,
            result.aggregated_of,
            result.suppressed_record_ids,
            report,
            out,
        )
        outputs["assignment"] = write_assignment(
            bind_populations(regions, records),
            result.aggregated_of,
            out.joinpath(ASSIGNMENT_FILE),
        )
        outputs["sites"] = write_sites(result.sites, out.joinpath(SITES_FILE))
        manifest = RunManifest(
            subcommand="anonymize",
            config={
                "k": config.k,
                "site_count": config.site_count,
                "s": result.site_count,
                "coordinate_source": config.coordinate_source,
                "placement": result.placement,
            },
            seed=config.seed,
        )
        manifest.add_input("regions", options.regions)
        manifest.add_input("records", options.records)
        manifest.add_input("schema", options.schema)
        manifest.add_outputs(outputs)
        manifest.write(out)
        return summary(report)
