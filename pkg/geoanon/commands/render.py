"""Render an anonymization run as a static map."""
from pathlib import Path
import pandas as pd
from ..conf import ASSIGNMENT_FILE, SITES_FILE
from ..exceptions import IngestError
from ..ingest import read_assignment, read_region_geometries
from ..libs.json import write_json
from ..render import MapFormat, render_geojson, render_svg
from .abstract import BaseCommand
from .manifest import load_manifest


class RenderCommand(BaseCommand):
    help = "Draw the aggregated regions of a run as SVG or GeoJSON."

    def parse_arguments(self, parser):
        parser.add_argument("--result", required=True)
        parser.add_argument(
            "--format", choices=[fmt.value for fmt in MapFormat], default=MapFormat.SVG.value
        )
        parser.add_argument("--out", required=True, help="output file")
        parser.add_argument(
            "--regions", default=None, help="regions file with polygons (GeoJSON output)"
        )
        parser.add_argument(
            "--voronoi", action="store_true", help="outline the Voronoi cells (SVG)"
        )
        parser.add_argument("--width", type=int, default=800)

    def _regions_path(self, options, result_dir: Path):
        if options.regions:
            return Path(options.regions)
        manifest = load_manifest(result_dir)
        if manifest and "regions" in manifest.inputs:
            path = Path(manifest.inputs["regions"]["path"])
            if path.exists():
                return path
        return None

    def run(self, options):
        result_dir = Path(options.result)
        assignment = read_assignment(result_dir.joinpath(ASSIGNMENT_FILE))
        out = Path(options.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        if options.format == MapFormat.GEOJSON.value:
            regions_path = self._regions_path(options, result_dir)
            geometries = read_region_geometries(regions_path) if regions_path else {}
            write_json(out, render_geojson(assignment, geometries))
        else:
            sites_path = result_dir.joinpath(SITES_FILE)
            sites = pd.read_csv(sites_path) if sites_path.exists() else None
            content = render_svg(
                assignment, sites, voronoi=options.voronoi, width=options.width
            )
            try:
                out.write_text(content, encoding="utf-8")
            except OSError as exc:
                raise IngestError(f"Cannot write map: {exc}", path=out) from exc
        return f"Map written to {out}"
