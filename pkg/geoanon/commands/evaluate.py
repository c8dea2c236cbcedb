"""Print the metrics of a previous anonymization run."""
from pathlib import Path
from ..conf import REPORT_FILE
from ..libs.json import json_encoder, read_json
from ..exceptions import IngestError, ValidationError
from ..metrics import MetricsReport
from .abstract import BaseCommand
from .anonymize import summary
from .manifest import file_digest, load_manifest


class EvaluateCommand(BaseCommand):
    help = "Show the five quality measures of an anonymization run."

    def parse_arguments(self, parser):
        parser.add_argument("--result", required=True, help="output directory of anonymize")
        parser.add_argument("--json", action="store_true", help="machine-readable output")

    def verify(self, result_dir: Path) -> bool:
        """Compare report.json with the digest recorded at write time."""
        manifest = load_manifest(result_dir)
        if manifest is None or REPORT_FILE not in manifest.outputs:
            self.logger.warning(f"No manifest digest for {REPORT_FILE} in {result_dir}")
            return False
        if file_digest(result_dir.joinpath(REPORT_FILE)) != manifest.outputs[REPORT_FILE]:
            self.logger.warning(
                f"Checksum mismatch: {REPORT_FILE} was modified after the run"
            )
            self.write(f"checksum mismatch for {REPORT_FILE}", level="WARNING")
            return False
        return True

    def run(self, options):
        result_dir = Path(options.result)
        path = result_dir.joinpath(REPORT_FILE)
        if not path.exists():
            raise IngestError(f"No {REPORT_FILE} in result directory", path=result_dir)
        document = read_json(path)
        if not isinstance(document, dict):
            raise ValidationError(f"Invalid report {path}")
        self.verify(result_dir)
        report = MetricsReport.from_document(document, source=str(path)).to_document()
        if options.json:
            return json_encoder(report).rstrip("\n")
        parameters = ", ".join(
            f"{key}={value}" for key, value in sorted(report["parameters"].items())
        )
        return f"{parameters}\n{summary(report)}"
