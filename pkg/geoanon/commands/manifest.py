"""Run manifests: what produced an output directory."""
from collections.abc import Mapping
import hashlib
from pathlib import Path
from typing import Any, Optional
from datamodel import BaseModel, Field
from ..conf import MANIFEST_FILE, RNG_ALGORITHM
from ..exceptions import IngestError, ValidationError
from ..libs.json import read_json, write_json
from ..libs.models import build_model
from ..version import __version__

CHUNK_SIZE = 1 << 20


def file_digest(path: str | Path) -> str:
    """sha256 of a file, hex encoded."""
    path = Path(path)
    digest = hashlib.sha256()
    try:
        with path.open("rb") as fp:
            for chunk in iter(lambda: fp.read(CHUNK_SIZE), b""):
                digest.update(chunk)
    except OSError as exc:
        raise IngestError(f"Cannot read {path.name}: {exc}", path=path) from exc
    return digest.hexdigest()


class RunManifest(BaseModel):
    """RunManifest.

    Subcommand, resolved configuration, input and output digests, seed and
    tool version of one run. Given the same manifest a command reproduces
    the same outputs.
    """
    subcommand: str = Field(required=True)
    config: dict = Field(required=False, default_factory=dict)
    inputs: dict = Field(required=False, default_factory=dict)
    outputs: dict = Field(required=False, default_factory=dict)
    seed: Optional[int] = Field(required=False, default=None)
    version: str = Field(required=False, default=__version__)
    rng_algorithm: str = Field(required=False, default=RNG_ALGORITHM)

    class Meta:
        strict: bool = True
        title: str = "RunManifest"

    def add_input(self, name: str, path: Optional[str | Path]) -> None:
        if path is None:
            return
        self.inputs[name] = {"path": str(path), "sha256": file_digest(path)}

    def add_outputs(self, outputs: Mapping[str, Path]) -> None:
        for path in outputs.values():
            self.outputs[Path(path).name] = file_digest(path)

    def to_document(self) -> dict[str, Any]:
        return {
            "subcommand": self.subcommand,
            "config": dict(self.config),
            "inputs": dict(self.inputs),
            "outputs": dict(self.outputs),
            "seed": self.seed,
            "version": self.version,
            "rng_algorithm": self.rng_algorithm,
        }

    def write(self, out_dir: str | Path) -> Path:
        return write_json(Path(out_dir).joinpath(MANIFEST_FILE), self.to_document())


def load_manifest(directory: str | Path) -> Optional[RunManifest]:
    path = Path(directory).joinpath(MANIFEST_FILE)
    if not path.exists():
        return None
    document = read_json(path)
    if not isinstance(document, dict) or "subcommand" not in document:
        raise ValidationError(f"Invalid manifest {path}", path=str(path))
    try:
        sections = {
            name: dict(document.get(name) or {}) for name in ("config", "inputs", "outputs")
        }
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"Invalid manifest {path}: {exc}", path=str(path)) from exc
    return build_model(
        RunManifest,
        str(path),
        subcommand=document["subcommand"],
        **sections,
        seed=document.get("seed"),
        version=document.get("version", __version__),
        rng_algorithm=document.get("rng_algorithm", RNG_ALGORITHM),
    )
