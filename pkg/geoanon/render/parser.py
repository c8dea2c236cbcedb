"""Jinja2 template loading for static map renders."""
from pathlib import Path
from typing import Any, Optional, Union
from jinja2 import Environment, FileSystemLoader, StrictUndefined, TemplateError, TemplateNotFound
from navconfig.logging import logging
from ..exceptions import GeoAnonException, IngestError

TEMPLATE_DIRECTORY = Path(__file__).resolve().parent.joinpath("templates")

jinja_config = {
    "autoescape": True,
    "keep_trailing_newline": True,
    "undefined": StrictUndefined,
    "extensions": ["jinja2.ext.loopcontrols"],
}


class TemplateParser:
    """TemplateParser.

    Jinja2 environment over the packaged templates (plus any extra
    directories given).

    Args:
        template_dir (str | Path | list): extra folders where templates live.
    """

    def __init__(
        self, template_dir: Optional[Union[list, str, Path]] = None, **kwargs
    ) -> None:
        self._logger = logging.getLogger("geoanon.render.template")
        self.directory: list[Path] = []
        if template_dir:
            dirs = template_dir if isinstance(template_dir, list) else [template_dir]
            for d in dirs:
                d = Path(d).resolve()
                if not d.exists():
                    raise IngestError("Missing template directory", path=d)
                self.directory.append(d)
        self.directory.append(TEMPLATE_DIRECTORY)
        self.config = {**jinja_config, **kwargs}
        self.env = Environment(
            loader=FileSystemLoader(searchpath=self.directory), **self.config
        )

    def render(self, filename: str, params: Optional[dict[str, Any]] = None) -> str:
        try:
            template = self.env.get_template(str(filename))
        except TemplateNotFound as exc:
            raise IngestError(f"Template not found: {filename}") from exc
        try:
            return template.render(**(params or {}))
        except TemplateError as exc:
            raise GeoAnonException(f"Cannot render {filename}: {exc}") from exc
