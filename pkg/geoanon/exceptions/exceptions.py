"""Base Exceptions for geoanon."""
from typing import Any


class GeoAnonException(Exception):
    """GeoAnonException.

    Base class for every error raised by geoanon. Keyword arguments are kept
    as ``context`` (record id, attribute, path, ...) for callers that need
    more than the message.
    """

    def __init__(self, message: str = "", **context: Any) -> None:
        super().__init__(message)
        self.message = message
        self.context: dict[str, Any] = context

    def __str__(self) -> str:
        return self.message

    def __repr__(self) -> str:
        return f"<{type(self).__name__}: {self.message}>"


class ConfigError(GeoAnonException):
    """Invalid run configuration (k, site count, coordinate source)."""


class ValidationError(GeoAnonException):
    """Input data does not satisfy the model (schema, ids, coordinates)."""


class IngestError(GeoAnonException):
    """File could not be read or written."""

    def __init__(self, message: str = "", path: Any = None, **context: Any) -> None:
        if path is not None:
            message = f"{message} (path: {path})"
        super().__init__(message, path=path, **context)


class InfeasibleCellError(GeoAnonException):
    """A row cannot be divided into the requested number of cells."""
