"""
Exceptions.
"""

from .exceptions import (
    GeoAnonException,
    ConfigError,
    ValidationError,
    IngestError,
    InfeasibleCellError,
)

__all__ = (
    "GeoAnonException",
    "ConfigError",
    "ValidationError",
    "IngestError",
    "InfeasibleCellError",
)
