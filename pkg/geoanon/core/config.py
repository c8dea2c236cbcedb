"""Run configuration."""
from enum import Enum
from typing import Optional
from datamodel import BaseModel, Field
from ..exceptions import ConfigError

MAX_SEED = 2**64


class CoordinateSource(str, Enum):
    PROVIDED = "provided"
    POLYGON_CENTROID = "polygon_centroid"


class AnonymizationConfig(BaseModel):
    """AnonymizationConfig.

    Parameters of one anonymization run, echoed into reports and manifests.
    """
    k: int = Field(required=True, label="k-anonymity threshold")
    site_count: Optional[int] = Field(required=False, default=None)
    seed: int = Field(required=False, default=0)
    coordinate_source: str = Field(required=False, default="provided")
    placement: str = Field(required=False, default="balanced_density")

    class Meta:
        strict: bool = True
        title: str = "AnonymizationConfig"

    def check(self, region_count: Optional[int] = None) -> "AnonymizationConfig":
        """Raise ConfigError when the configuration cannot run."""
        if not isinstance(self.k, int) or self.k < 1:
            raise ConfigError(f"k must be an integer >= 1, got {self.k!r}")
        if self.site_count is not None:
            if self.site_count < 1:
                raise ConfigError(
                    f"site count must be >= 1, got {self.site_count}"
                )
            if region_count is not None and self.site_count > region_count:
                raise ConfigError(
                    f"site count {self.site_count} exceeds the number "
                    f"of initial regions ({region_count})"
                )
        if not 0 <= self.seed < MAX_SEED:
            raise ConfigError(f"seed must be a 64-bit unsigned integer: {self.seed}")
        try:
            CoordinateSource(self.coordinate_source)
        except ValueError as exc:
            raise ConfigError(
                f"Unknown coordinate source '{self.coordinate_source}'"
            ) from exc
        return self

    @property
    def source(self) -> CoordinateSource:
        return CoordinateSource(self.coordinate_source)
