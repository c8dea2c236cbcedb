"""Number of sites (aggregated regions) to place."""
from typing import Optional
from ..conf import SITE_SAFETY_FACTOR
from ..exceptions import ConfigError


def choose_site_count(
    total_population: int,
    k: int,
    schema_class_count: int,
    override: Optional[int] = None,
    *,
    region_count: int,
    safety_factor: int = SITE_SAFETY_FACTOR,
) -> int:
    """choose_site_count.

    Without an override, ``floor(p / (k * classes * c))``: every aggregated
    region should hold about ``c`` times the records needed for each
    possible class to reach k. The result is clamped to
    ``[1, region_count]``; an explicit override is clamped the same way.

    Raises:
        ConfigError: k < 1, override < 1 or no initial regions.
    """
    if k < 1:
        raise ConfigError(f"k must be >= 1, got {k}")
    if region_count < 1:
        raise ConfigError("There are no initial regions to aggregate")
    if override is not None:
        if override < 1:
            raise ConfigError(f"site count must be >= 1, got {override}")
        s = override
    else:
        s = max(total_population, 0) // (k * max(schema_class_count, 1) * safety_factor)
    return min(max(s, 1), region_count)
