"""
Ingest: regionalizations, records, synthetic data and output writers.
"""
from .regions import (
    RegionFileRow,
    load_regions,
    polygon_centroid,
    read_region_geometries,
)
from .records import load_schema, load_records, project_records
from .synthetic import (
    DistributionSpec,
    load_distribution_spec,
    generate_synthetic,
    estimate_distributions,
)
from .writers import (
    write_records,
    write_regions,
    write_assignment,
    write_sites,
    write_anonymized,
    read_assignment,
)

__all__ = (
    "RegionFileRow",
    "load_regions",
    "polygon_centroid",
    "read_region_geometries",
    "load_schema",
    "load_records",
    "project_records",
    "DistributionSpec",
    "load_distribution_spec",
    "generate_synthetic",
    "estimate_distributions",
    "write_records",
    "write_regions",
    "write_assignment",
    "write_sites",
    "write_anonymized",
    "read_assignment",
)
