"""GEOANON.

geoanon anonymizes record-level geocoded datasets. A fine regionalization
(dissemination areas, blocks, postal codes) is aggregated into larger regions
by placing Voronoi sites with a balanced-density procedure; records of
equivalence classes smaller than k are then suppressed.

Run:
    The command line tool wraps the whole pipeline::

        $ geoanon generate --regions regions.csv --dist-spec dist.json \
            --schema schema.json --seed 42 --out data/
        $ geoanon anonymize --regions data/regions.csv \
            --records data/records.csv --schema schema.json --k 5 --out run/
        $ geoanon evaluate --result run/

"""
from .version import (
    __title__,
    __description__,
    __version__,
    __author__,
    __copyright__,
    __license__
)
from .core import (
    Point2D,
    InitialRegion,
    Record,
    QuasiIdentifierSchema,
    EquivalenceClass,
    AnonymizationConfig,
    CoordinateSource,
    compute_equivalence_classes,
)
from .aggregation import anonymize, AnonymizationResult


def version():
    """version.
    Returns:
        str: current version of geoanon.
    """
    return __version__


__all__ = (
    "Point2D",
    "InitialRegion",
    "Record",
    "QuasiIdentifierSchema",
    "EquivalenceClass",
    "AnonymizationConfig",
    "CoordinateSource",
    "compute_equivalence_classes",
    "anonymize",
    "AnonymizationResult",
    "version",
    "__title__",
    "__description__",
    "__version__",
    "__author__",
)
