"""geoanon Meta information."""

__title__ = "geoanon"
__description__ = (
    "k-anonymity for geocoded microdata through "
    "Voronoi aggregation of small regions."
)
__version__ = "1.2.0"
__copyright__ = "Copyright (c) 2024 geoanon developers"
__author__ = "geoanon developers"
__license__ = "BSD"
