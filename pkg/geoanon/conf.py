# -*- coding: utf-8 -*-
# Import Config Class
from navconfig import config
from navconfig.logging import logging

#### BASIC Configuration
APP_LOGNAME = config.get("GEOANON_LOGNAME", fallback="geoanon")
logging.debug(f"::: LOADING {APP_LOGNAME} SETTINGS ::: ")


"""
Site placement
"""
# the `c` of choose_site_count: s = floor(p / (k * classes * c))
SITE_SAFETY_FACTOR = config.getint("GEOANON_SITE_SAFETY_FACTOR", fallback=2)
DEFAULT_K = config.getint("GEOANON_DEFAULT_K", fallback=5)

"""
Site index (nearest-site assignment)
"""
KDTREE_LEAFSIZE = config.getint("GEOANON_KDTREE_LEAFSIZE", fallback=16)
TIE_TOLERANCE = float(config.get("GEOANON_TIE_TOLERANCE", fallback=1e-9))

"""
Synthetic data
"""
POPULATION_LOW = config.getint("GEOANON_POPULATION_LOW", fallback=400)
POPULATION_HIGH = config.getint("GEOANON_POPULATION_HIGH", fallback=700)
DEFAULT_GROUP = "default"
RNG_ALGORITHM = "numpy.PCG64"

"""
Reports
"""
METRIC_PRECISION = config.getint("GEOANON_METRIC_PRECISION", fallback=9)

#### Output file names
ANONYMIZED_FILE = "anonymized.csv"
SUPPRESSED_FILE = "suppressed_ids.txt"
REPORT_FILE = "report.json"
MANIFEST_FILE = "manifest.json"
ASSIGNMENT_FILE = "assignment.csv"
SITES_FILE = "sites.csv"
