import os
from fractions import Fraction

from dotenv import load_dotenv


load_dotenv()


DEFAULT_SEED = int(os.getenv("NRS_SEED", "20240611"))
LOG_LEVEL = os.getenv("NRS_LOG_LEVEL", "INFO")
DEFAULT_JOBS = int(os.getenv("NRS_JOBS", "1"))
DEFAULT_EPS_BUDGET = Fraction(os.getenv("NRS_EPS_BUDGET", "1/8"))

# Pattern files list flips explicitly up to this many; beyond it only the
# generator descriptor is stored and the flips are regenerated on read.
EXPLICIT_FLIPS_MAX = int(os.getenv("NRS_EXPLICIT_FLIPS_MAX", "4096"))

# Largest supported field width (q = 2^w).
MAX_FIELD_WIDTH = 16
