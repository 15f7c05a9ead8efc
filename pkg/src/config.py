"""Global configuration for the basic permutation groups toolkit."""

import logging
import os
from pathlib import Path

logger = logging.getLogger(__name__)

# Path settings
# Resolve the project root relative to this config file (src/config.py -> src/ -> root)
BASE_DIR = Path(__file__).resolve().parent.parent
GROUPS_DIR = BASE_DIR / "groups"   # sample group files
GRAPHS_DIR = BASE_DIR / "graphs"   # sample graph files


def _env_int(name: str, default: int) -> int:
    """Read a positive integer override from the environment."""
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        logger.warning("[Config] ignoring %s=%r (not an integer)", name, raw)
        return default
    if value <= 0:
        logger.warning("[Config] ignoring %s=%r (must be positive)", name, raw)
        return default
    return value


# Group engine settings
ENUM_CAP = _env_int("BP_ENUM_CAP", 100_000)   # max elements enumerated for classes / normal subgroups
MAX_DEGREE = 100_000                          # largest permutation degree accepted
CHAIN_CHECK_SEED = 20021                      # strip test after chain construction
CHAIN_CHECK_PRODUCTS = 16

# Structure settings
PROJECTION_CAP = 20_000    # largest simple factor |T| for projection by coset search

# Graph settings
GRAPH_MAX = _env_int("BP_GRAPH_MAX", 64)   # automorphism / isomorphism search bound
ARC_TUPLE_CAP = 10_000_000                 # s-arc orbit memory gate
MAX_ARC_LENGTH = 8                         # largest s checked by max_arc_transitivity

# Numeric settings
DENSITY_MAX_CUTOFF = 5 * 10 ** 7   # int32 totient sieve stays near 200 MB
DENSITY_CHUNK = 1_000_000         # terms converted to float64 per block
INTERVAL_DPS = 40              # mpmath precision for interval endpoints

# Report settings
REPORT_SCHEMA_VERSION = "1.0"
