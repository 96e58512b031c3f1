# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Default configuration values."""

# Simple-cycle enumeration cap
DEFAULT_MAX_CYCLES = 1_000_000

# Nodes the walk-enumeration oracle may visit per call
DEFAULT_ORACLE_BUDGET = 2_000_000

# Seed used by every randomized suite unless overridden
DEFAULT_SEED = 42

# Parallel workers for verification suites
DEFAULT_THREADS = 1

# Environment variable capping parallelism
THREADS_ENV_VAR = "SIGNBASE_THREADS"

# Random sampler: expected extra out-arcs per vertex on top of the Hamilton cycle
DEFAULT_ARC_DENSITY = 1.5

# Random sampler: probability that an arc is negative
DEFAULT_FLIP_PROBABILITY = 0.5

# Random sampler: rejection attempts allowed per requested instance
DEFAULT_ATTEMPT_FACTOR = 200

# Default verification profile
DEFAULT_PROFILE = "quick"

# Smallest order for the gap theorem and the characterizations
GAP_MIN_ORDER = 14

# Largest order enumerated exhaustively
TINY_MAX_ORDER = 3
