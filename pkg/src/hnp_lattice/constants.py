"""
HNP Lattice Constants

Default caps, limits and format identifiers used across the package.
"""

from enum import IntEnum

# Group size caps
DEFAULT_CLOSURE_CAP = 10000          # Largest permutation group closed by BFS
DEFAULT_SUBGROUP_CAP = 64            # Largest group for which all subgroups are enumerated
DEFAULT_MAX_ORDER = 16               # Largest group for direct bar-resolution H^2
EXHAUSTIVE_ACTION_CHECK_ORDER = 24   # Homomorphism law checked on all pairs up to this order
MAX_SYMMETRIC_DEGREE = 4             # symmetric(n) supported for n <= 4

# Character layer
CHARACTER_ENUMERATION_LIMIT = 4096   # Enumerate G^ab up to this size, else intersect subgroups

# Linear algebra
DENSE_THRESHOLD = 64                 # Matrices at most this size (both sides) use dense elimination

# Report format
PACKAGE_VERSION = "1.0.0"
REPORT_SCHEMA_VERSION = 1
NOT_COMPUTED = "not-computed"        # Explicit marker for absent report values

# Environment variables read by config.Settings.from_env
ENV_MAX_ORDER = "HNP_MAX_ORDER"
ENV_CLOSURE_CAP = "HNP_CLOSURE_CAP"
ENV_SUBGROUP_CAP = "HNP_SUBGROUP_CAP"
ENV_JOBS = "HNP_JOBS"
ENV_CACHE_DIR = "HNP_CACHE_DIR"


class ExitCode(IntEnum):
    """Process exit codes of the command line interface."""
    OK = 0              # Success, or a scan with no findings
    FINDINGS = 1        # Scan produced findings and --fail-on-found was given
    BAD_INPUT = 2       # Input could not be parsed or validated
    CAP_EXCEEDED = 3    # A group order cap was exceeded without override
    INTERNAL_ERROR = 4  # A consistency check failed (exactness, divisibility)
    OUTPUT_ERROR = 5    # A file could not be written
