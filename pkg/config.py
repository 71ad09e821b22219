"""Runtime configuration for sfs-monoids.

Values come from the environment (optionally a local .env file) so that
budgets can be tuned without touching code.
"""

import os

from dotenv import load_dotenv

load_dotenv()


def _flag(name: str, default: str = "false") -> bool:
    """Read a boolean environment flag."""
    return os.getenv(name, default).strip().lower() in {"1", "true", "yes", "on"}


# =============================================================================
# Search Budgets
# =============================================================================

# Maximum size of a generated transformation monoid
CLOSURE_BUDGET = int(os.getenv("SFS_CLOSURE_BUDGET", "4096"))

# Candidate counter shared by homomorphism, isomorphism and Morita searches
SEARCH_BUDGET = int(os.getenv("SFS_SEARCH_BUDGET", "2000000"))

# Arrow count above which categories are neither built nor brute-force checked
ARROW_CAP = int(os.getenv("SFS_ARROW_CAP", "20000"))


# =============================================================================
# Diagnostics
# =============================================================================

DEBUG_WITNESS_CHECK = _flag("SFS_DEBUG_WITNESS_CHECK")

LOG_LEVEL = os.getenv("SFS_LOG_LEVEL", "WARNING").upper()
