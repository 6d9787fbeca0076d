"""
Runtime settings for the Baxter / bipolar-orientation toolkit.
Values come from the environment (or a local .env file) with desk-scale defaults;
CLI flags override them per run.
"""

import os
from dotenv import load_dotenv

# Setup: load env once at import
load_dotenv()


def _int_env(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError("environment variable {} must be an integer, got {!r}".format(name, raw))


# Exhaustive checks never go beyond this size unless overridden
MAX_N = _int_env("BAXTER_MAX_N", 8)
# enumerate_bipolar_orientations tries 2^E direction assignments
MAX_BRUTE_EDGES = _int_env("BAXTER_MAX_BRUTE_EDGES", 20)
CENSUS_MAX_N = _int_env("BAXTER_CENSUS_MAX_N", 9)

DEFAULT_SEED = _int_env("BAXTER_SEED", 4242)
# Random phi/psi round trips drawn by the roundtrip suite
ROUNDTRIP_SAMPLES = _int_env("BAXTER_ROUNDTRIP_SAMPLES", 10000)
# Random size-10 permutations pushed through every symmetry by the symmetry suite
SYMMETRY_SAMPLES = _int_env("BAXTER_SYMMETRY_SAMPLES", 1000)
# Largest size for the random round-trip sampler
SAMPLE_MAX_N = _int_env("BAXTER_SAMPLE_MAX_N", 64)

# Levels used by evals/run_evals.py: every suite at EVAL_N, counts and trees again at EVAL_COUNTS_N
EVAL_N = _int_env("BAXTER_EVAL_N", 7)
EVAL_COUNTS_N = _int_env("BAXTER_EVAL_COUNTS_N", 8)


class GuardError(ValueError):
    """Raised when an exhaustive computation is asked for more than its configured guard allows."""


def check_guard(what, value, limit):
    if value > limit:
        raise GuardError("{} = {} exceeds the guard {}".format(what, value, limit))
