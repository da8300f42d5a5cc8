"""
Shimforge Settings and Configuration
"""
import os
from fractions import Fraction
from pathlib import Path

import yaml
from dotenv import load_dotenv

# Base paths
BASE_DIR = Path(__file__).resolve().parent.parent
PROJECT_DIR = BASE_DIR.parent
load_dotenv(PROJECT_DIR / ".env")

SEARCH_CONFIG_PATH = BASE_DIR / "config" / "search.yaml"

with open(SEARCH_CONFIG_PATH, "r") as f:
    SEARCH_CONFIG = yaml.safe_load(f)


def _env_value(name: str) -> str | None:
    """Return configured env values while ignoring template placeholders."""
    value = os.getenv(name)
    if not value or value.lower().startswith("your_"):
        return None
    return value


# Forge search
DEFAULT_SCALE_DOUBLINGS = int(SEARCH_CONFIG["forge"]["scale_doublings"])
DEFAULT_PRIME_BOUND = int(SEARCH_CONFIG["galois"]["prime_bound"])
SPLIT_PRIME_BUDGET = int(SEARCH_CONFIG["split_primes"]["budget"])

# Root isolation
ISOLATION_WIDTH = Fraction(SEARCH_CONFIG["isolation"]["width"])

# Permutation-group brute force
BRUTE_FORCE_MAX_DEGREE = int(SEARCH_CONFIG["groups"]["max_degree"])

# Documents
SCHEMA_VERSION = str(SEARCH_CONFIG["documents"]["schema_version"])
TOOL_NAME = "shimforge"

# Logging
LOG_LEVEL = SEARCH_CONFIG["logging"]["level"]
LOG_FILE = SEARCH_CONFIG["logging"]["file"]


def resolve_forge_budget() -> int:
    """Scale-doubling budget for forge_field, honouring FORGE_BUDGET."""
    raw = _env_value("FORGE_BUDGET")
    if raw is None:
        return DEFAULT_SCALE_DOUBLINGS
    try:
        budget = int(raw)
    except ValueError as exc:
        raise ValueError(f"FORGE_BUDGET must be a positive integer, got {raw!r}") from exc
    if budget <= 0:
        raise ValueError(f"FORGE_BUDGET must be a positive integer, got {raw!r}")
    return budget
