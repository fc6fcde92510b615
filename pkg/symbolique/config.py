"""
Configuration for symbolique.

Fixed limits live in module constants. Runtime switches (debug assertions,
oracle budget) live in a `Settings` instance that can be overridden from the
environment or the command line.
"""

import logging
import os
from dataclasses import dataclass, replace

logger = logging.getLogger("symbolique")

# Subsets of the ground set are stored as single machine words
MAX_GROUND_SET = 64

# Exponents must fit an unsigned 32-bit integer
MAX_EXPONENT = 2**32 - 1

# Desk-scale limits for exhaustive enumerations
FLAT_ENUMERATION_LIMIT = 16
TRANSVERSAL_LIMIT = 24
SQUAREFREE_BRUTEFORCE_LIMIT = 20

# Pairwise LCM operations the brute-force oracle may spend
DEFAULT_ORACLE_BUDGET = 10_000_000

# Memoized squarefree layers kept per process
SF_CACHE_SIZE = 512


@dataclass(frozen=True)
class Settings:
    """Runtime switches shared by the library and the CLI."""

    debug: bool = False
    oracle_budget: int = DEFAULT_ORACLE_BUDGET

    @classmethod
    def from_env(cls) -> "Settings":
        debug = os.environ.get("SYMBOLIQUE_DEBUG", "").lower() in ("1", "true", "yes")
        budget_raw = os.environ.get("SYMBOLIQUE_ORACLE_BUDGET")
        budget = DEFAULT_ORACLE_BUDGET
        if budget_raw:
            try:
                budget = int(budget_raw)
            except ValueError:
                logger.warning("Ignoring invalid SYMBOLIQUE_ORACLE_BUDGET: %s", budget_raw)
        return cls(debug=debug, oracle_budget=budget)


_settings = Settings.from_env()


def get_settings() -> Settings:
    return _settings


def configure(**overrides) -> Settings:
    """
    Replace fields of the process settings.

    Args:
        **overrides: Field values, e.g. ``debug=True``.

    Returns:
        The new settings.
    """
    global _settings
    _settings = replace(_settings, **overrides)
    logger.debug("Settings updated: %s", _settings)
    return _settings
