"""Runtime limits for the exhaustive enumerators."""

from __future__ import annotations

import os

ENUMERATION_CAP_ENV = "MDTREE_ENUMERATION_CAP"
DEFAULT_ENUMERATION_CAP = 8

# maps [n] -> [n]; 7^7 ~ 8.2e5 functions
DEFAULT_FUNCTION_CAP = 7
# total number of maps [n] -> [-alpha, n] an H-enumeration may visit
DEFAULT_MAP_BUDGET = 5_000_000


def enumeration_cap() -> int:
    """Largest n for which tree enumeration is allowed.

    Reads ``MDTREE_ENUMERATION_CAP`` on every call so tests and the CLI can
    override it without reloading modules.
    """
    raw = os.environ.get(ENUMERATION_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_ENUMERATION_CAP
    cap = int(raw)
    if cap < 0:
        raise ValueError(f"{ENUMERATION_CAP_ENV} must be >= 0, got {cap}")
    return cap
