"""Shared cache plumbing.

All memo tables in the package follow a write-once contract: a key is only
ever bound to one value, so concurrent writers are harmless under CPython's
atomic dict operations.  ``MONOTRI_CACHE_LIMIT`` (number of entries per
table, default 2**20) caps growth; once a table is full, new results are
simply not stored.
"""

import os

DEFAULT_CACHE_LIMIT = 1 << 20

_limit = int(os.environ.get("MONOTRI_CACHE_LIMIT", DEFAULT_CACHE_LIMIT))


def cache_limit() -> int:
    return _limit


def set_cache_limit(n: int) -> None:
    global _limit
    _limit = int(n)


def cache_put(cache: dict, key, value) -> None:
    if len(cache) < _limit:
        cache[key] = value
