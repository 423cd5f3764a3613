"""Shared weight-distribution cache.

Exhaustive enumeration is the only expensive step in the package, and the
same few codes are rebuilt many times across table rows, theorem sweeps and
conjecture grids.  ``LinearCode`` memoizes per instance; this layer keys on
the canonical generator matrix so *every* instance of the same code shares
one enumeration, and optionally persists results on disk between runs.

The disk layer is off unless a directory is configured, either through
``set_cache_dir`` or the ``DESIGNCODES_CACHE`` environment variable.  Files
are one JSON document per code, named by the SHA-256 of the descriptor, so
concurrent runs can share a directory (writes go through ``os.replace``).
"""

from __future__ import annotations

import hashlib
import json
import os

from .code import LinearCode, WeightDistribution

_memo: dict[str, WeightDistribution] = {}
_dir_override: str | None = None


def cache_key(code: LinearCode) -> str:
    """Stable content hash: field order, shape, canonical generator bytes."""
    h = hashlib.sha256()
    h.update(f"q={code.field.q};n={code.n};k={code.k};".encode())
    h.update(code.gen.tobytes())
    return h.hexdigest()


def set_cache_dir(path: str | os.PathLike | None) -> None:
    """Enable (or with None disable) the on-disk layer for this process."""
    global _dir_override
    _dir_override = os.fspath(path) if path is not None else None


def cache_dir() -> str | None:
    return _dir_override or os.environ.get("DESIGNCODES_CACHE") or None


def clear_memo() -> None:
    _memo.clear()


def _disk_path(key: str) -> str | None:
    d = cache_dir()
    return os.path.join(d, key + ".json") if d else None


def _disk_load(code: LinearCode, key: str) -> WeightDistribution | None:
    path = _disk_path(key)
    if path is None or not os.path.exists(path):
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            wd = WeightDistribution.from_json(fh.read())
    except (OSError, ValueError, KeyError, AssertionError):
        return None  # corrupt entry: fall through to recompute
    if (wd.n, wd.q, wd.k) != (code.n, code.field.q, code.k):
        return None
    return wd


def _disk_store(key: str, wd: WeightDistribution) -> None:
    path = _disk_path(key)
    if path is None:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    tmp = path + f".tmp{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(wd.to_json())
    os.replace(tmp, path)


def weight_distribution(code: LinearCode, budget: int | None = None,
                        threads: int | None = None) -> WeightDistribution:
    """Cached counterpart of ``LinearCode.weight_distribution``.

    Raises ``BudgetExceeded`` exactly as the uncached path would; only
    successful enumerations are stored.
    """
    key = cache_key(code)
    wd = _memo.get(key)
    if wd is None:
        wd = _disk_load(code, key)
        if wd is not None:
            _memo[key] = wd
    if wd is not None:
        return wd
    wd = code.weight_distribution(budget=budget, threads=threads)
    _memo[key] = wd
    _disk_store(key, wd)
    return wd


def min_distance(code: LinearCode, budget: int | None = None,
                 threads: int | None = None) -> int:
    return weight_distribution(code, budget, threads).min_distance()
