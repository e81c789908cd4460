"""Kernel selection: compiled extension when available, pure Python otherwise.

Set the environment variable ``PERMCOMPLEX_PURE=1`` before import to force
the pure-Python implementation (used by the benchmark and the twin tests).
Both implementations are observationally identical; only speed differs.
"""
from __future__ import annotations

import os

import numpy as np

from . import pure as _pure

if os.environ.get("PERMCOMPLEX_PURE"):
    _impl = _pure
    IMPLEMENTATION = "pure"
else:
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        IMPLEMENTATION = "cython"
    except ImportError:
        _impl = _pure
        IMPLEMENTATION = "pure"

__all__ = [
    "IMPLEMENTATION",
    "sphere_counts",
    "has_sphere_le",
    "count_not_r_connected",
    "flags_not_r_connected",
]


def sphere_counts(pos) -> dict[int, int]:
    """Sphere-dimension multiset of the decomposition of ``pos`` (0-based inverse)."""
    return _impl.sphere_counts(pos)


def has_sphere_le(pos, r: int) -> bool:
    """True iff a sphere of dimension <= r appears (not-r-connected for n >= 1)."""
    return _impl.has_sphere_le(pos, r)


def _as_rows(perms) -> np.ndarray:
    rows = np.ascontiguousarray(perms, dtype=np.int64)
    if rows.ndim != 2:
        raise ValueError("expected a 2-D array of permutation rows")
    return rows


def count_not_r_connected(perms, r: int) -> int:
    """Number of rows (0-based permutations) whose complex is not r-connected."""
    return _impl.count_not_r_connected(_as_rows(perms), r)


def flags_not_r_connected(perms, r: int) -> np.ndarray:
    return _impl.flags_not_r_connected(_as_rows(perms), r)
