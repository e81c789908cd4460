"""Pure-Python homotopy-decomposition kernels.

The decomposition works on the inverse representation ``pos[v]`` = position
of the v-th smallest value (0-based, any strictly comparable ints).  One
task processes a sub-permutation by walking its values in increasing order
with two cursors a < b into the value-sorted position array:

* position(a) < position(b): the second-smallest value is deleted (b += 1);
* position(a) > position(b): the smallest value is deleted and the strict
  suffix beyond its position splits off as an independent task whose
  result is suspended once more than the parent's.

Every sphere in the final wedge arises from a split whose suffix is empty:
a task at suspension depth s contributes one sphere of dimension s per
empty split.  A task of size one contributes nothing (cone point), and the
size-0 input is the empty complex, which the callers tag separately.

``sphere_counts`` materializes the entire task tree; on random inputs the
tree grows faster than any fixed polynomial, so large instances should use
the connectivity queries, which prune all tasks at suspension depth > r
and run in near-linear time per permutation.
"""
from __future__ import annotations

import numpy as np

__all__ = [
    "sphere_counts",
    "has_sphere_le",
    "count_not_r_connected",
    "flags_not_r_connected",
]


def sphere_counts(pos) -> dict[int, int]:
    """Multiset of sphere dimensions of the wedge decomposition.

    ``pos`` lists positions by increasing value.  Returns {} when the
    complex is contractible (and for the size-0 input, whose Empty tag is
    the caller's concern).
    """
    counts: dict[int, int] = {}
    stack = [(list(pos), 0)]
    while stack:
        seg, shift = stack.pop()
        m = len(seg)
        a, b = 0, 1
        while b < m:
            if seg[a] < seg[b]:
                b += 1
            else:
                p = seg[a]
                child = [seg[t] for t in range(b, m) if seg[t] > p]
                if child:
                    stack.append((child, shift + 1))
                else:
                    counts[shift] = counts.get(shift, 0) + 1
                a = b
                b += 1
    return counts


def has_sphere_le(pos, r: int) -> bool:
    """Whether the decomposition contains a sphere of dimension <= r.

    Equivalently: whether the complex of a nonempty permutation is not
    r-connected.  Tasks at suspension depth > r cannot contribute, so they
    are never built; emptiness of a split is decided in O(1) from suffix
    maxima.
    """
    if r < 0:
        return False
    stack = [(list(pos), 0)]
    while stack:
        seg, shift = stack.pop()
        m = len(seg)
        if m == 0:
            continue
        # sufmax[t] = max(seg[t:])
        sufmax = list(seg)
        for t in range(m - 2, -1, -1):
            if sufmax[t + 1] > sufmax[t]:
                sufmax[t] = sufmax[t + 1]
        a, b = 0, 1
        while b < m:
            if seg[a] < seg[b]:
                b += 1
            else:
                p = seg[a]
                if sufmax[b] < p:
                    return True  # empty split: sphere of dimension shift <= r
                if shift + 1 <= r:
                    stack.append(([seg[t] for t in range(b, m) if seg[t] > p], shift + 1))
                a = b
                b += 1
    return False


def _batch_disconnected(perms: np.ndarray) -> np.ndarray:
    """Vectorized cut scan; rows are permutations of 0..n-1."""
    n = perms.shape[1]
    suffix_max = np.maximum.accumulate(perms[:, ::-1], axis=1)[:, ::-1]
    threshold = (n - 1 - np.arange(1, n)).astype(perms.dtype)
    return (suffix_max[:, 1:] <= threshold).any(axis=1)


def flags_not_r_connected(perms: np.ndarray, r: int) -> np.ndarray:
    """Per-row flags: row's complex is not r-connected. Rows are 0-based."""
    m, n = perms.shape
    if n < 1:
        raise ValueError("rows must be nonempty permutations")
    if r < 0:
        return np.zeros(m, dtype=bool)
    if r == 0:
        return _batch_disconnected(perms)
    inverses = np.argsort(perms, axis=1, kind="stable")
    out = np.empty(m, dtype=bool)
    for idx in range(m):
        out[idx] = has_sphere_le(inverses[idx].tolist(), r)
    return out


def count_not_r_connected(perms: np.ndarray, r: int) -> int:
    return int(flags_not_r_connected(perms, r).sum())
