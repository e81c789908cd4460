"""Permutations in one-line notation, patterns, and the disconnection scan.

A permutation of size n maps positions 1..n to values 1..n and is stored
as the tuple ``values`` with ``values[i-1]`` the image of position i.
Every public interface is 1-based; the size-0 permutation is a legal,
first-class value (it arises as the suffix pattern at the last position).

Position i precedes position j in the comparability order iff i < j and
the value at i is smaller than the value at j, so the faces of the
associated order complex are exactly the increasing subsequences.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Permutation",
    "identity",
    "reversal",
    "parse",
    "inverse",
    "comparable",
    "pattern",
    "delete_pattern",
    "suffix_pattern",
    "sample_uniform",
    "is_disconnected",
]


@dataclass(frozen=True)
class Permutation:
    """One-line notation; ``values`` must be a bijection on {1, ..., n}."""

    values: tuple[int, ...]

    def __post_init__(self):
        _validate_values(self.values)

    @property
    def size(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, position: int) -> int:
        """Image of a 1-based position.

        >>> Permutation((3, 1, 2))(1)
        3
        """
        if not 1 <= position <= len(self.values):
            raise ValueError(f"position {position} out of range 1..{len(self.values)}")
        return self.values[position - 1]

    def positions_by_value(self) -> tuple[int, ...]:
        """Tuple whose entry t is the 1-based position holding value t+1."""
        inv = [0] * len(self.values)
        for pos, val in enumerate(self.values, start=1):
            inv[val - 1] = pos
        return tuple(inv)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)


def _validate_values(values: Sequence[int]):
    n = len(values)
    seen = [False] * n
    for v in values:
        if not isinstance(v, int):
            raise ValueError(f"non-integer entry {v!r}")
        if not 1 <= v <= n:
            raise ValueError(f"value {v} out of range 1..{n}")
        if seen[v - 1]:
            raise ValueError(f"duplicate value {v}")
        seen[v - 1] = True


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def reversal(n: int) -> Permutation:
    """The order-reversing permutation (n, n-1, ..., 1)."""
    return Permutation(tuple(range(n, 0, -1)))


def parse(text: str) -> Permutation:
    """Parse one-line notation.

    Accepts whitespace-separated integers ("3 2 5 4 1 7 6"), or a single
    contiguous digit string ("3254176") which is read digit-by-digit and
    is only available for n <= 9.  An empty string denotes the size-0
    permutation.
    """
    tokens = text.split()
    if not tokens:
        return Permutation(())
    if len(tokens) == 1 and tokens[0].isdigit() and len(tokens[0]) >= 2:
        digits = tokens[0]
        if len(digits) > 9:
            raise ValueError("compact digit form is only supported for n <= 9; separate entries with spaces")
        return Permutation(tuple(int(ch) for ch in digits))
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ValueError(f"non-integer token {tok!r}") from None
    return Permutation(tuple(values))


def inverse(perm: Permutation) -> Permutation:
    return Permutation(perm.positions_by_value())


def comparable(perm: Permutation, i: int, j: int) -> bool:
    """Whether positions i and j are comparable: position order agrees with value order.

    >>> comparable(Permutation((2, 1)), 1, 2)
    False
    """
    n = len(perm)
    for pos in (i, j):
        if not 1 <= pos <= n:
            raise ValueError(f"position {pos} out of range 1..{n}")
    if i == j:
        raise ValueError("positions must be distinct")
    return (i < j) == (perm.values[i - 1] < perm.values[j - 1])


def _standardize(subseq: Sequence[int]) -> Permutation:
    # rank-sort the values, preserving relative order; O(k log k)
    ranks = {v: r for r, v in enumerate(sorted(subseq), start=1)}
    return Permutation(tuple(ranks[v] for v in subseq))


def pattern(perm: Permutation, positions: Iterable[int]) -> Permutation:
    """Standardized sub-permutation on the given 1-based positions.

    The subsequence of values at the (sorted) positions is relabeled to
    1..k preserving relative order.
    """
    n = len(perm)
    sorted_positions = sorted(set(positions))
    for p in sorted_positions:
        if not 1 <= p <= n:
            raise ValueError(f"position {p} out of range 1..{n}")
    return _standardize([perm.values[p - 1] for p in sorted_positions])


def delete_pattern(perm: Permutation, t: int) -> Permutation:
    """Pattern on all positions except t; the result has size n-1."""
    n = len(perm)
    if n == 0:
        raise ValueError("cannot delete from the empty permutation")
    if not 1 <= t <= n:
        raise ValueError(f"position {t} out of range 1..{n}")
    return _standardize(perm.values[: t - 1] + perm.values[t:])


def suffix_pattern(perm: Permutation, t: int) -> Permutation:
    """Pattern on positions t+1..n; empty when t = n."""
    n = len(perm)
    if not 1 <= t <= n:
        raise ValueError(f"position {t} out of range 1..{n}")
    return _standardize(perm.values[t:])


def sample_uniform(n: int, rng: np.random.Generator) -> Permutation:
    """Uniform permutation via the generator's Fisher-Yates shuffle."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Permutation(())
    return Permutation(tuple(int(v) + 1 for v in rng.permutation(n)))


def is_disconnected(perm: Permutation) -> bool:
    """Whether the order complex is disconnected.

    Disconnection is equivalent to the existence of a cut 1 <= k <= n-1
    such that positions k+1..n carry exactly the values 1..n-k; a single
    right-to-left scan over suffix maxima decides it in O(n).
    """
    n = len(perm)
    if n == 0:
        raise ValueError("the empty permutation has no connectivity convention here")
    values = perm.values
    suffix_max = 0
    for i in range(n, 1, -1):  # cut k = i-1
        if values[i - 1] > suffix_max:
            suffix_max = values[i - 1]
        if suffix_max <= n - (i - 1):
            return True
    return False
