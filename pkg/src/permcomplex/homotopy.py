"""Homotopy types of permutation order complexes.

Every such complex is empty, contractible, or homotopy equivalent to a
wedge of spheres; the classification is computed by a value-by-value
decomposition.  With 1 and 2 denoting the positions of the two smallest
values of the current (sub-)permutation:

* value 1 left of value 2: deleting value 2 preserves the homotopy type;
* value 1 right of value 2: the type is the wedge of the type after
  deleting value 1 with the suspension of the type of the strict suffix
  beyond value 1's position.

Base cases close the recursion: a single point is contractible, the empty
permutation gives the empty complex, and suspending the empty complex
gives a two-point space.  The recursion is executed iteratively (explicit
work stack) by the kernels in :mod:`permcomplex._kernels`, so deeply
nested instances cannot overflow the interpreter stack.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from . import _kernels
from .permutations import Permutation

__all__ = [
    "HomotopyType",
    "EMPTY",
    "CONTRACTIBLE",
    "wedge_of_spheres",
    "wedge",
    "suspend",
    "homotopy_type",
    "is_r_connected",
]

_EMPTY = "empty"
_CONTRACTIBLE = "contractible"
_WEDGE = "wedge"


@dataclass(frozen=True)
class HomotopyType:
    """Tagged classification: empty, contractible, or a wedge of spheres.

    ``spheres`` maps dimension -> multiplicity and is nonempty exactly for
    the wedge tag.
    """

    kind: str
    spheres: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.kind not in (_EMPTY, _CONTRACTIBLE, _WEDGE):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == _WEDGE:
            if not self.spheres:
                raise ValueError("a wedge must contain at least one sphere")
            dims = [d for d, _ in self.spheres]
            if dims != sorted(set(dims)):
                raise ValueError("sphere dimensions must be sorted and distinct")
            if any(d < 0 or c < 1 for d, c in self.spheres):
                raise ValueError("sphere entries must have dim >= 0 and count >= 1")
        elif self.spheres:
            raise ValueError(f"{self.kind} carries no sphere data")

    @property
    def is_empty(self) -> bool:
        return self.kind == _EMPTY

    @property
    def is_contractible(self) -> bool:
        return self.kind == _CONTRACTIBLE

    @property
    def is_wedge(self) -> bool:
        return self.kind == _WEDGE

    @property
    def min_sphere_dim(self) -> int | None:
        return self.spheres[0][0] if self.kind == _WEDGE else None

    def sphere_counts(self) -> dict[int, int]:
        return dict(self.spheres)

    def to_json_dict(self) -> dict:
        if self.kind == _WEDGE:
            return {
                "type": _WEDGE,
                "spheres": [{"dim": d, "count": c} for d, c in self.spheres],
            }
        return {"type": self.kind}

    def __str__(self) -> str:
        if self.kind == _WEDGE:
            parts = []
            for d, c in self.spheres:
                parts.extend([f"S^{d}"] * c)
            return " v ".join(parts)
        return self.kind


EMPTY = HomotopyType(_EMPTY)
CONTRACTIBLE = HomotopyType(_CONTRACTIBLE)


def wedge_of_spheres(counts: Mapping[int, int]) -> HomotopyType:
    """Wedge with the given dimension -> multiplicity mapping (may be empty)."""
    cleaned = {int(d): int(c) for d, c in counts.items() if c}
    if not cleaned:
        return CONTRACTIBLE
    return HomotopyType(_WEDGE, tuple(sorted(cleaned.items())))


def wedge(h1: HomotopyType, h2: HomotopyType) -> HomotopyType:
    """One-point union; contractible is the identity, empty is rejected."""
    if h1.is_empty or h2.is_empty:
        raise ValueError("the wedge of an empty complex is undefined (no basepoint)")
    counts = h1.sphere_counts()
    for d, c in h2.spheres:
        counts[d] = counts.get(d, 0) + c
    return wedge_of_spheres(counts)


def suspend(h: HomotopyType) -> HomotopyType:
    """Suspension: shifts sphere dimensions up by one.

    The suspension of the empty complex is a two-point space, i.e. S^0;
    suspending a contractible space stays contractible.
    """
    if h.is_empty:
        return wedge_of_spheres({0: 1})
    if h.is_contractible:
        return CONTRACTIBLE
    return wedge_of_spheres({d + 1: c for d, c in h.spheres})


def homotopy_type(perm: Permutation) -> HomotopyType:
    """Exact homotopy type of the order complex of ``perm``.

    Note: on random inputs the decomposition tree grows quickly with n;
    full classification is practical up to a few hundred elements, while
    connectivity queries (:func:`is_r_connected` on sampled permutations,
    see :mod:`permcomplex.experiments`) prune the tree and scale much
    further.
    """
    if len(perm) == 0:
        return EMPTY
    inv0 = [p - 1 for p in perm.positions_by_value()]
    return wedge_of_spheres(_kernels.sphere_counts(inv0))


def is_r_connected(h: HomotopyType, r: int) -> bool:
    """r-connectivity read off the classification.

    The empty complex is not even (-1)-connected; any nonempty complex is
    (-1)-connected; a wedge is r-connected iff every sphere dimension
    exceeds r.
    """
    if r < -1:
        raise ValueError("r must be >= -1")
    if h.is_empty:
        return False
    if h.is_contractible:
        return True
    return r < h.spheres[0][0]
