"""Explicit simplicial complexes and brute-force mod-2 homology.

This is the independent ground truth for small instances: faces are
enumerated explicitly (bitmasks over at most 16 vertices) and reduced
Betti numbers are computed from boundary-matrix ranks over GF(2).  For
permutation/point order complexes, integral homology is free, so the
GF(2) Betti vector determines the wedge decomposition and r-connectivity.
"""
from __future__ import annotations

from dataclasses import dataclass

from .permutations import Permutation
from .points import PointConfig

__all__ = [
    "SimplicialComplex",
    "BettiVector",
    "DEFAULT_VERTEX_GUARD",
    "order_complex",
    "order_complex_of_points",
    "induced",
    "betti_gf2",
    "is_r_connected_oracle",
]

DEFAULT_VERTEX_GUARD = 16


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed face set on a sorted vertex tuple.

    Faces are stored as bitmasks over indices into ``vertices`` and
    include all singletons of present vertices; the empty face is
    implicit.  The empty complex has no vertices and no faces.
    """

    vertices: tuple[int, ...]
    face_masks: frozenset[int]

    @classmethod
    def from_faces(cls, vertices, faces) -> "SimplicialComplex":
        verts = tuple(sorted(vertices))
        if len(verts) > DEFAULT_VERTEX_GUARD:
            raise ValueError(f"at most {DEFAULT_VERTEX_GUARD} vertices supported")
        index = {v: i for i, v in enumerate(verts)}
        masks = set()
        for face in faces:
            mask = 0
            for v in face:
                if v not in index:
                    raise ValueError(f"face vertex {v} not among the vertices")
                mask |= 1 << index[v]
            if mask:
                masks.add(mask)
        for mask in list(masks):
            sub = (mask - 1) & mask
            while sub:
                if sub not in masks and sub.bit_count() >= 1:
                    raise ValueError("face set is not downward closed")
                sub = (sub - 1) & mask
        for v in verts:
            if (1 << index[v]) not in masks:
                raise ValueError(f"missing singleton face for vertex {v}")
        return cls(verts, frozenset(masks))

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def dim(self) -> int:
        """Dimension of the complex; -1 for the empty complex."""
        if not self.face_masks:
            return -1
        return max(m.bit_count() for m in self.face_masks) - 1

    def num_faces(self) -> int:
        return len(self.face_masks)

    def face_sets(self) -> set[frozenset[int]]:
        """Faces as label sets, for structural comparisons."""
        return {self._labels(m) for m in self.face_masks}

    def _labels(self, mask: int) -> frozenset[int]:
        return frozenset(self.vertices[i] for i in range(len(self.vertices)) if mask >> i & 1)

    def face_counts(self) -> list[int]:
        """Number of faces in each dimension 0..dim."""
        counts = [0] * (self.dim + 1)
        for m in self.face_masks:
            counts[m.bit_count() - 1] += 1
        return counts


def order_complex(perm: Permutation, guard: int = DEFAULT_VERTEX_GUARD) -> SimplicialComplex:
    """Order complex of a permutation: faces are its increasing subsequences."""
    n = len(perm)
    if n > guard:
        raise ValueError(f"enumeration guard exceeded: n={n} > {guard}")
    values = perm.values
    greater_after = [
        [j for j in range(i + 1, n) if values[j] > values[i]] for i in range(n)
    ]
    masks = set()

    def extend(mask: int, last: int):
        masks.add(mask)
        for j in greater_after[last]:
            extend(mask | (1 << j), j)

    for i in range(n):
        extend(1 << i, i)
    return SimplicialComplex(tuple(range(1, n + 1)), frozenset(masks))


def order_complex_of_points(config: PointConfig, guard: int = DEFAULT_VERTEX_GUARD) -> SimplicialComplex:
    """Order complex of a planar configuration: faces are strict chains.

    A chain is a subset that can be ordered so both coordinates strictly
    increase; under general position this matches the componentwise order.
    """
    n = config.n
    if n > guard:
        raise ValueError(f"enumeration guard exceeded: n={n} > {guard}")
    pts = config.points
    order = sorted(range(n), key=lambda i: pts[i][0])
    above = {
        i: [j for j in order if pts[j][0] > pts[i][0] and pts[j][1] > pts[i][1]]
        for i in range(n)
    }
    masks = set()

    def extend(mask: int, last: int):
        masks.add(mask)
        for j in above[last]:
            extend(mask | (1 << j), j)

    for i in range(n):
        extend(1 << i, i)
    return SimplicialComplex(tuple(range(1, n + 1)), frozenset(masks))


def induced(complex_: SimplicialComplex, subset) -> SimplicialComplex:
    """Induced subcomplex on a subset of the vertex labels."""
    sub = tuple(sorted(subset))
    index = {v: i for i, v in enumerate(complex_.vertices)}
    for v in sub:
        if v not in index:
            raise ValueError(f"vertex {v} not in the complex")
    keep_mask = 0
    for v in sub:
        keep_mask |= 1 << index[v]
    remap = {index[v]: i for i, v in enumerate(sub)}
    new_masks = set()
    for m in complex_.face_masks:
        if m & ~keep_mask:
            continue
        new = 0
        for old_bit, new_bit in remap.items():
            if m >> old_bit & 1:
                new |= 1 << new_bit
        new_masks.add(new)
    return SimplicialComplex(sub, frozenset(new_masks))


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers over GF(2), dims 0..dim; empty complex flagged."""

    betti: tuple[int, ...]
    is_empty: bool = False

    def sphere_counts(self) -> dict[int, int]:
        return {d: b for d, b in enumerate(self.betti) if b}

    def all_zero(self) -> bool:
        return all(b == 0 for b in self.betti)


def _rank_gf2(rows: list[int]) -> int:
    """Rank of a GF(2) matrix given as bit-packed rows."""
    basis: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            msb = row.bit_length() - 1
            if msb in basis:
                row ^= basis[msb]
            else:
                basis[msb] = row
                rank += 1
                break
    return rank


def betti_gf2(complex_: SimplicialComplex) -> BettiVector:
    """Reduced Betti numbers from boundary-matrix ranks over GF(2).

    Uses the augmented chain complex, so the dimension-0 entry counts
    connected components minus one.
    """
    if complex_.is_empty:
        return BettiVector((), is_empty=True)
    by_dim: dict[int, list[int]] = {}
    for m in complex_.face_masks:
        by_dim.setdefault(m.bit_count() - 1, []).append(m)
    top = max(by_dim)
    index = {d: {m: i for i, m in enumerate(sorted(faces))} for d, faces in by_dim.items()}

    def boundary_rank(d: int) -> int:
        if d == 0:
            return 1  # augmentation map onto GF(2); rank 1 since nonempty
        if d > top:
            return 0
        cols = index[d - 1]
        rows = []
        for m in sorted(by_dim[d]):
            row = 0
            mm = m
            while mm:
                bit = mm & -mm
                row |= 1 << cols[m ^ bit]
                mm ^= bit
            rows.append(row)
        return _rank_gf2(rows)

    ranks = [boundary_rank(d) for d in range(top + 2)]
    betti = tuple(
        len(by_dim.get(d, [])) - ranks[d] - ranks[d + 1] for d in range(top + 1)
    )
    return BettiVector(betti)


def is_r_connected_oracle(complex_: SimplicialComplex, r: int) -> bool:
    """r-connectivity decided from the GF(2) Betti vector.

    Sound for permutation and planar-point order complexes, whose homotopy
    types are wedges of spheres (torsion-free, no fundamental-group
    subtleties); it is not a general-purpose connectivity test.
    """
    if r < -1:
        raise ValueError("r must be >= -1")
    if complex_.is_empty:
        return False
    if r == -1:
        return True
    bv = betti_gf2(complex_)
    return all(b == 0 for d, b in enumerate(bv.betti) if d <= r)
