"""Planar point configurations and the region geometry of corner pairs.

A configuration is n points in the unit square in general position (all
first coordinates distinct, all second coordinates distinct).  Sorting by
the two coordinates independently turns a configuration into a permutation
whose order complex is isomorphic to the configuration's own; sampling
coordinates uniformly therefore reproduces the uniform permutation model.

Fixing an incomparable corner pair (a1, b1), (a2, b2) with a1 < a2 and
b2 < b1 splits the square into three parts: the region dominated by one of
the corners, the region dominating both, and the middle band between them.
Their areas are exact rational functions of the spec and obey a product
identity in the barycentric coordinates of the two coordinate splits.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .permutations import Permutation

__all__ = [
    "PointConfig",
    "RegionSpec",
    "RegionVolumes",
    "REGION_BELOW",
    "REGION_MIDDLE",
    "REGION_ABOVE",
    "sample_config",
    "to_permutation",
    "minimal_elements",
    "join",
    "upper_set",
    "region_volumes",
    "classify_region",
    "config_to_json",
    "config_from_json",
]

Point = tuple[float, float]

REGION_BELOW = "below"
REGION_MIDDLE = "middle"
REGION_ABOVE = "above"


@dataclass(frozen=True)
class PointConfig:
    """Points in [0,1]^2; indices are 1-based like permutation positions."""

    points: tuple[Point, ...]

    def __post_init__(self):
        a = [p[0] for p in self.points]
        b = [p[1] for p in self.points]
        if len(set(a)) != len(a) or len(set(b)) != len(b):
            raise ValueError("configuration violates general position (tied coordinate)")

    @property
    def n(self) -> int:
        return len(self.points)

    def point(self, i: int) -> Point:
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")
        return self.points[i - 1]


def sample_config(n: int, rng: np.random.Generator) -> PointConfig:
    """n i.i.d. uniform points; coordinate collisions are resampled."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    seen_a: set[float] = set()
    seen_b: set[float] = set()
    pts = []
    for _ in range(n):
        while True:
            a = float(rng.random())
            b = float(rng.random())
            if a not in seen_a and b not in seen_b:
                break
        seen_a.add(a)
        seen_b.add(b)
        pts.append((a, b))
    return PointConfig(tuple(pts))


def to_permutation(config: PointConfig) -> Permutation:
    """The permutation matching the configuration's comparability structure.

    Read the points in increasing first coordinate and record the rank of
    each second coordinate; two points are comparable exactly when the
    corresponding positions are.
    """
    n = config.n
    if n == 0:
        return Permutation(())
    pts = config.points
    by_a = sorted(range(n), key=lambda i: pts[i][0])
    rank_b = {i: r for r, i in enumerate(sorted(range(n), key=lambda i: pts[i][1]), start=1)}
    return Permutation(tuple(rank_b[i] for i in by_a))


def minimal_elements(config: PointConfig) -> set[int]:
    """1-based indices of points dominated by no other point."""
    n = config.n
    pts = config.points
    order = sorted(range(n), key=lambda i: pts[i][0])
    out = set()
    best_b = float("inf")
    for i in order:
        if pts[i][1] < best_b:
            out.add(i + 1)
            best_b = pts[i][1]
    return out


def join(p: Point, q: Point) -> Point:
    """Componentwise maximum."""
    return (max(p[0], q[0]), max(p[1], q[1]))


def upper_set(config: PointConfig, p: Point) -> set[int]:
    """1-based indices of points componentwise >= p."""
    return {
        i + 1
        for i, (a, b) in enumerate(config.points)
        if a >= p[0] and b >= p[1]
    }


class RegionVolumes(NamedTuple):
    below: Fraction
    middle: Fraction
    above: Fraction


@dataclass(frozen=True)
class RegionSpec:
    """Corner pair (a1, b1), (a2, b2) with a1 < a2 and b2 < b1, coordinates in [0,1].

    Coordinates are stored as exact rationals so areas and the barycentric
    identity can be checked exactly.
    """

    a1: Fraction
    a2: Fraction
    b1: Fraction
    b2: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "b1", "b2"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))
            value = getattr(self, name)
            if not 0 <= value <= 1:
                raise ValueError(f"{name}={value} outside [0, 1]")
        if not self.a1 < self.a2:
            raise ValueError("need a1 < a2")
        if not self.b2 < self.b1:
            raise ValueError("need b2 < b1")

    def x_triple(self) -> tuple[Fraction, Fraction, Fraction]:
        """Barycentric split of the first coordinate: (a1, a2-a1, 1-a2)."""
        return (self.a1, self.a2 - self.a1, 1 - self.a2)

    def y_triple(self) -> tuple[Fraction, Fraction, Fraction]:
        """Barycentric split of the second coordinate: (b2, b1-b2, 1-b1)."""
        return (self.b2, self.b1 - self.b2, 1 - self.b1)


def region_volumes(spec: RegionSpec) -> RegionVolumes:
    """Exact areas of the three regions; they always sum to one."""
    below = spec.a1 * spec.b1 + spec.a2 * spec.b2 - spec.a1 * spec.b2
    above = (1 - spec.a2) * (1 - spec.b1)
    return RegionVolumes(below, 1 - below - above, above)


def classify_region(spec: RegionSpec, p: Point) -> str:
    """Which region a point belongs to.

    The two corner points themselves belong to the middle region; any
    other point sharing a coordinate with the spec lies on a region
    boundary (a measure-zero event for random points) and is rejected so
    the three regions stay an honest partition.
    """
    a, b = p
    if (a, b) == (spec.a1, spec.b1) or (a, b) == (spec.a2, spec.b2):
        return REGION_MIDDLE
    if a in (spec.a1, spec.a2) or b in (spec.b1, spec.b2):
        raise ValueError(f"point {p} lies on a region boundary; resample it")
    if (a < spec.a1 and b < spec.b1) or (a < spec.a2 and b < spec.b2):
        return REGION_BELOW
    if a > spec.a2 and b > spec.b1:
        return REGION_ABOVE
    return REGION_MIDDLE


def config_to_json(config: PointConfig) -> str:
    return json.dumps([[a, b] for a, b in config.points])


def config_from_json(text: str) -> PointConfig:
    data = json.loads(text)
    return PointConfig(tuple((float(a), float(b)) for a, b in data))
