"""A sufficient condition for r-connectivity of a configuration's complex.

Cover the order complex by the upper cones of the minimal elements; every
cone is contractible, and the intersection pattern of the cover is
controlled by the induced complexes on the common upper sets of pairs of
minimal elements.  If all those pair complexes are (r-1)-connected, the
whole complex is r-connected.  The converse is not claimed: a False
return is inconclusive.
"""
from __future__ import annotations

from itertools import combinations

from . import _kernels
from .points import PointConfig, join, minimal_elements, to_permutation, upper_set

__all__ = ["sufficient_condition_holds"]


def sufficient_condition_holds(config: PointConfig, r: int) -> bool:
    """True guarantees the configuration's order complex is r-connected.

    Each pair of minimal elements contributes the induced complex on the
    points above the pair's join; its (r-1)-connectivity is decided via
    the exact homotopy classification of the corresponding pattern
    permutation.  An empty upper set fails (the empty complex is not even
    (-1)-connected); a single minimal element renders the condition
    vacuously true.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if config.n == 0:
        raise ValueError("the empty configuration is not covered")
    minima = sorted(minimal_elements(config))
    for i, j in combinations(minima, 2):
        indices = upper_set(config, join(config.point(i), config.point(j)))
        if not indices:
            return False
        sub = PointConfig(tuple(config.point(k) for k in sorted(indices)))
        perm = to_permutation(sub)
        inv0 = [p - 1 for p in perm.positions_by_value()]
        if _kernels.has_sphere_le(inv0, r - 1):
            return False
    return True
