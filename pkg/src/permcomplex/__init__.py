"""Order complexes of random permutations.

Exact homotopy classification (wedge-of-spheres decomposition), explicit
simplicial-complex homology oracles for small instances, exact rational
verification of the simplex-integral inequality family, and reproducible
Monte Carlo estimation of connectivity-failure probabilities.
"""
from ._kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .homotopy import (
    CONTRACTIBLE,
    EMPTY,
    HomotopyType,
    homotopy_type,
    is_r_connected,
    suspend,
    wedge,
    wedge_of_spheres,
)
from .permutations import (
    Permutation,
    comparable,
    delete_pattern,
    identity,
    inverse,
    is_disconnected,
    parse,
    pattern,
    reversal,
    sample_uniform,
    suffix_pattern,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_IMPLEMENTATION",
    "__version__",
    "Permutation",
    "parse",
    "identity",
    "reversal",
    "inverse",
    "comparable",
    "pattern",
    "delete_pattern",
    "suffix_pattern",
    "sample_uniform",
    "is_disconnected",
    "HomotopyType",
    "EMPTY",
    "CONTRACTIBLE",
    "wedge",
    "wedge_of_spheres",
    "suspend",
    "homotopy_type",
    "is_r_connected",
]
