"""
G-lattices and the norm-one torus character lattices.
"""

from .lattice import (
    GLattice,
    LatticeMap,
    QuotientData,
    direct_sum,
    fixed_sublattice,
    permutation_lattice,
    quotient_data,
    quotient_lattice,
    restrict_lattice,
    trivial_lattice,
)
from .norm_tori import NormOneTori, build_norm_tori, check_exactness, hnp_lattice, phnp_lattice

__all__ = [
    "GLattice",
    "LatticeMap",
    "QuotientData",
    "NormOneTori",
    "trivial_lattice",
    "permutation_lattice",
    "direct_sum",
    "fixed_sublattice",
    "quotient_data",
    "quotient_lattice",
    "restrict_lattice",
    "build_norm_tori",
    "check_exactness",
    "hnp_lattice",
    "phnp_lattice",
]
