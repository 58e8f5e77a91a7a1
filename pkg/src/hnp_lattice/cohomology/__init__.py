"""
Group cohomology of G-lattices in degrees 1 and 2, restriction and induced maps, Sha.
"""

from .cochains import coboundary, cochain_dimension, restrict_cochain
from .cohomology_group import CohomologyGroup, cohomology, cyclic_generator, cyclic_h2
from .maps import CohomologyMap, KernelSubgroup, induced_map, local_cohomology, restriction_map, sha, sha_kernel

__all__ = [
    "CohomologyGroup",
    "CohomologyMap",
    "KernelSubgroup",
    "coboundary",
    "cochain_dimension",
    "restrict_cochain",
    "cohomology",
    "cyclic_generator",
    "cyclic_h2",
    "local_cohomology",
    "restriction_map",
    "induced_map",
    "sha",
    "sha_kernel",
]
