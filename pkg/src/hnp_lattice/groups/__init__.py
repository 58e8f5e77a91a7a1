"""
Finite groups, subgroups, coset spaces and the family catalog.
"""

from .catalog import (
    FAMILIES,
    TAGS,
    CatalogEntry,
    catalog_entries,
    catalog_group,
    cyclic,
    dihedral,
    direct_product,
    heisenberg,
    parse_group_expression,
    quaternion8,
    symmetric,
)
from .group import CosetSpace, FiniteGroup, Subgroup, group_from_cayley, require_same_group
from .permutations import cycle_label, group_from_permutations, parse_permutation
from .subgroups import (
    all_subgroups,
    conjugate,
    conjugates,
    coset_space,
    cyclic_subgroups,
    derived_subgroup,
    generated,
    intersect,
    intersect_all,
    is_normal,
    maximal_cyclic_subgroups,
    normal_subgroups,
    product_set,
    quotient_group,
    stabilizer_core,
)

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "CosetSpace",
    "group_from_cayley",
    "group_from_permutations",
    "parse_permutation",
    "cycle_label",
    "require_same_group",
    "FAMILIES",
    "TAGS",
    "CatalogEntry",
    "catalog_entries",
    "catalog_group",
    "parse_group_expression",
    "cyclic",
    "dihedral",
    "symmetric",
    "quaternion8",
    "heisenberg",
    "direct_product",
    "all_subgroups",
    "normal_subgroups",
    "cyclic_subgroups",
    "maximal_cyclic_subgroups",
    "derived_subgroup",
    "generated",
    "intersect",
    "intersect_all",
    "product_set",
    "is_normal",
    "conjugate",
    "conjugates",
    "coset_space",
    "quotient_group",
    "stabilizer_core",
]
