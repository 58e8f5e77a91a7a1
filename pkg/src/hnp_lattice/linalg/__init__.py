"""
Exact integer linear algebra: normal forms, kernels, cokernels and finite abelian groups.
"""

from .abelian import (
    contains,
    elements,
    intersect_subgroups,
    kernel_of_map,
    preimage_of_subgroup,
    reduce_vector,
    span_generators,
    subgroup_order,
    subgroup_structure,
)
from .cokernel import Cokernel, FiniteAbelianGroup, cokernel, invariant_factors
from .kernel import kernel_basis, solve
from .matrix import IntMatrix, SparseMatrix, Vector
from .normal_forms import HermiteDecomposition, SmithDecomposition, hermite_decomposition, hnf, snf

__all__ = [
    "IntMatrix",
    "SparseMatrix",
    "Vector",
    "HermiteDecomposition",
    "SmithDecomposition",
    "hermite_decomposition",
    "hnf",
    "snf",
    "kernel_basis",
    "solve",
    "Cokernel",
    "FiniteAbelianGroup",
    "cokernel",
    "invariant_factors",
    "contains",
    "elements",
    "intersect_subgroups",
    "kernel_of_map",
    "preimage_of_subgroup",
    "reduce_vector",
    "span_generators",
    "subgroup_order",
    "subgroup_structure",
]
