"""
Subgroups and homomorphisms of finite abelian groups in coordinates.

Elements of A = Z/d1 x ... x Z/dk are integer vectors read mod (d1, ..., dk). A
homomorphism A -> B is an integer matrix whose columns are images of the unit
vectors. Every question (kernel, preimage, intersection, structure) is answered by a
kernel computation on the matrix stacked with the moduli relations.
"""

import itertools
from collections.abc import Iterator, Sequence

from .cokernel import FiniteAbelianGroup, cokernel
from .kernel import kernel_basis, solve
from .matrix import IntMatrix, Vector
from .normal_forms import hnf


def reduce_vector(vector: Sequence[int], moduli: Sequence[int]) -> Vector:
    return tuple(v % d for v, d in zip(vector, moduli))


def _columns(generators: Sequence[Sequence[int]], k: int) -> IntMatrix:
    return IntMatrix.from_columns([tuple(g) for g in generators], k)


def _relations(moduli: Sequence[int]) -> IntMatrix:
    return IntMatrix.diagonal(list(moduli))


def span_generators(generators: Sequence[Sequence[int]], moduli: Sequence[int]) -> list[Vector]:
    """
    Canonical generators of the subgroup spanned by the given vectors.

    Read off the Hermite form of [generators | diag(moduli)], which depends only on
    the subgroup; zero columns are dropped.
    """
    k = len(moduli)
    if k == 0:
        return []
    H = hnf(_columns(generators, k).hstack(_relations(moduli)) if generators else _relations(moduli))
    result = []
    for col in H.columns():
        reduced = reduce_vector(col, moduli)
        if any(reduced) and reduced not in result:
            result.append(reduced)
    return result


def subgroup_structure(generators: Sequence[Sequence[int]], moduli: Sequence[int]) -> FiniteAbelianGroup:
    """
    Isomorphism type of the subgroup generated by the given elements.

    The subgroup is Z^g / K where K = {c : X·c = 0 mod d}, the c-part of the kernel
    of [X | diag(d)].
    """
    g = len(generators)
    k = len(moduli)
    if g == 0 or k == 0:
        return FiniteAbelianGroup()
    K = kernel_basis(_columns(generators, k).hstack(_relations(moduli)))
    relations = IntMatrix.from_columns([col[:g] for col in K.columns()], g)
    coker = cokernel(g, relations)
    if coker.free_rank:
        raise ArithmeticError(f"Subgroup of a finite group reported free rank {coker.free_rank}")
    return coker.structure


def subgroup_order(generators: Sequence[Sequence[int]], moduli: Sequence[int]) -> int:
    return subgroup_structure(generators, moduli).order


def contains(generators: Sequence[Sequence[int]], moduli: Sequence[int], vector: Sequence[int]) -> bool:
    """Membership test for the subgroup generated by generators."""
    k = len(moduli)
    if k == 0:
        return True
    M = _columns(generators, k).hstack(_relations(moduli)) if generators else _relations(moduli)
    return solve(M, list(vector)) is not None


def kernel_of_map(matrix: IntMatrix, source_moduli: Sequence[int], target_moduli: Sequence[int]) -> list[Vector]:
    """
    Generators of the kernel of a homomorphism between finite abelian groups.

    Args:
        matrix: len(target_moduli) x len(source_moduli) integer matrix
        source_moduli: Moduli of the source coordinates
        target_moduli: Moduli of the target coordinates

    Returns:
        Canonical generators (source coordinates)
    """
    s = len(source_moduli)
    t = len(target_moduli)
    if s == 0:
        return []
    if t == 0:
        return span_generators([tuple(1 if i == j else 0 for i in range(s)) for j in range(s)], source_moduli)
    if matrix.shape != (t, s):
        raise ValueError(f"Map matrix has shape {matrix.shape}, expected {(t, s)}")
    K = kernel_basis(matrix.hstack(_relations(target_moduli)))
    return span_generators([col[:s] for col in K.columns()], source_moduli)


def preimage_of_subgroup(
    matrix: IntMatrix,
    source_moduli: Sequence[int],
    target_moduli: Sequence[int],
    subgroup_generators: Sequence[Sequence[int]],
) -> list[Vector]:
    """Generators of {x : matrix·x lies in the subgroup spanned by subgroup_generators}."""
    s = len(source_moduli)
    t = len(target_moduli)
    if s == 0:
        return []
    if t == 0:
        return kernel_of_map(matrix, source_moduli, target_moduli)
    blocks = [matrix]
    if subgroup_generators:
        blocks.append(_columns(subgroup_generators, t))
    blocks.append(_relations(target_moduli))
    K = kernel_basis(blocks[0].hstack(*blocks[1:]))
    return span_generators([col[:s] for col in K.columns()], source_moduli)


def intersect_subgroups(
    generators_a: Sequence[Sequence[int]],
    generators_b: Sequence[Sequence[int]],
    moduli: Sequence[int],
) -> list[Vector]:
    """Generators of the intersection of two subgroups of the same group."""
    k = len(moduli)
    if not generators_a or not generators_b or k == 0:
        return []
    A = _columns(generators_a, k)
    K = kernel_basis(A.hstack(_columns(generators_b, k), _relations(moduli)))
    a = len(generators_a)
    return span_generators([A @ col[:a] for col in K.columns()], moduli)


def elements(moduli: Sequence[int]) -> Iterator[Vector]:
    """Every element of Z/d1 x ... x Z/dk in lexicographic order."""
    return itertools.product(*(range(d) for d in moduli))
