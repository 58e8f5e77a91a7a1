"""
Normalized bar cochains of a finite group with values in a G-lattice.

An n-cochain is stored as one integer vector: tuples (g1, ..., gn) of non-identity
elements in lexicographic order (tuple-major), lattice coordinates minor, so entry
tuple_index * rank + k is coordinate k of f(g1, ..., gn). Normalized cochains vanish
whenever an argument is the identity, so those tuples are not stored.
"""

import itertools
import logging
from collections.abc import Sequence

from ..constants import DEFAULT_MAX_ORDER
from ..exceptions import OrderCapExceededError
from ..groups import FiniteGroup, Subgroup
from ..lattices import GLattice
from ..linalg import SparseMatrix, Vector

logger = logging.getLogger(__name__)

SUPPORTED_DEGREES = (0, 1, 2)


def cochain_dimension(order: int, rank: int, n: int) -> int:
    """Number of integer coordinates of a normalized n-cochain."""
    if n < 0:
        raise ValueError(f"Cochain degree must be nonnegative, got {n}")
    return (order - 1) ** n * rank


def tuple_index(args: Sequence[int], order: int) -> int:
    """Position of a tuple of non-identity elements among all such tuples of its length."""
    base = order - 1
    index = 0
    for a in args:
        index = index * base + (a - 1)
    return index


def cochain_tuples(order: int, n: int) -> itertools.product:
    """All n-tuples of non-identity elements in storage order."""
    return itertools.product(range(1, order), repeat=n)


def check_order(G: FiniteGroup, max_order: int | None) -> None:
    """
    Raises:
        OrderCapExceededError: If |G| exceeds max_order (None disables the cap)
    """
    if max_order is not None and G.order > max_order:
        raise OrderCapExceededError(G.order, max_order, what="bar resolution group")


def _add_block(D: SparseMatrix, row_t: int, col_t: int, rank: int, sign: int) -> None:
    for k in range(rank):
        D.add(row_t * rank + k, col_t * rank + k, sign)


def coboundary(G: FiniteGroup, M: GLattice, n: int, max_order: int | None = DEFAULT_MAX_ORDER) -> SparseMatrix:
    """
    Matrix of d^n from normalized n-cochains to normalized (n+1)-cochains.

    (df)(g1..g{n+1}) = g1·f(g2..) + sum_i (-1)^i f(..gi·g{i+1}..) + (-1)^(n+1) f(g1..gn);
    a middle term whose merged argument is the identity vanishes.

    Args:
        G: The acting group
        M: A lattice over G
        n: Degree, one of 0, 1, 2
        max_order: Largest |G| accepted, None for no cap

    Raises:
        OrderCapExceededError: If |G| exceeds max_order
    """
    if n not in SUPPORTED_DEGREES:
        raise ValueError(f"Coboundary degree must be one of {SUPPORTED_DEGREES}, got {n}")
    if not M.group.same_as(G):
        raise ValueError("Lattice is defined over a different group")
    check_order(G, max_order)

    N, r = G.order, M.rank
    D = SparseMatrix(cochain_dimension(N, r, n + 1), cochain_dimension(N, r, n))
    if r == 0:
        return D

    for row_t, args in enumerate(cochain_tuples(N, n + 1)):
        col_t = tuple_index(args[1:], N)
        for k, row in enumerate(M.action[args[0]].rows()):
            for j, a in enumerate(row):
                if a:
                    D.add(row_t * r + k, col_t * r + j, a)
        for i in range(1, n + 1):
            merged = G.mul(args[i - 1], args[i])
            if merged == 0:
                continue
            _add_block(D, row_t, tuple_index(args[:i - 1] + (merged,) + args[i + 1:], N), r, (-1) ** i)
        _add_block(D, row_t, tuple_index(args[:n], N), r, (-1) ** (n + 1))

    logger.debug(f"d^{n} for |G|={N}, rank {r}: shape {D.shape}, {D.nnz} nonzeros")
    return D


def restrict_cochain(D: Subgroup, rank: int, n: int, cochain: Sequence[int]) -> Vector:
    """
    Restrict a normalized n-cochain on the parent group to D.

    The result is indexed by D.as_group(), whose element i is parent element D.members[i].
    """
    N = D.parent.order
    expected = cochain_dimension(N, rank, n)
    if len(cochain) != expected:
        raise ValueError(f"Cochain has {len(cochain)} coordinates, expected {expected}")
    values: list[int] = []
    for args in cochain_tuples(D.order, n):
        t = tuple_index([D.members[a] for a in args], N)
        values.extend(cochain[t * rank:(t + 1) * rank])
    return tuple(values)


def apply_to_values(
    matrix_rows: Sequence[Sequence[int]], source_rank: int, count: int, cochain: Sequence[int]
) -> Vector:
    """Post-compose each of the count cochain values with a lattice map given by its rows."""
    values: list[int] = []
    for t in range(count):
        block = cochain[t * source_rank:(t + 1) * source_rank]
        values.extend(sum(a * b for a, b in zip(row, block)) for row in matrix_rows)
    return tuple(values)
