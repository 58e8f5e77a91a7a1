"""
Integer kernels and integer solving, both read off the column Hermite form.

Large or sparse inputs to kernel_basis first eliminate unit pivots by column
operations; only the rows and columns left over go through the dense Hermite form.
"""

import logging
from collections.abc import Sequence
from typing import Union

from ..constants import DENSE_THRESHOLD
from .matrix import IntMatrix, SparseMatrix, Vector
from .normal_forms import hermite_decomposition

logger = logging.getLogger(__name__)


def _dense_kernel(A: IntMatrix) -> list[Vector]:
    dec = hermite_decomposition(A)
    return [dec.V.column(j) for j in range(dec.rank, A.ncols)]


def _sparse_kernel(A: SparseMatrix) -> list[Vector]:
    """
    Kernel by unit-pivot column elimination.

    After eliminating pivot (r, c) every other live column is zero in row r, so the
    pivot columns are unit-triangular on the pivot rows and carry no kernel part. The
    kernel is the column transform applied to the kernel of the live columns on the
    remaining rows.
    """
    n = A.ncols
    cols: dict[int, dict[int, int]] = {j: {} for j in range(n)}
    for i, row in A.rows.items():
        for j, v in row.items():
            cols[j][i] = v
    trans: dict[int, dict[int, int]] = {j: {j: 1} for j in range(n)}
    row_members: dict[int, set[int]] = {}
    for j, col in cols.items():
        for i in col:
            row_members.setdefault(i, set()).add(j)

    def axpy(target: dict[int, int], source: dict[int, int], mult: int) -> None:
        for k, v in source.items():
            value = target.get(k, 0) + mult * v
            if value:
                target[k] = value
            else:
                target.pop(k, None)

    live = set(range(n))
    pivot_rows: set[int] = set()
    progress = True
    while progress:
        progress = False
        for r in sorted(row_members):
            if r in pivot_rows:
                continue
            candidates = [j for j in row_members[r] if j in live and abs(cols[j][r]) == 1]
            if not candidates:
                continue
            c = min(candidates, key=lambda j: (len(cols[j]), j))
            u = cols[c][r]
            for j in sorted(row_members[r] - {c}):
                if j not in live:
                    continue
                mult = -cols[j][r] * u
                before = set(cols[j])
                axpy(cols[j], cols[c], mult)
                axpy(trans[j], trans[c], mult)
                for i in before - set(cols[j]):
                    row_members[i].discard(j)
                for i in set(cols[j]) - before:
                    row_members.setdefault(i, set()).add(j)
            live.discard(c)
            pivot_rows.add(r)
            progress = True

    rest_cols = sorted(live)
    rest_rows = sorted({i for j in rest_cols for i in cols[j]} - pivot_rows)
    logger.debug(
        f"kernel elimination {A.shape}: {len(pivot_rows)} unit pivots, "
        f"{len(rest_rows)}x{len(rest_cols)} left for the dense Hermite form"
    )
    if not rest_cols:
        return []
    transform = IntMatrix.from_columns(
        [tuple(trans[j].get(k, 0) for k in range(n)) for j in rest_cols], n
    )
    if not rest_rows:
        return list(transform.columns())
    residual = IntMatrix([[cols[j].get(i, 0) for j in rest_cols] for i in rest_rows], ncols=len(rest_cols))
    return [transform @ v for v in _dense_kernel(residual)]


def kernel_basis(A: Union[IntMatrix, SparseMatrix]) -> IntMatrix:
    """
    Saturated basis of {x : A·x = 0}.

    The columns of the returned (A.ncols x k) matrix form a Z-basis: every integer
    kernel vector is an integer combination of them. Sparse matrices, and dense ones
    above DENSE_THRESHOLD on either side, take the sparse elimination path.
    """
    n = A.ncols
    if isinstance(A, IntMatrix) and A.nrows <= DENSE_THRESHOLD and n <= DENSE_THRESHOLD:
        return IntMatrix.from_columns(_dense_kernel(A), n)
    sparse = A if isinstance(A, SparseMatrix) else A.to_sparse()
    return IntMatrix.from_columns(_sparse_kernel(sparse), n)


def solve(A: IntMatrix, b: Sequence[int]) -> Vector | None:
    """
    Find an integer x with A·x = b.

    Returns:
        One solution, or None when b is not in the integer column span of A
    """
    if len(b) != A.nrows:
        raise ValueError(f"Right-hand side has length {len(b)}, expected {A.nrows}")
    dec = hermite_decomposition(A)
    H = dec.H
    residual = list(b)
    y = [0] * A.ncols
    for k, r in enumerate(dec.pivot_rows):
        value = residual[r]
        if value == 0:
            continue
        pivot = H[r, k]
        if value % pivot:
            return None
        y[k] = value // pivot
        for i in range(r, A.nrows):
            residual[i] -= y[k] * H[i, k]
    if any(residual):
        return None
    return dec.V @ y
