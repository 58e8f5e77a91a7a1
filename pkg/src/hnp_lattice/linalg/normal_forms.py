"""
Hermite and Smith normal forms over the integers.

Both routines are fraction-free. Pivots are chosen by smallest absolute value with
ties broken by lowest row and then lowest column, so a given input always yields the
same decomposition.
"""

import logging
from dataclasses import dataclass

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from .matrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HermiteDecomposition:
    """
    Column-style Hermite normal form H = A·V.

    H is lower echelon: column k has its pivot at row pivot_rows[k], every entry above
    the pivot is zero, the pivot is positive and entries to its left in the same row lie
    in [0, pivot). Columns rank.. of H are zero; V is unimodular.
    """
    H: IntMatrix
    V: IntMatrix
    rank: int
    pivot_rows: tuple[int, ...]


@dataclass(frozen=True)
class SmithDecomposition:
    """
    Smith normal form U·A·V = S.

    S is diagonal with nonnegative entries d1 | d2 | ...; invariant_factors lists the
    nonzero diagonal (ones included). U_inverse is carried so that cokernel
    coordinates can be lifted back without a second inversion.
    """
    S: IntMatrix
    U: IntMatrix
    V: IntMatrix
    invariant_factors: tuple[int, ...]
    U_inverse: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def hermite_decomposition(A: IntMatrix) -> HermiteDecomposition:
    """Compute the column-style Hermite normal form of A with its column transform."""
    m, n = A.shape
    cols = [list(A.column(j)) for j in range(n)]
    trans = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    pivot_rows = []
    k = 0

    for i in range(m):
        if k == n:
            break
        for j in range(k + 1, n):
            b = cols[j][i]
            if b == 0:
                continue
            a = cols[k][i]
            if a == 0:
                cols[k], cols[j] = cols[j], cols[k]
                trans[k], trans[j] = trans[j], trans[k]
                continue
            x, y, g = igcdex(a, b)
            ca, cb = a // g, b // g
            cols[k], cols[j] = _combine(cols[k], cols[j], x, y, -cb, ca)
            trans[k], trans[j] = _combine(trans[k], trans[j], x, y, -cb, ca)

        pivot = cols[k][i]
        if pivot == 0:
            continue
        if pivot < 0:
            cols[k] = [-v for v in cols[k]]
            trans[k] = [-v for v in trans[k]]
            pivot = -pivot
        for j in range(k):
            q = cols[j][i] // pivot
            if q:
                cols[j] = [u - q * v for u, v in zip(cols[j], cols[k])]
                trans[j] = [u - q * v for u, v in zip(trans[j], trans[k])]
        pivot_rows.append(i)
        k += 1

    return HermiteDecomposition(
        H=IntMatrix.from_columns(cols, m),
        V=IntMatrix.from_columns(trans, n),
        rank=k,
        pivot_rows=tuple(pivot_rows),
    )


def hnf(A: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form; the column span of A is preserved."""
    return hermite_decomposition(A).H


def _combine(u, v, a, b, c, d):
    # (u, v) <- (a*u + b*v, c*u + d*v); ad - bc = 1 for every caller
    return [a * p + b * q for p, q in zip(u, v)], [c * p + d * q for p, q in zip(u, v)]


class _SmithWorkspace:
    """Mutable state for one Smith reduction: M, U, U^-1 and V kept in step."""

    def __init__(self, A: IntMatrix):
        m, n = A.shape
        self.m = m
        self.n = n
        self.M = A.tolist()
        self.U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        self.Uinv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        self.V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_add(self, i: int, t: int, q: int) -> None:
        """row_i += q * row_t"""
        for mat in (self.M, self.U):
            src, dst = mat[t], mat[i]
            for c, v in enumerate(src):
                if v:
                    dst[c] += q * v
        for row in self.Uinv:
            row[t] -= q * row[i]

    def row_swap(self, a: int, b: int) -> None:
        for mat in (self.M, self.U):
            mat[a], mat[b] = mat[b], mat[a]
        for row in self.Uinv:
            row[a], row[b] = row[b], row[a]

    def row_negate(self, a: int) -> None:
        for mat in (self.M, self.U):
            mat[a] = [-v for v in mat[a]]
        for row in self.Uinv:
            row[a] = -row[a]

    def col_add(self, j: int, t: int, q: int) -> None:
        """col_j += q * col_t"""
        for mat in (self.M, self.V):
            for row in mat:
                if row[t]:
                    row[j] += q * row[t]

    def col_swap(self, a: int, b: int) -> None:
        for mat in (self.M, self.V):
            for row in mat:
                row[a], row[b] = row[b], row[a]

    def smallest_entry(self, t: int):
        best = None
        for i in range(t, self.m):
            for j in range(t, self.n):
                v = self.M[i][j]
                if v and (best is None or (abs(v), i, j) < best):
                    best = (abs(v), i, j)
        return best

    def reduce_pivot(self, t: int) -> None:
        M = self.M
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, self.m):
                if M[i][t]:
                    self.row_add(i, t, -(M[i][t] // p))
                    dirty = dirty or bool(M[i][t])
            for j in range(t + 1, self.n):
                if M[t][j]:
                    self.col_add(j, t, -(M[t][j] // p))
                    dirty = dirty or bool(M[t][j])
            if dirty:
                candidates = [(abs(M[i][t]), i, t) for i in range(t + 1, self.m) if M[i][t]]
                candidates += [(abs(M[t][j]), t, j) for j in range(t + 1, self.n) if M[t][j]]
                _, i, j = min(candidates)
                if j == t:
                    self.row_swap(t, i)
                else:
                    self.col_swap(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, self.m) for j in range(t + 1, self.n) if M[i][j] % p),
                None,
            )
            if bad is not None:
                self.row_add(t, bad, 1)
                continue
            break
        if M[t][t] < 0:
            self.row_negate(t)


def snf(A: IntMatrix) -> SmithDecomposition:
    """
    Smith normal form with unimodular transforms.

    Args:
        A: Any integer matrix

    Returns:
        SmithDecomposition with U·A·V = S
    """
    work = _SmithWorkspace(A)
    for t in range(min(work.m, work.n)):
        best = work.smallest_entry(t)
        if best is None:
            break
        _, i, j = best
        if i != t:
            work.row_swap(t, i)
        if j != t:
            work.col_swap(t, j)
        work.reduce_pivot(t)

    S = IntMatrix(work.M, ncols=work.n)
    factors = tuple(S[i, i] for i in range(min(work.m, work.n)) if S[i, i])
    logger.debug(f"snf {A.shape}: invariant factors {factors}")
    return SmithDecomposition(
        S=S,
        U=IntMatrix(work.U, ncols=work.m),
        V=IntMatrix(work.V, ncols=work.n),
        invariant_factors=factors,
        U_inverse=IntMatrix(work.Uinv, ncols=work.m),
    )
