"""
Cokernels of integer matrices as finite abelian groups plus free rank.

Small matrices go through the dense Smith form. Larger (sparse) ones are first
reduced by eliminating unit pivots, which is where bar-resolution coboundaries spend
almost all of their rank; whatever remains is reduced Smith-style in place. Only row
operations change cokernel coordinates, so those are logged and replayed to project a
vector and run backwards to lift one.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Union

from ..constants import DENSE_THRESHOLD
from .matrix import IntMatrix, SparseMatrix, Vector
from .normal_forms import snf

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """
    Finite abelian group given by invariant factors d1 | d2 | ... (each at least 2).

    The empty tuple is the trivial group.
    """
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", factors)
        for d in factors:
            if d < 2:
                raise ValueError(f"Invariant factors must be at least 2, got {factors}")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError(f"Invariant factors must form a divisibility chain, got {factors}")

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int]) -> "FiniteAbelianGroup":
        """Normalise a product of cyclic groups Z/n1 x Z/n2 x ... to invariant factors."""
        if any(n < 1 for n in orders):
            raise ValueError(f"Cyclic orders must be positive, got {list(orders)}")
        dec = snf(IntMatrix.diagonal(list(orders))) if orders else None
        factors = dec.invariant_factors if dec else ()
        return cls(tuple(d for d in factors if d > 1))

    @property
    def order(self) -> int:
        result = 1
        for d in self.invariant_factors:
            result *= d
        return result

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def to_list(self) -> list[int]:
        return list(self.invariant_factors)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "1"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


class _DenseCoordinates:
    """Cokernel coordinates from a full Smith decomposition: z = U·x."""

    def __init__(self, matrix: IntMatrix):
        dec = snf(matrix)
        self.U = dec.U
        self.U_inverse = dec.U_inverse
        factors = dec.invariant_factors
        m = matrix.nrows
        self.torsion = [(i, d) for i, d in enumerate(factors) if d > 1]
        self.free = list(range(len(factors), m))

    def project(self, x: Sequence[int]) -> tuple[Vector, Vector]:
        z = self.U @ x
        return tuple(z[i] % d for i, d in self.torsion), tuple(z[i] for i in self.free)

    def lift(self, torsion: Sequence[int], free: Sequence[int]) -> Vector:
        z = [0] * self.U.nrows
        for (i, _), c in zip(self.torsion, torsion):
            z[i] = c
        for i, c in zip(self.free, free):
            z[i] = c
        return self.U_inverse @ z


class _EliminationCoordinates:
    """
    Cokernel coordinates from logged sparse row operations.

    Each logged op (t, p, mult) means x[t] += mult * x[p]. After all ops the matrix is
    a generalised diagonal: pivot rows carry one entry +-d, every other row is zero.
    """

    def __init__(self, matrix: SparseMatrix):
        self.m = matrix.nrows
        self.rows: dict[int, dict[int, int]] = {i: dict(r) for i, r in matrix.rows.items() if r}
        self.cols: dict[int, set[int]] = {}
        for i, row in self.rows.items():
            for j in row:
                self.cols.setdefault(j, set()).add(i)
        self.ops: list[tuple[int, int, int]] = []
        self.pivots: list[tuple[int, int, int]] = []  # (row, factor, sign)

        units = self._eliminate_units()
        self._eliminate_general()
        logger.debug(
            f"cokernel elimination {matrix.shape}: {units} unit pivots, "
            f"{len(self.pivots) - units} general pivots, {len(self.ops)} row ops"
        )

        pivot_rows = {p for p, _, _ in self.pivots}
        self.torsion = [(p, d, s) for p, d, s in self.pivots if d > 1]
        self.free = [i for i in range(self.m) if i not in pivot_rows]
        del self.rows, self.cols

    # Matrix updates

    def _add_row(self, t: int, p: int, mult: int) -> None:
        rows, cols = self.rows, self.cols
        target = rows.setdefault(t, {})
        for j, v in rows[p].items():
            value = target.get(j, 0) + mult * v
            if value:
                if j not in target:
                    cols.setdefault(j, set()).add(t)
                target[j] = value
            elif j in target:
                del target[j]
                self._discard(j, t)
        if not target:
            del rows[t]
        self.ops.append((t, p, mult))

    def _add_col(self, j: int, c: int, mult: int) -> None:
        rows, cols = self.rows, self.cols
        for i in list(cols.get(c, ())):
            row = rows[i]
            value = row.get(j, 0) + mult * row[c]
            if value:
                if j not in row:
                    cols.setdefault(j, set()).add(i)
                row[j] = value
            elif j in row:
                del row[j]
                self._discard(j, i)

    def _discard(self, j: int, i: int) -> None:
        members = self.cols[j]
        members.discard(i)
        if not members:
            del self.cols[j]

    def _drop(self, p: int, c: int, value: int) -> None:
        for j in list(self.rows[p]):
            self._discard(j, p)
        del self.rows[p]
        self.cols.pop(c, None)
        self.pivots.append((p, abs(value), 1 if value > 0 else -1))

    # Elimination phases

    def _eliminate_units(self) -> int:
        count = 0
        progress = True
        while progress:
            progress = False
            for c in sorted(self.cols):
                members = self.cols.get(c)
                if not members:
                    continue
                candidates = [i for i in members if abs(self.rows[i][c]) == 1]
                if not candidates:
                    continue
                p = min(candidates, key=lambda i: (len(self.rows[i]), i))
                u = self.rows[p][c]
                for t in sorted(members - {p}):
                    self._add_row(t, p, -self.rows[t][c] * u)
                self._drop(p, c, u)
                count += 1
                progress = True
        return count

    def _eliminate_general(self) -> None:
        rows, cols = self.rows, self.cols
        while rows:
            _, p, c = min((abs(v), i, j) for i, row in rows.items() for j, v in row.items())
            while True:
                v = rows[p][c]
                dirty = False
                for t in sorted(cols[c] - {p}):
                    self._add_row(t, p, -(rows[t][c] // v))
                    dirty = dirty or bool(rows.get(t, {}).get(c))
                for j in sorted(set(rows[p]) - {c}):
                    self._add_col(j, c, -(rows[p][j] // v))
                    dirty = dirty or bool(rows[p].get(j))
                if dirty:
                    candidates = [(abs(rows[t][c]), t, c) for t in cols[c] if t != p]
                    candidates += [(abs(w), p, j) for j, w in rows[p].items() if j != c]
                    _, p, c = min(candidates)
                    continue
                bad = next(
                    (i for i in sorted(rows) if i != p and any(w % v for w in rows[i].values())),
                    None,
                )
                if bad is not None:
                    self._add_row(p, bad, 1)
                    continue
                break
            self._drop(p, c, rows[p][c])

    # Coordinates

    def project(self, x: Sequence[int]) -> tuple[Vector, Vector]:
        y = list(x)
        for t, p, mult in self.ops:
            if y[p]:
                y[t] += mult * y[p]
        return tuple((s * y[p]) % d for p, d, s in self.torsion), tuple(y[i] for i in self.free)

    def lift(self, torsion: Sequence[int], free: Sequence[int]) -> Vector:
        y = [0] * self.m
        for (p, _, s), c in zip(self.torsion, torsion):
            y[p] = s * c
        for i, c in zip(self.free, free):
            y[i] = c
        for t, p, mult in reversed(self.ops):
            if y[p]:
                y[t] -= mult * y[p]
        return tuple(y)


class Cokernel:
    """
    Z^ambient_rank / (column span of the image matrix).

    Attributes:
        ambient_rank: Rank of the ambient free module
        structure: Finite part as a FiniteAbelianGroup
        free_rank: Rank of the free part

    Unpacks as (structure, project, lift).
    """

    def __init__(self, ambient_rank: int, image_columns: Union[IntMatrix, SparseMatrix]):
        if image_columns.nrows != ambient_rank:
            raise ValueError(f"Image matrix has {image_columns.nrows} rows, expected {ambient_rank}")
        self.ambient_rank = ambient_rank
        dense = (
            isinstance(image_columns, IntMatrix)
            and image_columns.nrows <= DENSE_THRESHOLD
            and image_columns.ncols <= DENSE_THRESHOLD
        )
        if dense:
            self._coords: Union[_DenseCoordinates, _EliminationCoordinates] = _DenseCoordinates(image_columns)
        else:
            sparse = image_columns if isinstance(image_columns, SparseMatrix) else image_columns.to_sparse()
            self._coords = _EliminationCoordinates(sparse)
        self.structure = FiniteAbelianGroup(tuple(t[1] for t in self._coords.torsion))
        self.free_rank = len(self._coords.free)

    def project(self, vector: Sequence[int]) -> Vector:
        """Torsion coordinates of a vector's class, each reduced mod its factor."""
        self._check_length(vector)
        return self._coords.project(vector)[0]

    def free_coordinates(self, vector: Sequence[int]) -> Vector:
        self._check_length(vector)
        return self._coords.project(vector)[1]

    def lift(self, coords: Sequence[int], free: Sequence[int] | None = None) -> Vector:
        """An ambient vector whose class has the given coordinates."""
        if len(coords) != len(self.structure.invariant_factors):
            raise ValueError(f"Expected {len(self.structure.invariant_factors)} coordinates, got {len(coords)}")
        return self._coords.lift(coords, free if free is not None else [0] * self.free_rank)

    def contains(self, vector: Sequence[int]) -> bool:
        """Whether the vector lies in the image."""
        self._check_length(vector)
        torsion, free = self._coords.project(vector)
        return not any(torsion) and not any(free)

    def in_saturation(self, vector: Sequence[int]) -> bool:
        """Whether some nonzero multiple of the vector lies in the image."""
        return not any(self.free_coordinates(vector))

    def _check_length(self, vector: Sequence[int]) -> None:
        if len(vector) != self.ambient_rank:
            raise ValueError(f"Vector has length {len(vector)}, expected {self.ambient_rank}")

    def __iter__(self):
        return iter((self.structure, self.project, self.lift))

    def __repr__(self) -> str:
        return f"Cokernel(ambient_rank={self.ambient_rank}, structure={self.structure}, free_rank={self.free_rank})"


def cokernel(ambient_rank: int, image_columns: Union[IntMatrix, SparseMatrix]) -> Cokernel:
    """Cokernel of the map whose image is spanned by the given columns."""
    return Cokernel(ambient_rank, image_columns)


def invariant_factors(A: Union[IntMatrix, SparseMatrix]) -> tuple[int, ...]:
    """
    Nonzero Smith invariant factors of A, ones included.

    Small dense matrices use snf; sparse ones, and dense ones above DENSE_THRESHOLD,
    use the pivot values of the sparse elimination, which already form a
    divisibility chain.
    """
    if isinstance(A, IntMatrix) and A.nrows <= DENSE_THRESHOLD and A.ncols <= DENSE_THRESHOLD:
        return snf(A).invariant_factors
    sparse = A if isinstance(A, SparseMatrix) else A.to_sparse()
    return tuple(sorted(d for _, d, _ in _EliminationCoordinates(sparse).pivots))
