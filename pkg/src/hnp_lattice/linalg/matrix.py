"""
Integer matrices.

IntMatrix is the dense immutable carrier used by every module. SparseMatrix is the
row-dictionary form the coboundary builder produces; bar-resolution matrices are
overwhelmingly zero and are only densified in small cases.
"""

from collections.abc import Iterable, Sequence
from typing import Union

import sympy

Vector = tuple[int, ...]


class IntMatrix:
    """
    Immutable integer matrix in row-major order.

    Entries are Python ints, so all arithmetic is exact.
    """

    __slots__ = ("_rows", "_nrows", "_ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        data = tuple(tuple(int(v) for v in row) for row in rows)
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise ValueError(f"Row {i} has {len(row)} entries, expected {ncols}")
        self._rows = data
        self._nrows = len(data)
        self._ncols = ncols

    # Construction helpers

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(((0,) * ncols for _ in range(nrows)), ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls((tuple(1 if i == j else 0 for j in range(n)) for i in range(n)), ncols=n)

    @classmethod
    def diagonal(cls, values: Sequence[int], nrows: int | None = None, ncols: int | None = None) -> "IntMatrix":
        nrows = len(values) if nrows is None else nrows
        ncols = len(values) if ncols is None else ncols
        rows = [[0] * ncols for _ in range(nrows)]
        for i, v in enumerate(values):
            rows[i][i] = v
        return cls(rows, ncols=ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> "IntMatrix":
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise ValueError(f"Column {j} has {len(col)} entries, expected {nrows}")
        return cls((tuple(col[i] for col in columns) for i in range(nrows)), ncols=len(columns))

    # Shape and access

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._nrows, self._ncols)

    @property
    def entries(self) -> list[int]:
        """Entries in row-major order."""
        return [v for row in self._rows for v in row]

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self._rows)

    def rows(self) -> tuple[Vector, ...]:
        return self._rows

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self._ncols)]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._rows]

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self._rows[i][j]

    # Arithmetic

    def __matmul__(self, other: Union["IntMatrix", Sequence[int]]) -> Union["IntMatrix", Vector]:
        if isinstance(other, IntMatrix):
            if self._ncols != other._nrows:
                raise ValueError(f"Shape mismatch: {self.shape} @ {other.shape}")
            other_cols = other.columns()
            return IntMatrix(
                (tuple(_dot(row, col) for col in other_cols) for row in self._rows),
                ncols=other._ncols,
            )
        if len(other) != self._ncols:
            raise ValueError(f"Shape mismatch: {self.shape} @ vector of length {len(other)}")
        return tuple(_dot(row, other) for row in self._rows)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            (tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)), ncols=self._ncols
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            (tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)), ncols=self._ncols
        )

    def __neg__(self) -> "IntMatrix":
        return self.scale(-1)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix((tuple(k * v for v in row) for row in self._rows), ncols=self._ncols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.columns(), ncols=self._nrows)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def submatrix(self, row_indices: Sequence[int], col_indices: Sequence[int]) -> "IntMatrix":
        return IntMatrix(
            (tuple(self._rows[i][j] for j in col_indices) for i in row_indices), ncols=len(col_indices)
        )

    def hstack(self, *others: "IntMatrix") -> "IntMatrix":
        for other in others:
            if other._nrows != self._nrows:
                raise ValueError(f"hstack row mismatch: {self._nrows} vs {other._nrows}")
        ncols = self._ncols + sum(o._ncols for o in others)
        return IntMatrix(
            (self._rows[i] + sum((o._rows[i] for o in others), ()) for i in range(self._nrows)), ncols=ncols
        )

    def vstack(self, *others: "IntMatrix") -> "IntMatrix":
        for other in others:
            if other._ncols != self._ncols:
                raise ValueError(f"vstack column mismatch: {self._ncols} vs {other._ncols}")
        rows = list(self._rows)
        for other in others:
            rows.extend(other._rows)
        return IntMatrix(rows, ncols=self._ncols)

    @classmethod
    def block_diagonal(cls, blocks: Sequence["IntMatrix"]) -> "IntMatrix":
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        rows = []
        offset = 0
        for block in blocks:
            for row in block.rows():
                rows.append((0,) * offset + row + (0,) * (ncols - offset - block.ncols))
            offset += block.ncols
        return cls(rows, ncols=ncols)

    # Predicates

    def is_zero(self) -> bool:
        return all(v == 0 for row in self._rows for v in row)

    def is_identity(self) -> bool:
        return self._nrows == self._ncols and all(
            v == (1 if i == j else 0) for i, row in enumerate(self._rows) for j, v in enumerate(row)
        )

    def determinant(self) -> int:
        """Exact determinant of a square matrix."""
        if self._nrows != self._ncols:
            raise ValueError(f"Determinant of non-square matrix {self.shape}")
        if self._nrows == 0:
            return 1
        return int(sympy.Matrix(self.tolist()).det(method="bareiss"))

    def is_unimodular(self) -> bool:
        return self._nrows == self._ncols and self.determinant() in (1, -1)

    def to_sparse(self) -> "SparseMatrix":
        return SparseMatrix.from_dense(self)

    def _check_same_shape(self, other: "IntMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch: {self.shape} vs {other.shape}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._nrows, self._ncols, self._rows))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r}, ncols={self._ncols})"


class SparseMatrix:
    """
    Integer matrix stored as {row: {col: value}} with zero entries omitted.

    Mutable while being built; treat as read-only once handed to linalg routines.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: dict[int, dict[int, int]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, int]] = rows if rows is not None else {}

    @classmethod
    def from_dense(cls, matrix: IntMatrix) -> "SparseMatrix":
        rows = {}
        for i, row in enumerate(matrix.rows()):
            entries = {j: v for j, v in enumerate(row) if v}
            if entries:
                rows[i] = entries
        return cls(matrix.nrows, matrix.ncols, rows)

    def add(self, i: int, j: int, value: int) -> None:
        """Accumulate value into entry (i, j), dropping it if it cancels to zero."""
        if not value:
            return
        row = self.rows.setdefault(i, {})
        total = row.get(j, 0) + value
        if total:
            row[j] = total
        else:
            del row[j]
            if not row:
                del self.rows[i]

    def get(self, i: int, j: int) -> int:
        return self.rows.get(i, {}).get(j, 0)

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def to_dense(self) -> IntMatrix:
        dense = [[0] * self.ncols for _ in range(self.nrows)]
        for i, row in self.rows.items():
            for j, v in row.items():
                dense[i][j] = v
        return IntMatrix(dense, ncols=self.ncols)

    def __matmul__(self, other: Union["SparseMatrix", Sequence[int]]) -> Union["SparseMatrix", Vector]:
        if isinstance(other, SparseMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"Shape mismatch: {self.shape} @ {other.shape}")
            product = SparseMatrix(self.nrows, other.ncols)
            for i, row in self.rows.items():
                for k, a in row.items():
                    for j, b in other.rows.get(k, {}).items():
                        product.add(i, j, a * b)
            return product
        if len(other) != self.ncols:
            raise ValueError(f"Shape mismatch: {self.shape} @ vector of length {len(other)}")
        out = [0] * self.nrows
        for i, row in self.rows.items():
            out[i] = sum(v * other[j] for j, v in row.items())
        return tuple(out)

    def is_zero(self) -> bool:
        return not self.rows

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def as_vector(values: Iterable[int]) -> Vector:
    return tuple(int(v) for v in values)
