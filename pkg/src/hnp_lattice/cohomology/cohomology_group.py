"""
H^1 and H^2 of a finite group with coefficients in a G-lattice.

H^n for n >= 1 is finite, so ker d^n is the saturation of im d^(n-1) and H^n is the
torsion of coker d^(n-1). A cochain is a cocycle exactly when its free cokernel
coordinates vanish.

Cyclic groups have a shortcut for H^2: with a generator s of order m,

    H^2(D, M) = M^D / N·M,    N = sum of all action matrices,

where the class of a cocycle f has coordinate a = sum_{k=1}^{m-1} f(s^k, s), and the
class of a in M^D is represented by f_a(s^i, s^j) = a if i + j >= m else 0.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from ..constants import DEFAULT_MAX_ORDER
from ..exceptions import NotCyclicError
from ..groups import FiniteGroup
from ..lattices import GLattice, fixed_sublattice
from ..linalg import Cokernel, FiniteAbelianGroup, IntMatrix, Vector, cokernel, solve
from .cochains import coboundary, cochain_dimension, tuple_index

logger = logging.getLogger(__name__)

SUPPORTED_DEGREES = (1, 2)


class _BarCoordinates:
    """Class coordinates from the cokernel of d^(n-1)."""

    method = "bar"

    def __init__(self, coker: Cokernel):
        self.coker = coker

    def coords(self, cochain: Sequence[int]) -> Vector:
        return self.coker.project(cochain)

    def is_cocycle(self, cochain: Sequence[int]) -> bool:
        return self.coker.in_saturation(cochain)


class _CyclicCoordinates:
    """Class coordinates through M^D / N·M for a cyclic group."""

    method = "cyclic"

    def __init__(self, group: FiniteGroup, lattice: GLattice, generator: int, fixed: IntMatrix, coker: Cokernel):
        self.group = group
        self.lattice = lattice
        self.generator = generator
        self.fixed = fixed
        self.coker = coker
        m = group.order
        self.powers = [group.power(generator, k) for k in range(m)]
        # tuple positions of (s^k, s) for k = 1..m-1
        self.sum_positions = [tuple_index((self.powers[k], generator), m) for k in range(1, m)]

    def fixed_point(self, cochain: Sequence[int]) -> Vector:
        r = self.lattice.rank
        a = [0] * r
        for t in self.sum_positions:
            for k in range(r):
                a[k] += cochain[t * r + k]
        return tuple(a)

    def coords(self, cochain: Sequence[int]) -> Vector:
        a = self.fixed_point(cochain)
        y = solve(self.fixed, a)
        if y is None:
            raise ValueError("Cochain is not a cocycle: its norm sum is not a fixed vector")
        return self.coker.project(y)

    def is_cocycle(self, cochain: Sequence[int]) -> bool:
        d2 = coboundary(self.group, self.lattice, 2, max_order=None)
        return (d2 @ cochain) == (0,) * d2.nrows

    def cocycle_for(self, a: Sequence[int]) -> Vector:
        """The cocycle f_a for a fixed vector a."""
        m, r = self.group.order, self.lattice.rank
        values = [0] * cochain_dimension(m, r, 2)
        for i in range(1, m):
            for j in range(m - i, m):
                t = tuple_index((self.powers[i], self.powers[j]), m)
                values[t * r:(t + 1) * r] = a
        return tuple(values)


@dataclass(eq=False)
class CohomologyGroup:
    """
    H^n(G, M) with representative cocycles and a coordinate map.

    Attributes:
        group: The acting group
        lattice: The coefficient lattice
        degree: 1 or 2
        structure: Invariant factors of H^n
        rep_cocycles: One cocycle per invariant factor; coords(rep_cocycles[j]) is the j-th unit vector
        method: "bar" or "cyclic"
    """
    group: FiniteGroup
    lattice: GLattice
    degree: int
    structure: FiniteAbelianGroup
    rep_cocycles: list[Vector]
    _backend: _BarCoordinates | _CyclicCoordinates = field(repr=False)

    @property
    def method(self) -> str:
        return self._backend.method

    @property
    def order(self) -> int:
        return self.structure.order

    @property
    def moduli(self) -> tuple[int, ...]:
        return self.structure.invariant_factors

    @property
    def cochain_dimension(self) -> int:
        return cochain_dimension(self.group.order, self.lattice.rank, self.degree)

    def coords(self, cochain: Sequence[int]) -> Vector:
        """Coordinates of the class of a cocycle, each reduced mod its invariant factor."""
        self._check_length(cochain)
        return self._backend.coords(cochain)

    def is_cocycle(self, cochain: Sequence[int]) -> bool:
        self._check_length(cochain)
        return self._backend.is_cocycle(cochain)

    def is_coboundary(self, cochain: Sequence[int]) -> bool:
        return self.is_cocycle(cochain) and not any(self.coords(cochain))

    def _check_length(self, cochain: Sequence[int]) -> None:
        if len(cochain) != self.cochain_dimension:
            raise ValueError(f"Cochain has {len(cochain)} coordinates, expected {self.cochain_dimension}")

    def __str__(self) -> str:
        return str(self.structure)


def _unit(length: int, j: int) -> list[int]:
    v = [0] * length
    v[j] = 1
    return v


def cohomology(G: FiniteGroup, M: GLattice, n: int, max_order: int | None = DEFAULT_MAX_ORDER) -> CohomologyGroup:
    """
    H^n(G, M) for n = 1, 2 from the normalized bar resolution.

    Raises:
        OrderCapExceededError: If |G| exceeds max_order
    """
    if n not in SUPPORTED_DEGREES:
        raise ValueError(f"Cohomology degree must be one of {SUPPORTED_DEGREES}, got {n}")
    d = coboundary(G, M, n - 1, max_order=max_order)
    coker = cokernel(d.nrows, d)
    structure = coker.structure
    k = len(structure.invariant_factors)
    reps = [coker.lift(_unit(k, j)) for j in range(k)]
    logger.debug(f"H^{n}({G.name}, {M.name}) = {structure} from d^{n - 1} of shape {d.shape}")
    return CohomologyGroup(G, M, n, structure, reps, _BarCoordinates(coker))


def cyclic_generator(G: FiniteGroup) -> int:
    """
    Smallest-index element generating G.

    Raises:
        NotCyclicError: If G is not cyclic
    """
    for g in G.elements:
        if G.element_order(g) == G.order:
            return g
    raise NotCyclicError(f"Group {G.name} of order {G.order} is not cyclic")


def cyclic_h2(D: FiniteGroup, M: GLattice) -> CohomologyGroup:
    """
    H^2 of a cyclic group as M^D / N·M, with genuine bar 2-cocycles as representatives.

    Raises:
        NotCyclicError: If D is not cyclic
    """
    if not M.group.same_as(D):
        raise ValueError("Lattice is defined over a different group")
    generator = cyclic_generator(D)
    r = M.rank
    fixed = fixed_sublattice(M) if r else IntMatrix.zeros(0, 0)
    f = fixed.ncols

    norm = IntMatrix.zeros(r, r)
    for A in M.action:
        norm = norm + A
    norm_columns = []
    for col in norm.columns():
        y = solve(fixed, col)
        if y is None:
            raise ArithmeticError("Norm image is not inside the fixed sublattice")
        norm_columns.append(y)
    coker = cokernel(f, IntMatrix.from_columns(norm_columns, f))
    if coker.free_rank:
        raise ArithmeticError(f"M^D / N·M reported free rank {coker.free_rank}")

    backend = _CyclicCoordinates(D, M, generator, fixed, coker)
    structure = coker.structure
    k = len(structure.invariant_factors)
    reps = [backend.cocycle_for(fixed @ coker.lift(_unit(k, j))) for j in range(k)]
    logger.debug(f"H^2 of cyclic group of order {D.order} on {M.name}: {structure}")
    return CohomologyGroup(D, M, 2, structure, reps, backend)
