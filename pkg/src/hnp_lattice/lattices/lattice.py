"""
Integral G-lattices and equivariant maps.

A GLattice stores one unimodular matrix per group element (columns are images of the
basis vectors), so cocycle evaluation never has to multiply generators out.
"""

import logging
from collections.abc import Sequence
from typing import Any

from ..constants import EXHAUSTIVE_ACTION_CHECK_ORDER
from ..exceptions import GroupMismatchError, HNPLatticeError, NotStableError, QuotientNotFreeError
from ..groups import CosetSpace, FiniteGroup, Subgroup
from ..linalg import IntMatrix, kernel_basis, snf

logger = logging.getLogger(__name__)


class GLattice:
    """
    A free Z-module of finite rank with a G-action by integer matrices.

    Validated on construction: action(identity) = I and action(g)·action(h) = action(gh),
    exhaustively for small groups and on generators otherwise. The law forces every
    action matrix to be invertible over Z.
    """

    def __init__(self, group: FiniteGroup, action: Sequence[IntMatrix], name: str | None = None, validate: bool = True):
        if len(action) != group.order:
            raise ValueError(f"Expected {group.order} action matrices, got {len(action)}")
        rank = action[0].nrows
        for g, A in enumerate(action):
            if A.shape != (rank, rank):
                raise ValueError(f"Action of element {g} has shape {A.shape}, expected {(rank, rank)}")
        self.group = group
        self.rank = rank
        self.action = tuple(action)
        self.name = name or f"lattice(rank={rank})"
        if validate:
            self._check_action()

    def act(self, g: int) -> IntMatrix:
        return self.action[g]

    def _check_action(self) -> None:
        G = self.group
        if not self.action[0].is_identity():
            raise HNPLatticeError(f"{self.name}: identity does not act trivially")
        left = G.elements if G.order <= EXHAUSTIVE_ACTION_CHECK_ORDER else G.generators
        for g in left:
            for h in G.elements:
                if self.action[g] @ self.action[h] != self.action[G.mul(g, h)]:
                    raise HNPLatticeError(f"{self.name}: action is not a homomorphism at ({g}, {h})")

    def to_dict(self) -> dict[str, Any]:
        """Rank and per-element action matrices, keyed by element label."""
        return {
            "name": self.name,
            "group": self.group.name,
            "rank": self.rank,
            "action": {self.group.label(g): A.tolist() for g, A in enumerate(self.action)},
        }

    def __repr__(self) -> str:
        return f"GLattice(name={self.name!r}, rank={self.rank}, group={self.group.name!r})"


class LatticeMap:
    """
    A G-equivariant map source -> target (matrix is target.rank x source.rank).

    Raises:
        GroupMismatchError: Source and target live over different groups
        NotStableError: The matrix does not commute with the action
    """

    def __init__(self, source: GLattice, target: GLattice, matrix: IntMatrix, validate: bool = True):
        if not source.group.same_as(target.group):
            raise GroupMismatchError("Lattice map between lattices over different groups")
        if matrix.shape != (target.rank, source.rank):
            raise ValueError(f"Map matrix has shape {matrix.shape}, expected {(target.rank, source.rank)}")
        self.source = source
        self.target = target
        self.matrix = matrix
        if validate:
            for g in source.group.generators:
                if target.action[g] @ matrix != matrix @ source.action[g]:
                    raise NotStableError(f"Map {source.name} -> {target.name} is not equivariant at element {g}")

    def __matmul__(self, other: "LatticeMap") -> "LatticeMap":
        return LatticeMap(other.source, self.target, self.matrix @ other.matrix, validate=False)

    def __repr__(self) -> str:
        return f"LatticeMap({self.source.name} -> {self.target.name})"


def trivial_lattice(G: FiniteGroup, rank: int = 1) -> GLattice:
    if rank < 0:
        raise ValueError(f"Rank must be nonnegative, got {rank}")
    identity = IntMatrix.identity(rank)
    return GLattice(G, [identity] * G.order, name="Z" if rank == 1 else f"Z^{rank}", validate=False)


def permutation_lattice(cs: CosetSpace) -> GLattice:
    """Z[G/H]: basis e_c per coset, g·e_c = e_(g·c)."""
    n = cs.size
    action = []
    for g in cs.parent.elements:
        rows = [[0] * n for _ in range(n)]
        for c in range(n):
            rows[cs.act(g, c)][c] = 1
        action.append(IntMatrix(rows, ncols=n))
    name = f"Z[G/H{cs.stabilizer.order}]"
    return GLattice(cs.parent, action, name=name, validate=False)


def direct_sum(lattices: Sequence[GLattice], group: FiniteGroup | None = None) -> GLattice:
    """
    Block-diagonal sum; an empty sum needs the group passed explicitly.

    Raises:
        GroupMismatchError: Summands over different groups
    """
    if not lattices:
        if group is None:
            raise ValueError("direct_sum of no lattices needs the group")
        return trivial_lattice(group, 0)
    G = lattices[0].group
    for M in lattices[1:]:
        if not M.group.same_as(G):
            raise GroupMismatchError("direct_sum of lattices over different groups")
    if group is not None and not group.same_as(G):
        raise GroupMismatchError("direct_sum group does not match its summands")
    action = [IntMatrix.block_diagonal([M.action[g] for M in lattices]) for g in G.elements]
    name = " + ".join(M.name for M in lattices)
    return GLattice(G, action, name=name, validate=False)


def fixed_sublattice(M: GLattice) -> IntMatrix:
    """Saturated basis (as columns) of {x : g·x = x for all g}."""
    if M.rank == 0:
        return IntMatrix.zeros(0, 0)
    identity = IntMatrix.identity(M.rank)
    gens = M.group.generators
    if not gens:
        return identity
    stacked = (M.action[gens[0]] - identity).vstack(*(M.action[g] - identity for g in gens[1:]))
    return kernel_basis(stacked)


def restrict_lattice(M: GLattice, D: Subgroup) -> GLattice:
    """M viewed as a D-lattice; element i of D.as_group() acts as parent element D.members[i]."""
    if not D.parent.same_as(M.group):
        raise GroupMismatchError("Restriction to a subgroup of a different group")
    return GLattice(D.as_group(), [M.action[g] for g in D.members], name=f"{M.name}|D{D.order}", validate=False)


class QuotientData:
    """Quotient lattice plus the projection and a Z-linear section of it."""

    def __init__(self, lattice: GLattice, projection: LatticeMap, section: IntMatrix):
        self.lattice = lattice
        self.projection = projection
        self.section = section


def quotient_data(M: GLattice, sub_basis: IntMatrix, name: str | None = None) -> QuotientData:
    """
    Quotient by a G-stable sublattice, with a basis adapted from the Smith form.

    If U·B·V = S with s unit invariant factors, the last rank - s rows of U are the
    quotient coordinates and the induced action is the lower-right block of U·A·U^-1.

    Raises:
        QuotientNotFreeError: The quotient has torsion
        NotStableError: The span of sub_basis is not G-stable
    """
    r = M.rank
    if sub_basis.nrows != r:
        raise ValueError(f"Sublattice basis has {sub_basis.nrows} rows, expected {r}")
    if sub_basis.ncols == 0 or sub_basis.is_zero():
        identity = IntMatrix.identity(r)
        return QuotientData(M, LatticeMap(M, M, identity, validate=False), identity)

    dec = snf(sub_basis)
    torsion = [d for d in dec.invariant_factors if d > 1]
    if torsion:
        raise QuotientNotFreeError(torsion)
    s = len(dec.invariant_factors)
    keep = list(range(s, r))
    U, W = dec.U, dec.U_inverse

    actions = []
    for g, A in enumerate(M.action):
        C = U @ A @ W
        if any(C[i, j] for i in keep for j in range(s)):
            raise NotStableError(f"Sublattice is not stable under element {M.group.label(g)}")
        actions.append(C.submatrix(keep, keep))

    quotient = GLattice(M.group, actions, name=name or f"{M.name}/<{s}>", validate=False)
    projection = LatticeMap(M, quotient, U.submatrix(keep, range(r)), validate=False)
    section = W.submatrix(range(r), keep)
    logger.debug(f"Quotient of rank-{r} lattice by rank-{s} sublattice has rank {len(keep)}")
    return QuotientData(quotient, projection, section)


def quotient_lattice(M: GLattice, sub_basis: IntMatrix) -> tuple[GLattice, LatticeMap]:
    """M / span(sub_basis) with the induced action and the projection map."""
    data = quotient_data(M, sub_basis)
    return data.lattice, data.projection
