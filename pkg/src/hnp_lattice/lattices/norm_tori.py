"""
Character lattices of the norm-one tori attached to a family of stabilizers.

For stabilizers G1, ..., Gn with coset spaces Si = G/Gi and norm elements di:

    HNP lattice   L1 = (+)_i Z[Si] / <di>
    PHNP lattice  L  = (+)_i Z[Si] / <d1 - di : i >= 2>

and 0 -> Z -> L -> L1 -> 0 is exact, with 1 mapping to the class of (d1, 0, ..., 0).
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..exceptions import ExactnessError
from ..groups import FiniteGroup, Subgroup, coset_space
from ..linalg import IntMatrix, cokernel, kernel_basis, solve
from .lattice import GLattice, LatticeMap, QuotientData, direct_sum, permutation_lattice, quotient_data, trivial_lattice

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormOneTori:
    """All lattices and maps built for one stabilizer family."""
    permutation_lattices: tuple[GLattice, ...]
    summands: tuple[GLattice, ...]
    hnp: GLattice
    phnp: GLattice
    incl: LatticeMap
    proj: LatticeMap


def _norm_element(size: int) -> tuple[int, ...]:
    return (1,) * size


def _summands(G: FiniteGroup, stabilizers: Sequence[Subgroup]) -> tuple[list[GLattice], list[QuotientData]]:
    """Permutation lattices Z[Si] and the quotients Z[Si]/<di>."""
    perms = [permutation_lattice(coset_space(G, H)) for H in stabilizers]
    data = [
        quotient_data(P, IntMatrix.from_columns([_norm_element(P.rank)], P.rank), name=f"Z[S{i + 1}]/<d{i + 1}>")
        for i, P in enumerate(perms)
    ]
    return perms, data


def build_norm_tori(G: FiniteGroup, stabilizers: Sequence[Subgroup], check: bool = True) -> NormOneTori:
    """
    Build L1, L and the maps Z -> L -> L1.

    Raises:
        ValueError: No stabilizers given
        ExactnessError: The constructed sequence is not exact (only with check=True)
    """
    if not stabilizers:
        raise ValueError("At least one stabilizer is required")

    perms, summand_data = _summands(G, stabilizers)
    sizes = [P.rank for P in perms]
    offsets = [sum(sizes[:i]) for i in range(len(sizes))]
    total = sum(sizes)

    summands = [d.lattice for d in summand_data]
    hnp = direct_sum(summands, group=G)
    hnp.name = "HNP lattice"

    # L = (+) Z[Si] / <d1 - di>
    big = direct_sum(perms, group=G)
    relations = []
    for i in range(1, len(perms)):
        v = [0] * total
        for k in range(sizes[0]):
            v[k] = 1
        for k in range(sizes[i]):
            v[offsets[i] + k] = -1
        relations.append(tuple(v))
    phnp_data = quotient_data(big, IntMatrix.from_columns(relations, total), name="PHNP lattice")
    phnp = phnp_data.lattice

    d1 = [0] * total
    for k in range(sizes[0]):
        d1[k] = 1
    incl_column = phnp_data.projection.matrix @ d1
    Z = trivial_lattice(G, 1)
    incl = LatticeMap(Z, phnp, IntMatrix.from_columns([incl_column], phnp.rank))

    # proj = (blockdiag of summand projections) . section of L
    blocks = IntMatrix.block_diagonal([d.projection.matrix for d in summand_data])
    proj = LatticeMap(phnp, hnp, blocks @ phnp_data.section)

    tori = NormOneTori(
        permutation_lattices=tuple(perms),
        summands=tuple(summands),
        hnp=hnp,
        phnp=phnp,
        incl=incl,
        proj=proj,
    )
    if check:
        check_exactness(tori.incl, tori.proj)
    logger.debug(f"Norm-one lattices for {len(stabilizers)} stabilizers: ranks L={phnp.rank}, L1={hnp.rank}")
    return tori


def check_exactness(incl: LatticeMap, proj: LatticeMap) -> None:
    """
    Verify 0 -> A -> B -> C -> 0 is exact on the integer level.

    Raises:
        ExactnessError: With the failing condition in the message
    """
    if incl.target.rank != proj.source.rank:
        raise ExactnessError("Maps do not compose")
    if incl.matrix.ncols and kernel_basis(incl.matrix).ncols:
        raise ExactnessError("Inclusion is not injective")
    if not (proj.matrix @ incl.matrix).is_zero():
        raise ExactnessError("proj . incl is not zero")
    coker = cokernel(proj.target.rank, proj.matrix)
    if coker.free_rank or not coker.structure.is_trivial:
        raise ExactnessError("Projection is not surjective")
    kernel = kernel_basis(proj.matrix)
    if kernel.ncols != incl.matrix.ncols:
        raise ExactnessError(f"Kernel of projection has rank {kernel.ncols}, image of inclusion {incl.matrix.ncols}")
    for col in incl.matrix.columns():
        if solve(kernel, col) is None:
            raise ExactnessError("Image of inclusion is not inside the kernel lattice")
    for col in kernel.columns():
        if solve(incl.matrix, col) is None:
            raise ExactnessError("Kernel of projection is larger than the image of inclusion")


def hnp_lattice(G: FiniteGroup, stabilizers: Sequence[Subgroup]) -> tuple[GLattice, list[GLattice]]:
    """The HNP lattice (+) Z[Si]/<di> and its per-field summands."""
    if not stabilizers:
        raise ValueError("At least one stabilizer is required")
    _, summand_data = _summands(G, stabilizers)
    summands = [d.lattice for d in summand_data]
    lattice = direct_sum(summands, group=G)
    lattice.name = "HNP lattice"
    return lattice, summands


def phnp_lattice(G: FiniteGroup, stabilizers: Sequence[Subgroup]) -> tuple[GLattice, LatticeMap, LatticeMap]:
    """The PHNP lattice with incl: Z -> L and proj: L -> L1 (exactness verified)."""
    tori = build_norm_tori(G, stabilizers)
    return tori.phnp, tori.incl, tori.proj
