"""
Maps between cohomology groups and Tate-Shafarevich kernels.

A CohomologyMap is stored as an integer matrix whose column j holds the target
coordinates of the image of the j-th source generator.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from ..constants import DEFAULT_MAX_ORDER
from ..exceptions import HNPLatticeError, InvalidInputError
from ..groups import FiniteGroup, Subgroup, require_same_group
from ..lattices import GLattice, LatticeMap, restrict_lattice
from ..linalg import FiniteAbelianGroup, IntMatrix, Vector, kernel_of_map, subgroup_structure
from .cochains import apply_to_values, restrict_cochain
from .cohomology_group import CohomologyGroup, cohomology, cyclic_h2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelSubgroup:
    """A subgroup of a cohomology group: its structure and generators in source coordinates."""
    structure: FiniteAbelianGroup
    generators: tuple[Vector, ...]

    @property
    def order(self) -> int:
        return self.structure.order


class CohomologyMap:
    """
    A homomorphism source -> target in invariant-factor coordinates.

    Raises:
        HNPLatticeError: An image column violates the order relation of its source generator
    """

    def __init__(self, source: CohomologyGroup, target: CohomologyGroup, columns: Sequence[Sequence[int]]):
        moduli = target.moduli
        if len(columns) != len(source.moduli):
            raise ValueError(f"Expected {len(source.moduli)} image columns, got {len(columns)}")
        reduced = [tuple(c % d for c, d in zip(col, moduli)) for col in columns]
        for j, (col, order) in enumerate(zip(reduced, source.moduli)):
            if any((order * c) % d for c, d in zip(col, moduli)):
                raise HNPLatticeError(f"Image of generator {j} does not have order dividing {order}")
        self.source = source
        self.target = target
        self.matrix = IntMatrix.from_columns(reduced, len(moduli))

    def __call__(self, coords: Sequence[int]) -> Vector:
        image = self.matrix @ list(coords)
        return tuple(c % d for c, d in zip(image, self.target.moduli))

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def kernel(self) -> KernelSubgroup:
        gens = kernel_of_map(self.matrix, self.source.moduli, self.target.moduli)
        return KernelSubgroup(subgroup_structure(gens, self.source.moduli), tuple(gens))

    def __repr__(self) -> str:
        return f"CohomologyMap(H^{self.source.degree}: {self.source.structure} -> {self.target.structure})"


def local_cohomology(
    D: Subgroup, M: GLattice, n: int, max_order: int | None = DEFAULT_MAX_ORDER
) -> CohomologyGroup:
    """H^n(D, M|D), through the cyclic shortcut when n = 2 and D is cyclic."""
    D_group = D.as_group()
    M_D = restrict_lattice(M, D)
    if n == 2 and D.is_cyclic:
        return cyclic_h2(D_group, M_D)
    return cohomology(D_group, M_D, n, max_order=max_order)


def restriction_map(
    G: FiniteGroup,
    D: Subgroup,
    M: GLattice,
    n: int,
    max_order: int | None = DEFAULT_MAX_ORDER,
    source: CohomologyGroup | None = None,
    target: CohomologyGroup | None = None,
) -> CohomologyMap:
    """
    Restriction H^n(G, M) -> H^n(D, M|D).

    Representative cocycles are restricted argument-wise and read off in the target's
    coordinates.
    """
    require_same_group(G, D, M.group)
    if source is None:
        source = cohomology(G, M, n, max_order=max_order)
    if target is None:
        target = local_cohomology(D, M, n, max_order=max_order)
    columns = []
    for cocycle in source.rep_cocycles:
        restricted = restrict_cochain(D, M.rank, n, cocycle)
        columns.append(target.coords(restricted))
    return CohomologyMap(source, target, columns)


def induced_map(
    f: LatticeMap,
    n: int,
    max_order: int | None = DEFAULT_MAX_ORDER,
    source: CohomologyGroup | None = None,
    target: CohomologyGroup | None = None,
) -> CohomologyMap:
    """
    The map H^n(G, A) -> H^n(G, B) of an equivariant f: A -> B.

    Raises:
        HNPLatticeError: The image of a representative is not a cocycle
    """
    G = f.source.group
    if source is None:
        source = cohomology(G, f.source, n, max_order=max_order)
    if target is None:
        target = cohomology(G, f.target, n, max_order=max_order)
    rows = f.matrix.rows()
    count = (G.order - 1) ** n
    columns = []
    for j, cocycle in enumerate(source.rep_cocycles):
        image = apply_to_values(rows, f.source.rank, count, cocycle)
        if not target.is_cocycle(image):
            raise HNPLatticeError(f"Image of representative {j} under {f!r} is not a cocycle")
        columns.append(target.coords(image))
    return CohomologyMap(source, target, columns)


def sha_kernel(
    G: FiniteGroup,
    M: GLattice,
    family: Sequence[Subgroup],
    n: int = 2,
    max_order: int | None = DEFAULT_MAX_ORDER,
    source: CohomologyGroup | None = None,
) -> KernelSubgroup:
    """
    Kernel of H^n(G, M) -> prod_D H^n(D, M|D) over the family.

    Raises:
        InvalidInputError: Empty family
        OrderCapExceededError: If |G| exceeds max_order
    """
    if not family:
        raise InvalidInputError("Decomposition family must not be empty")
    if source is None:
        source = cohomology(G, M, n, max_order=max_order)
    moduli = source.moduli
    if not moduli:
        return KernelSubgroup(FiniteAbelianGroup(), ())
    if any(D.is_whole for D in family):
        logger.debug("Family contains the whole group: restriction is injective")
        return KernelSubgroup(FiniteAbelianGroup(), ())

    blocks = []
    target_moduli: list[int] = []
    for D in family:
        rho = restriction_map(G, D, M, n, max_order=max_order, source=source)
        if rho.target.moduli:
            blocks.append(rho.matrix)
            target_moduli.extend(rho.target.moduli)
    if not blocks:
        gens = kernel_of_map(IntMatrix.zeros(0, len(moduli)), moduli, ())
    else:
        gens = kernel_of_map(blocks[0].vstack(*blocks[1:]), moduli, target_moduli)
    structure = subgroup_structure(gens, moduli)
    logger.debug(f"Sha^{n}({M.name}) over {len(family)} subgroups: {structure}")
    return KernelSubgroup(structure, tuple(gens))


def sha(
    G: FiniteGroup,
    M: GLattice,
    n: int = 2,
    family: Sequence[Subgroup] = (),
    max_order: int | None = DEFAULT_MAX_ORDER,
) -> FiniteAbelianGroup:
    """Sha^n(G, M) relative to the family, as a finite abelian group."""
    return sha_kernel(G, M, family, n=n, max_order=max_order).structure
