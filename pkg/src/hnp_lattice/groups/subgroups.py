"""
Subgroup machinery: enumeration, derived subgroup, products, conjugates,
coset spaces and quotients.
"""

import logging
from collections.abc import Iterable, Sequence

from ..constants import DEFAULT_SUBGROUP_CAP
from ..exceptions import NotNormalError, NotNormalOperandError, OrderCapExceededError
from .group import CosetSpace, FiniteGroup, Subgroup, _closure, require_same_group

logger = logging.getLogger(__name__)


def generated(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """Subgroup generated by the given elements (breadth-first closure)."""
    return Subgroup(G, tuple(_closure(G, elements)), validate=False)


def _sort_key(H: Subgroup) -> tuple:
    return (H.order, H.members)


def cyclic_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every cyclic subgroup, trivial included, sorted by (order, members)."""
    found: dict[tuple[int, ...], Subgroup] = {}
    for g in G.elements:
        H = generated(G, [g])
        found.setdefault(H.members, H)
    return sorted(found.values(), key=_sort_key)


def maximal_cyclic_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Cyclic subgroups not strictly contained in another cyclic subgroup."""
    cyclic = cyclic_subgroups(G)
    return [
        H for H in cyclic
        if not any(H.order < K.order and H.issubset(K) for K in cyclic)
    ]


def all_subgroups(G: FiniteGroup, cap: int | None = DEFAULT_SUBGROUP_CAP) -> list[Subgroup]:
    """
    Every subgroup of G, sorted by (order, members).

    Starts from the cyclic subgroups and joins each known subgroup with every cyclic
    subgroup it does not contain until nothing new appears.

    Raises:
        OrderCapExceededError: If |G| exceeds cap
    """
    if cap is not None and G.order > cap:
        raise OrderCapExceededError(G.order, cap, what="subgroup enumeration")
    cyclic = cyclic_subgroups(G)
    found: dict[tuple[int, ...], Subgroup] = {H.members: H for H in cyclic}
    generators: dict[tuple[int, ...], tuple[int, ...]] = {H.members: H.generators for H in cyclic}
    cyclic_gens = [(C, C.generators) for C in cyclic if not C.is_trivial]
    queue = [H.members for H in cyclic]
    while queue:
        members = queue.pop()
        H = found[members]
        for C, gens in cyclic_gens:
            if C.issubset(H):
                continue
            joined = tuple(sorted(_closure(G, generators[members] + gens)))
            if joined not in found:
                found[joined] = Subgroup(G, joined, validate=False)
                generators[joined] = generators[members] + gens
                queue.append(joined)
    result = sorted(found.values(), key=_sort_key)
    logger.debug(f"Group of order {G.order} has {len(result)} subgroups")
    return result


def is_normal(H: Subgroup) -> bool:
    G = H.parent
    members = H.member_set
    return all(G.conjugate_element(g, h) in members for g in G.generators for h in H.members)


def normal_subgroups(G: FiniteGroup, cap: int | None = DEFAULT_SUBGROUP_CAP) -> list[Subgroup]:
    return [H for H in all_subgroups(G, cap=cap) if is_normal(H)]


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    """Subgroup generated by all commutators."""
    commutators = {G.commutator(a, b) for a in G.elements for b in G.elements}
    return generated(G, sorted(commutators))


def intersect(A: Subgroup, B: Subgroup) -> Subgroup:
    G = require_same_group(A, B)
    return Subgroup(G, tuple(sorted(A.member_set & B.member_set)), validate=False)


def intersect_all(G: FiniteGroup, subgroups: Sequence[Subgroup]) -> Subgroup:
    members = set(G.elements)
    for H in subgroups:
        require_same_group(G, H)
        members &= H.member_set
    return Subgroup(G, tuple(sorted(members)), validate=False)


def product_set(A: Subgroup, B: Subgroup) -> Subgroup:
    """
    The set AB, which is a subgroup when A or B is normal.

    Raises:
        NotNormalOperandError: If neither operand is normal
    """
    G = require_same_group(A, B)
    if not (is_normal(A) or is_normal(B)):
        raise NotNormalOperandError(A.members, "product_set needs a normal operand")
    return Subgroup(G, tuple(sorted({G.mul(a, b) for a in A.members for b in B.members})), validate=False)


def conjugate(H: Subgroup, g: int) -> Subgroup:
    """g H g^-1"""
    G = H.parent
    return Subgroup(G, tuple(sorted(G.conjugate_element(g, h) for h in H.members)), validate=False)


def conjugates(H: Subgroup) -> list[Subgroup]:
    """Distinct conjugates of H, sorted by members."""
    seen: dict[tuple[int, ...], Subgroup] = {}
    for g in H.parent.elements:
        K = conjugate(H, g)
        seen.setdefault(K.members, K)
    return [seen[k] for k in sorted(seen)]


def coset_space(G: FiniteGroup, H: Subgroup) -> CosetSpace:
    """Left cosets gH ordered by smallest member, with the left G-action."""
    require_same_group(G, H)
    coset_of = [-1] * G.order
    cosets = []
    for g in G.elements:
        if coset_of[g] >= 0:
            continue
        members = tuple(sorted(G.mul(g, h) for h in H.members))
        for x in members:
            coset_of[x] = len(cosets)
        cosets.append(members)
    action = tuple(
        tuple(coset_of[G.mul(g, coset[0])] for coset in cosets)
        for g in G.elements
    )
    return CosetSpace(parent=G, stabilizer=H, cosets=tuple(cosets), action=action, coset_of=tuple(coset_of))


def quotient_group(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """
    The quotient G/N and the projection (element index -> coset index).

    Raises:
        NotNormalError: If N is not normal
    """
    if not is_normal(N):
        raise NotNormalError(N.members)
    space = coset_space(G, N)
    reps = [c[0] for c in space.cosets]
    table = [[space.coset_of[G.mul(a, b)] for b in reps] for a in reps]
    labels = [G.label(r) + "N" if not N.is_trivial else G.label(r) for r in reps]
    descriptor = {"family": "quotient", "parent": G.name, "kernel_order": N.order}
    return FiniteGroup(table, labels=labels, descriptor=descriptor, validate=False), space.coset_of


def stabilizer_core(G: FiniteGroup, stabilizers: Sequence[Subgroup]) -> Subgroup:
    """
    Intersection of all stabilizers.

    It is trivial exactly when the compositum of the fields is their Galois closure.
    """
    return intersect_all(G, stabilizers)
