"""
Character criteria for the multinorm principle.

For stabilizers G1, ..., Gn of G, with Lambda the PHNP lattice and e: H^2(G, Z) -> H^2(G, Lambda):

    Ker e          = span of the characters vanishing on some Gi
    Ker e_D        = the same inside D^v, where character i vanishes on every D ∩ g·Gi·g^-1
    H^2(Z)'        = {f : f|D lies in Ker e_D for every D in the family}
    |Sha^2(Lambda)| = |H^2(Z)'| / |Ker e|   when every HNP lattice Sha^2 vanishes

and the derived criterion: the intersection of the G^der·Gi equals G^der.
"""

import logging
from collections.abc import Sequence
from math import lcm
from typing import NamedTuple

from ..cohomology import sha
from ..constants import CHARACTER_ENUMERATION_LIMIT
from ..exceptions import IndivisibleCountsError, InvalidInputError, NotNormalError
from ..groups import (
    FiniteGroup,
    Subgroup,
    conjugates,
    derived_subgroup,
    generated,
    intersect,
    intersect_all,
    is_normal,
    product_set,
    quotient_group,
    require_same_group,
)
from ..lattices import hnp_lattice
from ..linalg import IntMatrix, intersect_subgroups, kernel_of_map, preimage_of_subgroup
from .abelianization import Abelianization, CharacterSubgroup, restrict_character, restriction_matrix

logger = logging.getLogger(__name__)


class CriteriaOrder(NamedTuple):
    """|H^2(Z)'| / |Ker e| with the gate telling whether it equals |Sha^2(Lambda)|."""
    order: int
    hnp_gate: bool
    ker_e_order: int
    h2z_prime_order: int


def vanishing_characters(ab: Abelianization, H: Subgroup) -> CharacterSubgroup:
    """
    Characters of G vanishing on H.

    chi(h) = sum_i ri·ci(h)/di vanishes mod 1 iff sum_i ri·ci(h)·(L/di) vanishes mod L
    with L = lcm(di); one row per generator of H.
    """
    require_same_group(ab.group, H)
    moduli = ab.moduli
    if not moduli:
        return CharacterSubgroup(moduli)
    L = lcm(*moduli)
    rows = [[c * (L // d) for c, d in zip(ab.project(h), moduli)] for h in H.generators]
    rows = [row for row in rows if any(row)]
    if not rows:
        return CharacterSubgroup.full(moduli)
    gens = kernel_of_map(IntMatrix(rows, ncols=len(moduli)), moduli, [L] * len(rows))
    return CharacterSubgroup(moduli, gens)


def _check_stabilizers(G: FiniteGroup, stabilizers: Sequence[Subgroup]) -> None:
    if not stabilizers:
        raise InvalidInputError("At least one stabilizer is required")
    require_same_group(G, *stabilizers)


def ker_e(G: FiniteGroup, stabilizers: Sequence[Subgroup], ab: Abelianization | None = None) -> CharacterSubgroup:
    """Span of the characters vanishing on at least one stabilizer."""
    _check_stabilizers(G, stabilizers)
    ab = ab or Abelianization(G)
    result = CharacterSubgroup(ab.moduli)
    for H in stabilizers:
        result = result.join(vanishing_characters(ab, H))
    return result


def local_stabilizers(D: Subgroup, H: Subgroup, over_conjugates: bool = True) -> list[Subgroup]:
    """
    The point stabilizers of D on G/H, as subgroups of D.as_group().

    With over_conjugates these are D ∩ gHg^-1 for every g (one per distinct
    intersection); otherwise only D ∩ H.
    """
    position = {a: i for i, a in enumerate(D.members)}
    pieces = conjugates(H) if over_conjugates else [H]
    D_group = D.as_group()
    seen: dict[tuple[int, ...], Subgroup] = {}
    for K in pieces:
        members = tuple(sorted(position[a] for a in intersect(D, K).members))
        seen.setdefault(members, Subgroup(D_group, members, validate=False))
    return [seen[k] for k in sorted(seen)]


def ker_e_for_subgroup(
    G: FiniteGroup,
    D: Subgroup,
    stabilizers: Sequence[Subgroup],
    over_conjugates: bool = True,
    ab_D: Abelianization | None = None,
) -> CharacterSubgroup:
    """
    Ker e_D inside D^v.

    The i-th generating set is the characters of D vanishing on every local
    stabilizer of Gi; with over_conjugates=False only on D ∩ Gi.
    """
    _check_stabilizers(G, stabilizers)
    require_same_group(G, D)
    ab_D = ab_D or Abelianization(D.as_group())
    result = CharacterSubgroup(ab_D.moduli)
    for H in stabilizers:
        pieces = local_stabilizers(D, H, over_conjugates=over_conjugates)
        union = generated(ab_D.group, [a for K in pieces for a in K.members])
        result = result.join(vanishing_characters(ab_D, union))
    return result


def h2z_prime(
    G: FiniteGroup,
    stabilizers: Sequence[Subgroup],
    family: Sequence[Subgroup],
    over_conjugates: bool = True,
    ab: Abelianization | None = None,
    enumeration_limit: int = CHARACTER_ENUMERATION_LIMIT,
) -> CharacterSubgroup:
    """
    Characters whose restriction to every family member D lies in Ker e_D.

    Enumerates G^v when |G^ab| <= enumeration_limit, otherwise intersects the
    preimages of the Ker e_D under restriction.

    Raises:
        InvalidInputError: Empty family
    """
    _check_stabilizers(G, stabilizers)
    if not family:
        raise InvalidInputError("Decomposition family must not be empty")
    require_same_group(G, *family)
    ab = ab or Abelianization(G)

    local = []
    for D in family:
        ab_D = Abelianization(D.as_group())
        local.append((D, ab_D, ker_e_for_subgroup(G, D, stabilizers, over_conjugates=over_conjugates, ab_D=ab_D)))

    if ab.order <= enumeration_limit:
        members = [
            chi for chi in ab.characters()
            if all(kD.contains(restrict_character(chi, D, ab, ab_D)) for D, ab_D, kD in local)
        ]
        logger.debug(f"H^2(Z)' by enumeration of {ab.order} characters: {len(members)} members")
        return CharacterSubgroup(ab.moduli, members)

    gens: list | None = None
    for D, ab_D, kD in local:
        pre = preimage_of_subgroup(
            restriction_matrix(ab, D, ab_D), ab.moduli, ab_D.moduli, [g.residues for g in kD.generators]
        )
        gens = pre if gens is None else intersect_subgroups(gens, pre, ab.moduli)
        if not gens:
            break
    logger.debug(f"H^2(Z)' by preimage intersection over {len(local)} subgroups")
    return CharacterSubgroup(ab.moduli, gens or [])


def hnp_gate(
    G: FiniteGroup,
    stabilizers: Sequence[Subgroup],
    family: Sequence[Subgroup],
) -> bool:
    """Whether Sha^2 of every HNP lattice Z[G/Gi]/<di> vanishes for the family."""
    _, summands = hnp_lattice(G, stabilizers)
    for i, J in enumerate(summands):
        structure = sha(G, J, 2, family=family, max_order=None)
        if not structure.is_trivial:
            logger.debug(f"HNP fails for stabilizer {i + 1}: Sha^2 = {structure}")
            return False
    return True


def sha2_order_by_criteria(
    G: FiniteGroup,
    stabilizers: Sequence[Subgroup],
    family: Sequence[Subgroup],
    over_conjugates: bool = True,
    ab: Abelianization | None = None,
    gate: bool | None = None,
) -> CriteriaOrder:
    """
    |H^2(Z)'| / |Ker e| and the HNP gate.

    The order is |Sha^2(Lambda)| only when the gate holds; otherwise it is reported as is.

    Args:
        gate: Precomputed HNP gate; computed with hnp_gate() when omitted

    Raises:
        IndivisibleCountsError: |Ker e| does not divide |H^2(Z)'|
    """
    ab = ab or Abelianization(G)
    kernel = ker_e(G, stabilizers, ab=ab)
    prime = h2z_prime(G, stabilizers, family, over_conjugates=over_conjugates, ab=ab)
    if prime.order % kernel.order or not kernel.issubset(prime):
        raise IndivisibleCountsError(prime.order, kernel.order)
    if gate is None:
        gate = hnp_gate(G, stabilizers, family)
    order = prime.order // kernel.order
    logger.debug(f"|H^2(Z)'| = {prime.order}, |Ker e| = {kernel.order}, gate {gate}")
    return CriteriaOrder(order, gate, kernel.order, prime.order)


def _require_normal(stabilizers: Sequence[Subgroup]) -> None:
    for H in stabilizers:
        if not is_normal(H):
            raise NotNormalError(H.members, f"Stabilizer of order {H.order} is not normal")


def derived_criterion(G: FiniteGroup, stabilizers: Sequence[Subgroup]) -> bool:
    """
    Whether the intersection of the G^der·Gi equals G^der.

    Raises:
        NotNormalError: Some stabilizer is not normal
    """
    _check_stabilizers(G, stabilizers)
    _require_normal(stabilizers)
    derived = derived_subgroup(G)
    meet = intersect_all(G, [product_set(derived, H) for H in stabilizers])
    return meet == derived


def derived_criterion_by_quotients(G: FiniteGroup, stabilizers: Sequence[Subgroup]) -> int | None:
    """
    Look for g outside G^der whose image in every G/Gi lies in (G/Gi)^der.

    Returns:
        The smallest such element, or None when the derived criterion holds

    Raises:
        NotNormalError: Some stabilizer is not normal
    """
    _check_stabilizers(G, stabilizers)
    _require_normal(stabilizers)
    derived = derived_subgroup(G)
    images = []
    for H in stabilizers:
        quotient, projection = quotient_group(G, H)
        images.append((derived_subgroup(quotient).member_set, projection))
    for g in G.elements:
        if g in derived:
            continue
        if all(projection[g] in q_derived for q_derived, projection in images):
            return g
    return None


def ker_e_is_full(G: FiniteGroup, stabilizers: Sequence[Subgroup], ab: Abelianization | None = None) -> bool:
    """Whether Ker e is all of G^v, which already forces HNP => PHNP."""
    return ker_e(G, stabilizers, ab=ab).is_full


def family_covers_group(G: FiniteGroup, family: Sequence[Subgroup]) -> bool:
    """Whether every element lies in some family member."""
    covered: set[int] = set()
    for D in family:
        require_same_group(G, D)
        covered |= D.member_set
    return len(covered) == G.order
