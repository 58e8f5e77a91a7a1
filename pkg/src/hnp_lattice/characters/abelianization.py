"""
Abelianization and linear characters G -> Q/Z.

G^ab = G / G^der is written as Z/d1 x ... x Z/dk (d1 | d2 | ...). A character is a
residue vector (r1, ..., rk) with value sum_i ri·ci(g)/di mod 1, where c(g) are the
abelianization coordinates of g. Characters of G and elements of G^ab therefore use
the same coordinate space.
"""

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm

from ..groups import FiniteGroup, Subgroup, derived_subgroup, quotient_group, require_same_group
from ..linalg import (
    FiniteAbelianGroup,
    IntMatrix,
    Vector,
    contains,
    elements,
    span_generators,
    subgroup_structure,
)
from ..linalg import cokernel as integer_cokernel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Character:
    """
    A homomorphism G -> Q/Z in abelianization coordinates.

    Residues are reduced mod their moduli on construction.
    """
    residues: tuple[int, ...]
    moduli: tuple[int, ...]

    def __post_init__(self):
        if len(self.residues) != len(self.moduli):
            raise ValueError(f"Character has {len(self.residues)} residues for {len(self.moduli)} moduli")
        object.__setattr__(self, "residues", tuple(int(r) % d for r, d in zip(self.residues, self.moduli)))
        object.__setattr__(self, "moduli", tuple(int(d) for d in self.moduli))

    @classmethod
    def trivial(cls, moduli: Sequence[int]) -> "Character":
        return cls((0,) * len(moduli), tuple(moduli))

    def value(self, coords: Sequence[int]) -> Fraction:
        """Value on an element with the given abelianization coordinates, in [0, 1)."""
        return sum((Fraction(r * c, d) for r, c, d in zip(self.residues, coords, self.moduli)), Fraction(0)) % 1

    @property
    def is_trivial(self) -> bool:
        return not any(self.residues)

    @property
    def order(self) -> int:
        return lcm(*(d // gcd(r, d) for r, d in zip(self.residues, self.moduli)))

    def __add__(self, other: "Character") -> "Character":
        self._check_compatible(other)
        return Character(tuple(a + b for a, b in zip(self.residues, other.residues)), self.moduli)

    def __neg__(self) -> "Character":
        return Character(tuple(-a for a in self.residues), self.moduli)

    def _check_compatible(self, other: "Character") -> None:
        if self.moduli != other.moduli:
            raise ValueError(f"Characters of different groups: {self.moduli} vs {other.moduli}")

    def __str__(self) -> str:
        if not self.moduli:
            return "1"
        return "(" + ", ".join(f"{r}/{d}" for r, d in zip(self.residues, self.moduli)) + ")"


class Abelianization:
    """
    G^ab with the projection of every group element.

    Built from the Schreier relations of the abelian quotient G/G^der: words w(q)
    over its generators along a spanning tree, and w(q) + e_i - w(x_i·q) = 0 for every
    element q and generator x_i. The cokernel of the relations is G^ab.

    Attributes:
        group: The group
        derived: G^der
        invariant_factors: d1 | d2 | ... of G^ab
        unit_preimages: For each j, the smallest element of G projecting to e_j
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.derived = derived_subgroup(group)
        quotient, coset_of = quotient_group(group, self.derived)
        gens = list(quotient.generators)
        s = len(gens)

        # spanning tree words
        words: dict[int, list[int]] = {0: [0] * s}
        frontier = [0]
        while frontier:
            nxt = []
            for q in frontier:
                for i, x in enumerate(gens):
                    p = quotient.mul(x, q)
                    if p not in words:
                        words[p] = [w + (1 if k == i else 0) for k, w in enumerate(words[q])]
                        nxt.append(p)
            frontier = nxt

        relations = []
        for q in quotient.elements:
            for i, x in enumerate(gens):
                rel = [a - b for a, b in zip(words[q], words[quotient.mul(x, q)])]
                rel[i] += 1
                if any(rel):
                    relations.append(rel)
        coker = integer_cokernel(s, IntMatrix.from_columns(relations, s))
        if coker.free_rank:
            raise ArithmeticError(f"Abelianization of {group.name} reported free rank {coker.free_rank}")

        self.invariant_factors: tuple[int, ...] = coker.structure.invariant_factors
        quotient_coords = {q: coker.project(words[q]) for q in quotient.elements}
        self._coords: tuple[Vector, ...] = tuple(quotient_coords[coset_of[g]] for g in group.elements)

        preimages = []
        k = len(self.invariant_factors)
        for j in range(k):
            unit = tuple(1 if i == j else 0 for i in range(k))
            preimages.append(min(g for g in group.elements if self._coords[g] == unit))
        self.unit_preimages: tuple[int, ...] = tuple(preimages)
        logger.debug(f"Abelianization of {group.name}: {self.structure}")

    @property
    def moduli(self) -> tuple[int, ...]:
        return self.invariant_factors

    @cached_property
    def structure(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(self.invariant_factors)

    @property
    def order(self) -> int:
        return self.structure.order

    def project(self, g: int) -> Vector:
        """Coordinates of the image of g in G^ab."""
        return self._coords[g]

    def character(self, residues: Sequence[int]) -> Character:
        return Character(tuple(residues), self.moduli)

    def evaluate(self, chi: Character, g: int) -> Fraction:
        """chi(g) in [0, 1)."""
        if chi.moduli != self.moduli:
            raise ValueError("Character does not belong to this group")
        return chi.value(self._coords[g])

    def characters(self) -> Iterator[Character]:
        for residues in elements(self.moduli):
            yield Character(residues, self.moduli)

    def __repr__(self) -> str:
        return f"Abelianization({self.group.name}: {self.structure})"


def abelianization(G: FiniteGroup) -> Abelianization:
    return Abelianization(G)


def dual_group(G: FiniteGroup, ab: Abelianization | None = None) -> list[Character]:
    """Every character of G, in lexicographic order of residues."""
    ab = ab or Abelianization(G)
    return list(ab.characters())


def restrict_character(
    chi: Character,
    D: Subgroup,
    ab: Abelianization | None = None,
    ab_D: Abelianization | None = None,
) -> Character:
    """
    The restriction of a character of G to D, in coordinates of D^ab.

    Args:
        chi: Character of G
        D: Subgroup of G
        ab: Abelianization of G, computed when omitted
        ab_D: Abelianization of D.as_group(), computed when omitted

    The residue against the j-th factor ej of D^ab is ej·chi(yj) for the unit preimage yj.
    """
    ab = ab or Abelianization(D.parent)
    require_same_group(ab.group, D)
    ab_D = ab_D or Abelianization(D.as_group())
    residues = []
    for y, e in zip(ab_D.unit_preimages, ab_D.moduli):
        value = ab.evaluate(chi, D.members[y]) * e
        if value.denominator != 1:
            raise ArithmeticError(f"Character does not vanish on the derived subgroup of D at {y}")
        residues.append(value.numerator)
    return ab_D.character(residues)


def restriction_matrix(ab: Abelianization, D: Subgroup, ab_D: Abelianization) -> IntMatrix:
    """Matrix of restriction G^v -> D^v: column i is the restriction of the i-th unit character."""
    k = len(ab.moduli)
    columns = []
    for i in range(k):
        unit = ab.character([1 if j == i else 0 for j in range(k)])
        columns.append(restrict_character(unit, D, ab, ab_D).residues)
    return IntMatrix.from_columns(columns, len(ab_D.moduli))


class CharacterSubgroup:
    """
    A subgroup of the character group Z/d1 x ... x Z/dk, kept by canonical generators.
    """

    def __init__(self, moduli: Sequence[int], generators: Sequence[Sequence[int] | Character] = ()):
        self.moduli = tuple(moduli)
        vectors = [g.residues if isinstance(g, Character) else tuple(g) for g in generators]
        self._generators = tuple(span_generators(vectors, self.moduli))

    @classmethod
    def full(cls, moduli: Sequence[int]) -> "CharacterSubgroup":
        k = len(moduli)
        return cls(moduli, [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)])

    @property
    def generators(self) -> list[Character]:
        return [Character(g, self.moduli) for g in self._generators]

    @cached_property
    def structure(self) -> FiniteAbelianGroup:
        return subgroup_structure(self._generators, self.moduli)

    @property
    def order(self) -> int:
        return self.structure.order

    @property
    def is_trivial(self) -> bool:
        return not self._generators

    @property
    def dual_order(self) -> int:
        result = 1
        for d in self.moduli:
            result *= d
        return result

    @property
    def is_full(self) -> bool:
        return self.order == self.dual_order

    def contains(self, chi: Character | Sequence[int]) -> bool:
        residues = chi.residues if isinstance(chi, Character) else tuple(chi)
        return contains(self._generators, self.moduli, residues)

    def __contains__(self, chi: object) -> bool:
        if isinstance(chi, (Character, tuple, list)):
            return self.contains(chi)
        return False

    def issubset(self, other: "CharacterSubgroup") -> bool:
        if self.moduli != other.moduli:
            raise ValueError("Character subgroups of different groups")
        return all(other.contains(g) for g in self._generators)

    def join(self, other: "CharacterSubgroup") -> "CharacterSubgroup":
        if self.moduli != other.moduli:
            raise ValueError("Character subgroups of different groups")
        return CharacterSubgroup(self.moduli, list(self._generators) + list(other._generators))

    def members(self) -> list[Character]:
        """Every character in the subgroup (enumerates the dual)."""
        return [Character(r, self.moduli) for r in elements(self.moduli) if self.contains(r)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CharacterSubgroup):
            return NotImplemented
        return self.moduli == other.moduli and self._generators == other._generators

    def __hash__(self) -> int:
        return hash((self.moduli, self._generators))

    def __repr__(self) -> str:
        return f"CharacterSubgroup(order={self.order}, of={self.dual_order})"
