"""
Finite groups as Cayley tables.

Elements are the indices 0..n-1 and index 0 is always the identity. Subgroups and
coset spaces reference their parent group and are immutable once built.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm
from typing import Any

from ..exceptions import GroupMismatchError, NotAGroupError

logger = logging.getLogger(__name__)


class FiniteGroup:
    """
    A finite group given by its multiplication table.

    Attributes:
        cayley: cayley[a][b] is the index of a*b
        labels: Display string per element
        descriptor: How the group was specified (family tag or "custom" plus generators)
        permutations: Optional 0-based image tuples when the group acts on points
    """

    def __init__(
        self,
        cayley: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        descriptor: dict[str, Any] | None = None,
        permutations: Sequence[tuple[int, ...]] | None = None,
        validate: bool = True,
    ):
        table = tuple(tuple(int(v) for v in row) for row in cayley)
        if validate:
            _validate_table(table)
        self.cayley = table
        self.order = len(table)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.order))
        if len(self.labels) != self.order:
            raise ValueError(f"Expected {self.order} labels, got {len(self.labels)}")
        self.descriptor = dict(descriptor) if descriptor else {"family": "custom"}
        self.permutations = tuple(permutations) if permutations is not None else None
        self._inverses = tuple(row.index(0) for row in table)

    def mul(self, a: int, b: int) -> int:
        return self.cayley[a][b]

    def inv(self, a: int) -> int:
        return self._inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = 0
        for _ in range(k):
            result = self.cayley[result][a]
        return result

    def conjugate_element(self, g: int, h: int) -> int:
        """g h g^-1"""
        return self.cayley[self.cayley[g][h]][self._inverses[g]]

    def commutator(self, a: int, b: int) -> int:
        """a b a^-1 b^-1"""
        c = self.cayley
        return c[c[c[a][b]][self._inverses[a]]][self._inverses[b]]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.cayley[x][a]
            k += 1
        return k

    @property
    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def is_abelian(self) -> bool:
        c = self.cayley
        return all(c[a][b] == c[b][a] for a in range(self.order) for b in range(a + 1, self.order))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, greedily chosen in index order."""
        return _greedy_generators(self, self.elements)

    @cached_property
    def exponent(self) -> int:
        return lcm(*(self.element_order(a) for a in range(self.order)))

    @property
    def name(self) -> str:
        return self.descriptor.get("expression") or self.descriptor.get("family", "custom")

    def label(self, a: int) -> str:
        return self.labels[a]

    def index_of_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"No element labelled {label!r}")

    def index_of_permutation(self, perm: Sequence[int]) -> int:
        if self.permutations is None:
            raise KeyError("Group has no permutation representation")
        try:
            return self.permutations.index(tuple(perm))
        except ValueError:
            raise KeyError(f"Permutation {tuple(perm)} is not in the group")

    def same_as(self, other: "FiniteGroup") -> bool:
        return self is other or self.cayley == other.cayley

    def subgroup(self, members: Iterable[int]) -> "Subgroup":
        return Subgroup(self, tuple(sorted(set(members))))

    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)), validate=False)

    def trivial(self) -> "Subgroup":
        return Subgroup(self, (0,), validate=False)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, name={self.name!r})"


def _validate_table(table: tuple[tuple[int, ...], ...]) -> None:
    n = len(table)
    if n == 0:
        raise NotAGroupError("shape", "empty table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotAGroupError("shape", f"row {i}")
        for v in row:
            if not 0 <= v < n:
                raise NotAGroupError("range", f"row {i} value {v}")
    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            raise NotAGroupError("identity", f"element {a}")
    for a in range(n):
        if 0 not in table[a]:
            raise NotAGroupError("inverses", f"element {a}")
        b = table[a].index(0)
        if table[b][a] != 0:
            raise NotAGroupError("inverses", f"element {a}")
    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            row_ab = table[ab]
            row_b = table[b]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    raise NotAGroupError("associativity", (a, b, c))


def group_from_cayley(
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    descriptor: dict[str, Any] | None = None,
) -> FiniteGroup:
    """
    Validate a Cayley table and wrap it as a FiniteGroup.

    Raises:
        NotAGroupError: If the table is not square over 0..n-1, element 0 is not the
            identity, some element lacks a two-sided inverse, or a triple fails
            associativity
    """
    group = FiniteGroup(table, labels=labels, descriptor=descriptor)
    logger.debug(f"Validated Cayley table of order {group.order}")
    return group


@dataclass(frozen=True, eq=False)
class Subgroup:
    """
    A subgroup of a FiniteGroup given by its sorted member indices.

    Validated on construction: contains the identity, closed under product and inverse.
    """
    parent: FiniteGroup
    members: tuple[int, ...]
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        if self.validate:
            self._check()

    def _check(self) -> None:
        G = self.parent
        member_set = set(self.members)
        if not self.members or self.members[0] != 0:
            raise ValueError("Subgroup must contain the identity")
        for a in self.members:
            if not 0 <= a < G.order:
                raise ValueError(f"Element {a} is not in the group")
            if G.inv(a) not in member_set:
                raise ValueError(f"Subgroup is not closed under inverses at {a}")
            for b in self.members:
                if G.mul(a, b) not in member_set:
                    raise ValueError(f"Subgroup is not closed under products at ({a}, {b})")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, element: int) -> bool:
        return element in self.member_set

    def issubset(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, greedily chosen in index order."""
        return _greedy_generators(self.parent, self.members)

    @cached_property
    def is_cyclic(self) -> bool:
        return any(self.parent.element_order(a) == self.order for a in self.members)

    @cached_property
    def is_abelian(self) -> bool:
        G = self.parent
        return all(G.mul(a, b) == G.mul(b, a) for a in self.members for b in self.members)

    def as_group(self) -> FiniteGroup:
        """
        The subgroup as a FiniteGroup in its own right.

        Element i of the result is parent element members[i]; identity stays at 0.
        """
        return self._own_group

    @cached_property
    def _own_group(self) -> FiniteGroup:
        G = self.parent
        position = {a: i for i, a in enumerate(self.members)}
        table = [[position[G.mul(a, b)] for b in self.members] for a in self.members]
        labels = [G.label(a) for a in self.members]
        perms = [G.permutations[a] for a in self.members] if G.permutations is not None else None
        descriptor = {"family": "subgroup", "parent": G.name, "generators": [G.label(a) for a in self.generators]}
        return FiniteGroup(table, labels=labels, descriptor=descriptor, permutations=perms, validate=False)

    def describe(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "members": list(self.members),
            "generators": [self.parent.label(a) for a in self.generators],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.members == other.members and self.parent.same_as(other.parent)

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        gens = ", ".join(self.parent.label(a) for a in self.generators)
        return f"Subgroup(order={self.order}, generators=<{gens}>)"


def _closure(G: FiniteGroup, generators: Iterable[int]) -> set[int]:
    gens = [g for g in generators if g != 0]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = G.mul(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def _greedy_generators(G: FiniteGroup, members: Iterable[int]) -> tuple[int, ...]:
    gens: list[int] = []
    span = {0}
    for a in members:
        if a not in span:
            gens.append(a)
            span = _closure(G, gens)
    return tuple(gens)


def require_same_group(*objects: Any) -> FiniteGroup:
    """Return the common parent group, raising GroupMismatchError otherwise."""
    groups = [o.parent if isinstance(o, Subgroup) else o for o in objects]
    first = groups[0]
    for other in groups[1:]:
        if not first.same_as(other):
            raise GroupMismatchError("Objects are defined over different groups")
    return first


@dataclass(frozen=True, eq=False)
class CosetSpace:
    """
    Left cosets gH of a subgroup with the left G-action.

    Cosets are ordered by smallest member, so the coset of the identity is index 0.
    action[g][c] is the index of g * (coset c).
    """
    parent: FiniteGroup
    stabilizer: Subgroup
    cosets: tuple[tuple[int, ...], ...]
    action: tuple[tuple[int, ...], ...]
    coset_of: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.cosets)

    def act(self, g: int, c: int) -> int:
        return self.action[g][c]

    def representative(self, c: int) -> int:
        return self.cosets[c][0]
