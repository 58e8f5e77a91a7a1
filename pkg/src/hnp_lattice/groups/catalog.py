"""
Catalog of group families with frozen element orderings.

Orderings (element index -> element):
    cyclic(n)           k -> a^k, k = 0..n-1
    dihedral(n)         k + n*f -> r^k s^f (order 2n); r^a s^f * r^b s^g = r^(a + (-1)^f b) s^(f+g)
    symmetric(n)        lexicographic order of permutations of 1..n (n <= 4)
    quaternion8         1, -1, i, -i, j, -j, k, -k
    heisenberg(p)       a*p^2 + b*p + c -> (a, b, c); (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b')
    direct_product(A,B) x*|B| + y -> (x, y)

Expressions nest, e.g. "direct_product(cyclic(2),dihedral(4))".
"""

import itertools
import logging
import re
from collections.abc import Iterator
from dataclasses import dataclass, field

import sympy

from ..constants import MAX_SYMMETRIC_DEGREE
from ..exceptions import InvalidInputError, UnsupportedFamilyError
from .group import FiniteGroup
from .permutations import compose, cycle_label

logger = logging.getLogger(__name__)

FAMILIES = ("cyclic", "dihedral", "symmetric", "quaternion8", "heisenberg", "direct_product")

# Scan filter tags
TAGS = ("cyclic", "abelian", "dihedral", "symmetric", "quaternion", "heisenberg", "product")


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise UnsupportedFamilyError("cyclic", f"n must be positive, got {n}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + ["a" if k == 1 else f"a^{k}" for k in range(1, n)]
    return FiniteGroup(table, labels=labels, descriptor=_descriptor("cyclic", f"cyclic({n})"), validate=False)


def dihedral(n: int) -> FiniteGroup:
    if n < 1:
        raise UnsupportedFamilyError("dihedral", f"n must be positive, got {n}")

    def index(k: int, f: int) -> int:
        return (k % n) + n * f

    table = [[0] * (2 * n) for _ in range(2 * n)]
    for f, a, g, b in itertools.product(range(2), range(n), range(2), range(n)):
        table[index(a, f)][index(b, g)] = index(a + (-1) ** f * b, (f + g) % 2)

    def label(k: int, f: int) -> str:
        rot = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        text = rot + ("s" if f else "")
        return text or "e"

    labels = [label(k, f) for f in range(2) for k in range(n)]
    return FiniteGroup(table, labels=labels, descriptor=_descriptor("dihedral", f"dihedral({n})"), validate=False)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= MAX_SYMMETRIC_DEGREE:
        raise UnsupportedFamilyError("symmetric", f"degree must be 1..{MAX_SYMMETRIC_DEGREE}, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[compose(a, b)] for b in perms] for a in perms]
    labels = [cycle_label(p) for p in perms]
    return FiniteGroup(
        table,
        labels=labels,
        descriptor=_descriptor("symmetric", f"symmetric({n})"),
        permutations=perms,
        validate=False,
    )


# Unit quaternion products: _QUAT[u][v] = (sign, unit) with units 0=1, 1=i, 2=j, 3=k
_QUAT = (
    ((1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0)),
)


def quaternion8() -> FiniteGroup:
    def index(sign: int, unit: int) -> int:
        return 2 * unit + (0 if sign > 0 else 1)

    table = [[0] * 8 for _ in range(8)]
    for x, y in itertools.product(range(8), repeat=2):
        sx, ux = (1 if x % 2 == 0 else -1), x // 2
        sy, uy = (1 if y % 2 == 0 else -1), y // 2
        s, u = _QUAT[ux][uy]
        table[x][y] = index(sx * sy * s, u)
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return FiniteGroup(table, labels=labels, descriptor=_descriptor("quaternion8", "quaternion8"), validate=False)


def heisenberg(p: int) -> FiniteGroup:
    if not sympy.isprime(p):
        raise UnsupportedFamilyError("heisenberg", f"p must be prime, got {p}")
    elements = list(itertools.product(range(p), repeat=3))
    index = {e: i for i, e in enumerate(elements)}
    table = [
        [index[((a + x) % p, (b + y) % p, (c + z + a * y) % p)] for (x, y, z) in elements]
        for (a, b, c) in elements
    ]
    labels = [f"({a},{b},{c})" for a, b, c in elements]
    return FiniteGroup(table, labels=labels, descriptor=_descriptor("heisenberg", f"heisenberg({p})"), validate=False)


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    m = B.order
    table = [
        [A.mul(x1, x2) * m + B.mul(y1, y2) for x2 in range(A.order) for y2 in range(m)]
        for x1 in range(A.order) for y1 in range(m)
    ]
    labels = [f"({A.label(x)},{B.label(y)})" for x in range(A.order) for y in range(m)]
    expression = f"direct_product({A.name},{B.name})"
    return FiniteGroup(table, labels=labels, descriptor=_descriptor("direct_product", expression), validate=False)


def _descriptor(family: str, expression: str) -> dict:
    return {"family": family, "expression": expression}


def catalog_group(family: str, *params) -> FiniteGroup:
    """
    Build a catalog group.

    Args:
        family: One of FAMILIES
        params: Integers for cyclic/dihedral/symmetric/heisenberg; two FiniteGroups
            (or expressions) for direct_product; nothing for quaternion8

    Raises:
        UnsupportedFamilyError: Unknown family or parameters out of range
    """
    if family == "direct_product":
        if len(params) != 2:
            raise UnsupportedFamilyError(family, "needs exactly two factors")
        A, B = (parse_group_expression(p) if isinstance(p, str) else p for p in params)
        return direct_product(A, B)
    if family == "quaternion8":
        if params:
            raise UnsupportedFamilyError(family, "takes no parameters")
        return quaternion8()
    builders = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric, "heisenberg": heisenberg}
    if family not in builders:
        raise UnsupportedFamilyError(family)
    if len(params) != 1 or not isinstance(params[0], int):
        raise UnsupportedFamilyError(family, "needs one integer parameter")
    return builders[family](params[0])


_TOKEN_RE = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+|[(),])")


def _tokenize(expression: str) -> list[str]:
    tokens = []
    pos = 0
    text = expression.strip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            raise InvalidInputError(f"Unexpected character at position {pos} in {expression!r}")
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


def parse_group_expression(expression: str) -> FiniteGroup:
    """
    Parse and build a catalog expression such as "direct_product(cyclic(2),cyclic(2))".

    Raises:
        InvalidInputError: Malformed expression
        UnsupportedFamilyError: Unknown family
    """
    tokens = _tokenize(expression)
    group, rest = _parse(tokens, expression)
    if rest:
        raise InvalidInputError(f"Trailing input {''.join(rest)!r} in {expression!r}")
    return group


def _parse(tokens: list[str], source: str) -> tuple[FiniteGroup, list[str]]:
    if not tokens or not re.match(r"[A-Za-z_]", tokens[0]):
        raise InvalidInputError(f"Expected a family name in {source!r}")
    name, rest = tokens[0], tokens[1:]
    if name not in FAMILIES:
        raise UnsupportedFamilyError(name)
    if name == "quaternion8" and (not rest or rest[0] != "("):
        return quaternion8(), rest
    if not rest or rest[0] != "(":
        raise InvalidInputError(f"Expected '(' after {name} in {source!r}")
    rest = rest[1:]
    args: list = []
    while rest and rest[0] != ")":
        if rest[0].isdigit():
            args.append(int(rest[0]))
            rest = rest[1:]
        else:
            sub, rest = _parse(rest, source)
            args.append(sub)
        if rest and rest[0] == ",":
            rest = rest[1:]
    if not rest:
        raise InvalidInputError(f"Unbalanced parentheses in {source!r}")
    return catalog_group(name, *args), rest[1:]


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog member: its expression, order and filter tags."""
    expression: str
    order: int
    tags: frozenset[str] = field(default_factory=frozenset)

    def build(self) -> FiniteGroup:
        return parse_group_expression(self.expression)


def _abelian_types(max_order: int) -> Iterator[tuple[int, ...]]:
    """Invariant factor sequences d1 | d2 | ... (d1 >= 2) with product <= max_order."""
    def extend(prefix: tuple[int, ...], product: int):
        yield prefix
        # the next factor is a multiple of the last one
        step = prefix[-1]
        m = step
        while product * m <= max_order:
            yield from extend(prefix + (m,), product * m)
            m += step

    for d in range(2, max_order + 1):
        yield from extend((d,), d)


def _nested_product(expressions: list[str]) -> str:
    if len(expressions) == 1:
        return expressions[0]
    return f"direct_product({expressions[0]},{_nested_product(expressions[1:])})"


def catalog_entries(max_order: int, min_order: int = 1, tags: set[str] | None = None) -> list[CatalogEntry]:
    """
    Catalog members with min_order <= order <= max_order, optionally filtered by tags.

    Abelian groups appear once per isomorphism type (cyclic(n) for the cyclic ones,
    nested direct products of cyclic groups in invariant-factor form otherwise).
    """
    unknown = set(tags or ()) - set(TAGS)
    if unknown:
        raise InvalidInputError(f"Unknown catalog tags: {sorted(unknown)}")
    entries: list[CatalogEntry] = []
    entries.append(CatalogEntry("cyclic(1)", 1, frozenset({"cyclic", "abelian"})))
    for factors in _abelian_types(max_order):
        order = 1
        for d in factors:
            order *= d
        if len(factors) == 1:
            entries.append(CatalogEntry(f"cyclic({factors[0]})", order, frozenset({"cyclic", "abelian"})))
        else:
            expression = _nested_product([f"cyclic({d})" for d in factors])
            entries.append(CatalogEntry(expression, order, frozenset({"abelian", "product"})))
    for n in range(3, max_order // 2 + 1):
        entries.append(CatalogEntry(f"dihedral({n})", 2 * n, frozenset({"dihedral"})))
    for n in range(3, MAX_SYMMETRIC_DEGREE + 1):
        order = 1
        for k in range(2, n + 1):
            order *= k
        if order <= max_order:
            entries.append(CatalogEntry(f"symmetric({n})", order, frozenset({"symmetric"})))
    if max_order >= 8:
        entries.append(CatalogEntry("quaternion8", 8, frozenset({"quaternion"})))
    for p in sympy.primerange(2, max_order + 1):
        if p ** 3 <= max_order:
            entries.append(CatalogEntry(f"heisenberg({p})", p ** 3, frozenset({"heisenberg"})))
    for n in range(3, max_order // 4 + 1):
        entries.append(CatalogEntry(f"direct_product(cyclic(2),dihedral({n}))", 4 * n, frozenset({"product"})))
    if max_order >= 16:
        entries.append(CatalogEntry("direct_product(cyclic(2),quaternion8)", 16, frozenset({"product"})))

    selected = [
        e for e in entries
        if min_order <= e.order <= max_order and (not tags or e.tags & set(tags))
    ]
    return sorted(selected, key=lambda e: (e.order, e.expression))
