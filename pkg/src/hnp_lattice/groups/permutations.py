"""
Permutation group input.

Permutations act on {1..degree}; internally they are 0-based image tuples and the
product is composition, (g*h)(x) = g(h(x)).
"""

import logging
import re
from collections.abc import Sequence

from sympy.combinatorics import Permutation, PermutationGroup

from ..constants import DEFAULT_CLOSURE_CAP
from ..exceptions import InvalidInputError, OrderCapExceededError
from .group import FiniteGroup

logger = logging.getLogger(__name__)

_CYCLE_RE = re.compile(r"\(([^()]*)\)")

PermutationSpec = Sequence[int] | str


def parse_permutation(spec: PermutationSpec, degree: int) -> tuple[int, ...]:
    """
    Convert a 1-based image list or cycle string to a 0-based image tuple.

    "(1 2)(3 4)" and [2, 1, 4, 3] describe the same permutation of degree 4; "()" is
    the identity.

    Raises:
        InvalidInputError: If the input is not a bijection on {1..degree}
    """
    if isinstance(spec, str):
        text = spec.strip()
        if _CYCLE_RE.sub("", text).strip():
            raise InvalidInputError(f"Malformed cycle notation: {spec!r}")
        images = list(range(degree))
        for body in _CYCLE_RE.findall(text):
            tokens = body.replace(",", " ").split()
            try:
                points = [int(t) - 1 for t in tokens]
            except ValueError:
                raise InvalidInputError(f"Malformed cycle notation: {spec!r}")
            if len(set(points)) != len(points) or any(not 0 <= p < degree for p in points):
                raise InvalidInputError(f"Cycle {body!r} is not valid on {degree} points")
            for a, b in zip(points, points[1:] + points[:1]):
                images[a] = b
        # disjointness is required for cycle products written this way
        if sorted(images) != list(range(degree)):
            raise InvalidInputError(f"Cycles in {spec!r} are not disjoint")
        return tuple(images)

    try:
        images = [int(v) - 1 for v in spec]
    except (TypeError, ValueError):
        raise InvalidInputError(f"Permutation must be a list of integers or a cycle string, got {spec!r}")
    if len(images) != degree or sorted(images) != list(range(degree)):
        raise InvalidInputError(f"{list(spec)} is not a permutation of 1..{degree}")
    return tuple(images)


def compose(g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
    """(g*h)(x) = g(h(x))"""
    return tuple(g[x] for x in h)


def cycle_label(perm: tuple[int, ...]) -> str:
    """1-based disjoint cycle notation, '()' for the identity."""
    cycles = Permutation(list(perm)).cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p + 1) for p in cycle) + ")" for cycle in cycles)


def group_from_permutations(
    generators: Sequence[PermutationSpec],
    degree: int,
    cap: int = DEFAULT_CLOSURE_CAP,
    descriptor: dict | None = None,
) -> FiniteGroup:
    """
    Generate a permutation group by breadth-first closure.

    Element 0 is the identity; later elements appear in BFS order over the
    generators as given.

    Raises:
        InvalidInputError: If a generator is not a permutation of {1..degree}
        OrderCapExceededError: If the group order exceeds cap
    """
    if degree < 1:
        raise InvalidInputError(f"Degree must be positive, got {degree}")
    perms = [parse_permutation(g, degree) for g in generators]

    order = int(PermutationGroup([Permutation(list(p)) for p in perms] or [Permutation(degree - 1)]).order())
    if order > cap:
        raise OrderCapExceededError(order, cap, what="permutation group")

    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    queue = 0
    while queue < len(elements):
        x = elements[queue]
        queue += 1
        for s in perms:
            y = compose(s, x)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)

    table = [[index[compose(a, b)] for b in elements] for a in elements]
    labels = [cycle_label(p) for p in elements]
    desc = descriptor or {
        "family": "permutation",
        "degree": degree,
        "generators": [cycle_label(p) for p in perms],
    }
    logger.debug(f"Permutation closure on {degree} points: order {len(elements)}")
    return FiniteGroup(table, labels=labels, descriptor=desc, permutations=elements, validate=False)
