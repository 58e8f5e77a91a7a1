"""
Subgroup input parser.

Accepted forms:
    - "trivial" or "whole"
    - {"members": [0, 3, ...]}                        element indices, must form a subgroup
    - {"generators": [3, "r", "(1 2 3 4)", [2, 1, 3, 4]]}
      generators are element indices, element labels, cycle strings or 1-based
      image lists (the last two for permutation groups only)

Bare lists are read as generators. An "order" key is checked when present.
"""

import logging
from typing import Any

from ..exceptions import InvalidInputError
from ..groups import FiniteGroup, Subgroup, generated, parse_permutation
from .base import BaseParser

logger = logging.getLogger(__name__)


class SubgroupSpecParser(BaseParser):
    """Parser for subgroup specifications relative to a parent group."""

    @classmethod
    def parse(cls, group: FiniteGroup, spec: str | dict[str, Any] | list) -> Subgroup:
        """
        Build a subgroup of group.

        Raises:
            InvalidInputError: Malformed specification, unknown element, members not
                closed under the group law, or order mismatch
        """
        if isinstance(spec, str):
            keyword = spec.strip().lower()
            if keyword == "trivial":
                return group.trivial()
            if keyword == "whole":
                return group.whole()
            spec = cls.load_json(spec, "subgroup")
        if isinstance(spec, list):
            spec = {"generators": spec}
        if not isinstance(spec, dict):
            raise InvalidInputError(f"Subgroup must be a JSON object, got {type(spec).__name__}")

        if "members" in spec:
            members = [
                cls._index(group, cls.require_int(a, "member"))
                for a in cls.require_list(spec["members"], "members")
            ]
            try:
                subgroup = Subgroup(group, tuple(members))
            except ValueError as e:
                raise InvalidInputError(f"Members do not form a subgroup: {e}")
        elif "generators" in spec:
            gens = [cls.element(group, g) for g in cls.require_list(spec["generators"], "generators")]
            subgroup = generated(group, gens)
        else:
            raise InvalidInputError(f"Subgroup needs 'members' or 'generators', got {sorted(spec)}")

        if "order" in spec:
            expected = cls.require_int(spec["order"], "order", minimum=1)
            if expected != subgroup.order:
                raise InvalidInputError(f"Subgroup has order {subgroup.order}, input says {expected}")
        return subgroup

    @staticmethod
    def _index(group: FiniteGroup, a: int) -> int:
        if not 0 <= a < group.order:
            raise InvalidInputError(f"Element index {a} out of range for order {group.order}")
        return a

    @classmethod
    def element(cls, group: FiniteGroup, spec: Any) -> int:
        """
        Resolve one element specification to an index.

        Strings are tried as element labels first, then as cycle notation.
        """
        if isinstance(spec, bool):
            raise InvalidInputError(f"Not an element: {spec!r}")
        if isinstance(spec, int):
            return cls._index(group, spec)
        if isinstance(spec, str):
            if spec in group.labels:
                return group.index_of_label(spec)
            if group.permutations is not None and spec.strip().startswith("("):
                return cls._permutation(group, parse_permutation(spec, len(group.permutations[0])))
            raise InvalidInputError(f"No element {spec!r} in {group.name}")
        if isinstance(spec, list) and group.permutations is not None:
            return cls._permutation(group, parse_permutation(spec, len(group.permutations[0])))
        raise InvalidInputError(f"Cannot read an element of {group.name} from {spec!r}")

    @staticmethod
    def _permutation(group: FiniteGroup, perm: tuple[int, ...]) -> int:
        try:
            return group.index_of_permutation(perm)
        except KeyError as e:
            raise InvalidInputError(str(e))
