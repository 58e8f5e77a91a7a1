"""
Decomposition family parser.

    cyclic            maximal cyclic subgroups (the same Sha as all cyclic subgroups)
    all-cyclic        every cyclic subgroup
    explicit:<json>   a JSON list of subgroup specifications, or explicit:@path
"""

import logging
from typing import Any

from ..exceptions import InvalidInputError
from ..groups import FiniteGroup, Subgroup, cyclic_subgroups, maximal_cyclic_subgroups
from .base import BaseParser
from .subgroup import SubgroupSpecParser

logger = logging.getLogger(__name__)

DEFAULT_FAMILY = "cyclic"
EXPLICIT_PREFIX = "explicit:"


class FamilySpecParser(BaseParser):
    """Parser for --family values."""

    @classmethod
    def parse(cls, group: FiniteGroup, spec: str = DEFAULT_FAMILY) -> list[Subgroup]:
        """
        Resolve a family specification to subgroups of group.

        Raises:
            InvalidInputError: Unknown keyword, malformed JSON or an empty family
        """
        text = spec.strip()
        if text == "cyclic":
            family = maximal_cyclic_subgroups(group)
        elif text == "all-cyclic":
            family = cyclic_subgroups(group)
        elif text.startswith(EXPLICIT_PREFIX):
            entries = cls.require_list(cls.load_json(text[len(EXPLICIT_PREFIX):], "family"), "family")
            family = []
            seen = set()
            for entry in entries:
                D = SubgroupSpecParser.parse(group, entry)
                if D.members not in seen:
                    seen.add(D.members)
                    family.append(D)
        else:
            raise InvalidInputError(f"Unknown family {spec!r}: expected cyclic, all-cyclic or explicit:<json>")
        if not family:
            raise InvalidInputError("Decomposition family must not be empty")
        logger.debug(f"Family {text!r} on {group.name}: {len(family)} subgroups")
        return family


def resolve_family(group: FiniteGroup, spec: str = DEFAULT_FAMILY) -> tuple[list[Subgroup], dict[str, Any]]:
    """The family members and the report descriptor {"spec", "members"}."""
    family = FamilySpecParser.parse(group, spec)
    return family, {"spec": spec.strip(), "members": [D.describe() for D in family]}
