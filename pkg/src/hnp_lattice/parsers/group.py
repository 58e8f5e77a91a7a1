"""
Group input parser.

Accepted forms:
    - a catalog expression, e.g. "dihedral(4)" or "direct_product(cyclic(2),cyclic(2))"
    - {"catalog": "<expression>"}
    - {"permutations": [[...], "(1 2)", ...], "degree": d}
    - {"cayley": [[...], ...], "labels": [...]}   (labels optional)

Every JSON form may carry "order", which is checked against the built group.
JSON may also be read from a file with "@path".
"""

import logging
from typing import Any

from ..constants import DEFAULT_CLOSURE_CAP
from ..exceptions import InvalidInputError
from ..groups import FiniteGroup, group_from_cayley, group_from_permutations, parse_group_expression
from .base import BaseParser

logger = logging.getLogger(__name__)

GROUP_FORMS = ("catalog", "permutations", "cayley")


class GroupSpecParser(BaseParser):
    """Parser for group specifications given on the command line or in reports."""

    @classmethod
    def parse(cls, spec: str | dict[str, Any], closure_cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
        """
        Build a group from a specification.

        Args:
            spec: Catalog expression, JSON text, @path, or an already decoded object
            closure_cap: Largest permutation group to close

        Returns:
            The group

        Raises:
            InvalidInputError: Malformed specification or order mismatch
            UnsupportedFamilyError: Unknown catalog family
            NotAGroupError: Cayley table fails validation
            OrderCapExceededError: Permutation closure exceeds closure_cap
        """
        if isinstance(spec, str):
            if not cls.looks_like_json(spec):
                return parse_group_expression(spec)
            spec = cls.load_json(spec, "group")
        if isinstance(spec, str):
            return parse_group_expression(spec)
        if not isinstance(spec, dict):
            raise InvalidInputError(f"Group must be a JSON object or a catalog expression, got {type(spec).__name__}")

        forms = [key for key in GROUP_FORMS if key in spec]
        if len(forms) != 1:
            raise InvalidInputError(f"Group needs exactly one of {list(GROUP_FORMS)}, got {sorted(spec)}")
        form = forms[0]

        if form == "catalog":
            expression = spec["catalog"]
            if not isinstance(expression, str):
                raise InvalidInputError(f"'catalog' must be a string, got {expression!r}")
            group = parse_group_expression(expression)
        elif form == "permutations":
            degree = cls.require_int(cls.require_key(spec, "degree", "group"), "degree", minimum=1)
            generators = cls.require_list(spec["permutations"], "permutations")
            group = group_from_permutations(generators, degree, cap=closure_cap)
        else:
            table = cls.require_list(spec["cayley"], "cayley")
            for row in table:
                cls.require_list(row, "cayley row")
            labels = spec.get("labels")
            if labels is not None:
                labels = [str(v) for v in cls.require_list(labels, "labels")]
                if len(labels) != len(table):
                    raise InvalidInputError(f"Expected {len(table)} labels, got {len(labels)}")
            group = group_from_cayley(table, labels=labels, descriptor={"family": "custom"})

        if "order" in spec:
            expected = cls.require_int(spec["order"], "order", minimum=1)
            if expected != group.order:
                raise InvalidInputError(f"Group has order {group.order}, input says {expected}")
        logger.debug(f"Parsed {form} group {group.name} of order {group.order}")
        return group

    @staticmethod
    def describe(group: FiniteGroup) -> dict[str, Any]:
        """
        A JSON descriptor that parse() turns back into the same group.

        Catalog groups are identified by expression, permutation groups by their
        generators, anything else by its Cayley table.
        """
        descriptor = group.descriptor
        if descriptor.get("expression"):
            return {"catalog": descriptor["expression"], "order": group.order}
        if descriptor.get("family") == "permutation":
            return {
                "permutations": list(descriptor["generators"]),
                "degree": descriptor["degree"],
                "order": group.order,
            }
        return {
            "cayley": [list(row) for row in group.cayley],
            "labels": list(group.labels),
            "order": group.order,
        }
