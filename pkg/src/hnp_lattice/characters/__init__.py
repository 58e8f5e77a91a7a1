"""
Linear characters, Ker e, H^2(Z)' and the derived-subgroup criterion.
"""

from .abelianization import (
    Abelianization,
    Character,
    CharacterSubgroup,
    abelianization,
    dual_group,
    restrict_character,
    restriction_matrix,
)
from .criteria import (
    CriteriaOrder,
    derived_criterion,
    derived_criterion_by_quotients,
    family_covers_group,
    h2z_prime,
    hnp_gate,
    ker_e,
    ker_e_for_subgroup,
    ker_e_is_full,
    local_stabilizers,
    sha2_order_by_criteria,
    vanishing_characters,
)

__all__ = [
    "Abelianization",
    "Character",
    "CharacterSubgroup",
    "CriteriaOrder",
    "abelianization",
    "dual_group",
    "restrict_character",
    "restriction_matrix",
    "vanishing_characters",
    "ker_e",
    "ker_e_for_subgroup",
    "local_stabilizers",
    "h2z_prime",
    "hnp_gate",
    "sha2_order_by_criteria",
    "derived_criterion",
    "derived_criterion_by_quotients",
    "ker_e_is_full",
    "family_covers_group",
]
