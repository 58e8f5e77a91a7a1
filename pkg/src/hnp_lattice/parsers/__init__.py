"""
Input parsers for groups, subgroups, decomposition families and reports.
"""

from .base import BaseParser
from .family import DEFAULT_FAMILY, FamilySpecParser, resolve_family
from .group import GroupSpecParser
from .report import ReportParser
from .subgroup import SubgroupSpecParser

__all__ = [
    'BaseParser',
    'GroupSpecParser',
    'SubgroupSpecParser',
    'FamilySpecParser',
    'ReportParser',
    'DEFAULT_FAMILY',
    'resolve_family',
]
