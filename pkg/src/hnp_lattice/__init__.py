"""
hnp-lattice

Computes the obstruction to the projective (multinorm) Hasse norm principle for a
finite group G and subgroups G1, ..., Gn, through the character lattices of the
associated norm-one tori, and compares it with the Hasse norm principle of each field.

Two routes are provided: direct group cohomology of the lattices from the
normalized bar resolution, and character criteria (Ker e, H^2(Z)', the derived
subgroup criterion) that work at orders where the bar resolution is too large.
"""

from .analyzer import NormPrincipleAnalyzer, reduce_stabilizers
from .cache import ReportCache
from .config import Settings
from .constants import PACKAGE_VERSION, ExitCode
from .exceptions import (
    ExactnessError,
    GroupMismatchError,
    HNPLatticeError,
    IndivisibleCountsError,
    InvalidInputError,
    NotAGroupError,
    NotCyclicError,
    NotNormalError,
    NotNormalOperandError,
    NotStableError,
    OrderCapExceededError,
    QuotientNotFreeError,
    UnsupportedFamilyError,
)
from .models import AnalysisReport, FindingKind, LocalCohomology, ScanFinding
from .parsers import GroupSpecParser, ReportParser, SubgroupSpecParser, resolve_family
from .scanner import CatalogScanner, ScanMode, ScanSummary

__version__ = PACKAGE_VERSION

__all__ = [
    # Orchestration
    'NormPrincipleAnalyzer',
    'CatalogScanner',
    'ScanMode',
    'ScanSummary',
    'ReportCache',
    'Settings',
    'reduce_stabilizers',
    # Parsers
    'GroupSpecParser',
    'SubgroupSpecParser',
    'ReportParser',
    'resolve_family',
    # Models
    'AnalysisReport',
    'LocalCohomology',
    'ScanFinding',
    'FindingKind',
    'ExitCode',
    # Exceptions
    'HNPLatticeError',
    'InvalidInputError',
    'NotAGroupError',
    'OrderCapExceededError',
    'UnsupportedFamilyError',
    'NotNormalError',
    'NotNormalOperandError',
    'GroupMismatchError',
    'QuotientNotFreeError',
    'NotStableError',
    'NotCyclicError',
    'IndivisibleCountsError',
    'ExactnessError',
]
