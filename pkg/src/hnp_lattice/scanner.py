"""
Catalog scans for failures of HNP => PHNP.

For every catalog group in range, every unordered pair (H1, H2) of normal
subgroups with trivial intersection (H1 = H2 allowed) is tested:

    criteria   the derived-subgroup criterion, cheap at any order
    lattice    the full analysis; orders above the cohomology cap are skipped

Tasks run in a process pool with --jobs > 1; findings are sorted before they are
returned, so the output does not depend on scheduling.
"""

import logging
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import sympy

from .analyzer import NormPrincipleAnalyzer
from .characters import derived_criterion, derived_criterion_by_quotients
from .config import Settings
from .constants import DEFAULT_SUBGROUP_CAP
from .groups import CatalogEntry, FiniteGroup, Subgroup, intersect, normal_subgroups, parse_group_expression
from .models import AnalysisReport, FindingKind, ScanFinding
from .parsers import DEFAULT_FAMILY, GroupSpecParser

logger = logging.getLogger(__name__)


class ScanMode(str, Enum):
    CRITERIA = "criteria"
    LATTICE = "lattice"


@dataclass(frozen=True)
class ScanTask:
    """One group and one stabilizer pair; picklable for the process pool."""
    expression: str
    pair: tuple[tuple[int, ...], tuple[int, ...]]
    mode: ScanMode
    family: str = DEFAULT_FAMILY
    flag_differences: bool = False
    settings: Settings = field(default_factory=Settings)


@dataclass
class ScanSummary:
    """Counts reported at the end of a scan."""
    groups: int = 0
    skipped_groups: list[str] = field(default_factory=list)
    pairs: int = 0
    filtered_pairs: int = 0
    findings: list[ScanFinding] = field(default_factory=list)


def _is_prime_power(n: int) -> bool:
    return len(sympy.primefactors(n)) <= 1


def candidate_pairs(
    G: FiniteGroup,
    prime_power_filter: bool = False,
    subgroup_cap: int | None = DEFAULT_SUBGROUP_CAP,
) -> tuple[list[tuple[Subgroup, Subgroup]], int]:
    """
    Unordered pairs of normal subgroups with trivial intersection, and how many were filtered.

    With prime_power_filter, pairs whose indices |G/H1| and |G/H2| are both prime
    powers are dropped.
    """
    normals = normal_subgroups(G, cap=subgroup_cap)
    pairs = []
    filtered = 0
    for i, A in enumerate(normals):
        for B in normals[i:]:
            if not intersect(A, B).is_trivial:
                continue
            if prime_power_filter and _is_prime_power(A.index) and _is_prime_power(B.index):
                filtered += 1
                continue
            pairs.append((A, B))
    return pairs, filtered


def run_task(task: ScanTask) -> list[ScanFinding]:
    """Evaluate one task. Module level so that worker processes can import it."""
    G = parse_group_expression(task.expression)
    A, B = (Subgroup(G, members, validate=False) for members in task.pair)
    descriptor = GroupSpecParser.describe(G)
    stabilizers = [A.describe(), B.describe()]

    if task.mode is ScanMode.CRITERIA:
        if derived_criterion(G, [A, B]):
            return []
        witness = derived_criterion_by_quotients(G, [A, B])
        evidence: dict[str, Any] = {"derived_criterion": False}
        if witness is not None:
            evidence["witness"] = G.label(witness)
        return [ScanFinding(descriptor, stabilizers, FindingKind.DERIVED_CRITERION_FAILURE, evidence)]

    analyzer = NormPrincipleAnalyzer(task.settings)
    report = analyzer.analyze(G, [A, B], family=task.family)
    return lattice_findings(report, flag_differences=task.flag_differences)


def lattice_findings(report: AnalysisReport, flag_differences: bool = False) -> list[ScanFinding]:
    """Findings of one lattice-mode report."""
    kinds = [k for k in report.findings if not (flag_differences and k is FindingKind.SHA_NONTRIVIAL)]
    if flag_differences and report.sha_phnp != report.sha_hnp:
        kinds.append(FindingKind.SHA_NONTRIVIAL)
    findings = []
    for kind in kinds:
        evidence: dict[str, Any]
        if kind is FindingKind.DERIVED_CRITERION_FAILURE:
            evidence = {"derived_criterion": False}
        elif kind is FindingKind.SHA_NONTRIVIAL:
            evidence = {
                "sha_phnp": report.sha_phnp,
                "sha_hnp": report.sha_hnp,
                "sha_hnp_summands": report.sha_hnp_summands,
            }
        else:
            evidence = {
                "sha_phnp": report.sha_phnp,
                "sha_order_by_criteria": report.sha_order_by_criteria,
                "ker_e_order": report.ker_e_order,
                "h2z_prime_order": report.h2z_prime_order,
            }
        findings.append(ScanFinding(report.group, report.stabilizers, kind, evidence))
    return findings


class CatalogScanner:
    """
    Runs scans over catalog entries.

    Example:
        scanner = CatalogScanner(Settings(jobs=4))
        summary = scanner.scan(catalog_entries(16, tags={"dihedral"}), mode=ScanMode.CRITERIA)
    """

    def __init__(self, settings: Settings | None = None):
        self.settings = settings or Settings()
        self._logger = logging.getLogger(__name__)

    def tasks(
        self,
        entries: Iterable[CatalogEntry | str],
        mode: ScanMode,
        family: str = DEFAULT_FAMILY,
        flag_differences: bool = False,
        prime_power_filter: bool = False,
        summary: ScanSummary | None = None,
    ) -> list[ScanTask]:
        """Expand catalog entries into tasks, skipping groups above the cap in lattice mode."""
        summary = summary if summary is not None else ScanSummary()
        tasks = []
        for entry in entries:
            expression = entry.expression if isinstance(entry, CatalogEntry) else entry
            G = parse_group_expression(expression)
            if mode is ScanMode.LATTICE and G.order > self.settings.max_order:
                self._logger.warning(f"Skipping {expression}: order {G.order} exceeds cap {self.settings.max_order}")
                summary.skipped_groups.append(expression)
                continue
            summary.groups += 1
            pairs, filtered = candidate_pairs(G, prime_power_filter, subgroup_cap=self.settings.subgroup_cap)
            summary.filtered_pairs += filtered
            for A, B in pairs:
                tasks.append(
                    ScanTask(
                        expression=expression,
                        pair=(A.members, B.members),
                        mode=mode,
                        family=family,
                        flag_differences=flag_differences,
                        settings=self.settings,
                    )
                )
        summary.pairs += len(tasks)
        return tasks

    def scan(
        self,
        entries: Sequence[CatalogEntry | str],
        mode: ScanMode = ScanMode.CRITERIA,
        family: str = DEFAULT_FAMILY,
        flag_differences: bool = False,
        prime_power_filter: bool = False,
    ) -> ScanSummary:
        """
        Scan the given catalog entries.

        Returns:
            Summary with findings sorted by (order, group, stabilizers, kind)

        Raises:
            InvalidInputError: Malformed catalog expression
            UnsupportedFamilyError: Unknown family in an expression
        """
        summary = ScanSummary()
        tasks = self.tasks(entries, mode, family, flag_differences, prime_power_filter, summary)
        self._logger.info(f"Scanning {summary.groups} groups, {len(tasks)} pairs in {mode.value} mode")

        findings: list[ScanFinding] = []
        if self.settings.jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.settings.jobs) as pool:
                for result in pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (4 * self.settings.jobs))):
                    findings.extend(result)
        else:
            for task in tasks:
                findings.extend(run_task(task))

        summary.findings = sorted(findings, key=ScanFinding.sort_key)
        for finding in summary.findings:
            self._logger.info(f"FOUND {finding.kind.value} in {finding.group.get('catalog')}")
        return summary
