"""
Norm principle analysis.

Runs the lattice constructions, the cohomology of the PHNP lattice and the
character criteria for one group, stabilizer family and decomposition family,
and collects the results in an AnalysisReport.

Example:
    analyzer = NormPrincipleAnalyzer(Settings(max_order=24))
    G = GroupSpecParser.parse("symmetric(4)")
    report = analyzer.analyze(G, [H1, H2], family="cyclic", criteria_only=True)
    print(report.sha_order_by_criteria, report.hnp_gate)
"""

import logging
import time
from collections.abc import Sequence
from contextlib import contextmanager
from typing import Any, Iterator

from .cache import ReportCache
from .characters import (
    Abelianization,
    derived_criterion,
    family_covers_group,
    ker_e_is_full,
    sha2_order_by_criteria,
)
from .cohomology import CohomologyGroup, cohomology, local_cohomology, restriction_map, sha, sha_kernel
from .config import Settings
from .exceptions import InvalidInputError, NotNormalError, OrderCapExceededError
from .groups import FiniteGroup, Subgroup, require_same_group, stabilizer_core
from .linalg import FiniteAbelianGroup
from .lattices import GLattice, NormOneTori, build_norm_tori
from .models import AnalysisReport, LocalCohomology
from .parsers import DEFAULT_FAMILY, GroupSpecParser, resolve_family


def reduce_stabilizers(G: FiniteGroup, stabilizers: Sequence[Subgroup]) -> list[Subgroup]:
    """
    Drop stabilizers equal to G (the base field itself) while at least one remains.

    Duplicates are kept; a repeated field changes the PHNP lattice.
    """
    require_same_group(G, *stabilizers)
    kept = [H for H in stabilizers if not H.is_whole]
    return kept or list(stabilizers[:1])


class NormPrincipleAnalyzer:
    """
    Orchestrates one analysis run.

    The analyzer holds settings and an optional report cache; every analyze() call
    is independent, so one instance can serve a whole scan.
    """

    def __init__(self, settings: Settings | None = None, cache: ReportCache | None = None):
        """
        Initialize the analyzer.

        Args:
            settings: Caps and flags; defaults from constants when omitted
            cache: Report cache; opened from settings.cache_dir when omitted
        """
        self.settings = settings or Settings()
        if cache is None and self.settings.cache_dir:
            cache = ReportCache(self.settings.cache_dir)
        self.cache = cache
        self._logger = logging.getLogger(__name__)
        self._timings: dict[str, float] = {}

    @contextmanager
    def _stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        yield
        elapsed = time.perf_counter() - start
        self._timings[name] = round(self._timings.get(name, 0.0) + elapsed, 6)
        self._logger.info(f"Stage {name} finished in {elapsed:.3f}s")

    def analyze(
        self,
        group: FiniteGroup,
        stabilizers: Sequence[Subgroup],
        family: str = DEFAULT_FAMILY,
        criteria_only: bool = False,
        local: bool = False,
        reduce: bool = False,
        over_conjugates: bool = True,
    ) -> AnalysisReport:
        """
        Analyze the PHNP for the fields fixed by the given stabilizers.

        Args:
            group: Galois group of the Galois closure
            stabilizers: One subgroup per field
            family: Decomposition family specification (see FamilySpecParser)
            criteria_only: Skip the bar-resolution cohomology of the PHNP lattice
            local: Add per-subgroup H^1/H^2 for every family member
            reduce: Apply reduce_stabilizers first
            over_conjugates: Local kernels over every conjugate of a stabilizer

        Returns:
            The report; fields outside the selected mode stay None

        Raises:
            InvalidInputError: No stabilizers or a bad family specification
            OrderCapExceededError: |G| exceeds settings.max_order without criteria_only
        """
        if not stabilizers:
            raise InvalidInputError("At least one stabilizer is required")
        require_same_group(group, *stabilizers)
        max_order = self.settings.max_order
        if not criteria_only and group.order > max_order:
            raise OrderCapExceededError(group.order, max_order, what="bar resolution group")

        key = None
        if self.cache is not None:
            key = ReportCache.key(
                {
                    "group": GroupSpecParser.describe(group),
                    "stabilizers": [list(H.members) for H in stabilizers],
                    "family": family.strip(),
                },
                {
                    "criteria_only": criteria_only,
                    "local": local,
                    "reduce": reduce,
                    "over_conjugates": over_conjugates,
                    "max_order": max_order,
                    "timings": self.settings.timings,
                },
            )
            cached = self.cache.get(key)
            if cached is not None:
                return cached

        report = self._analyze(group, stabilizers, family, criteria_only, local, reduce, over_conjugates)
        if self.cache is not None and key is not None:
            self.cache.put(key, report)
        return report

    def _analyze(
        self,
        group: FiniteGroup,
        stabilizers: Sequence[Subgroup],
        family: str,
        criteria_only: bool,
        local: bool,
        reduce: bool,
        over_conjugates: bool,
    ) -> AnalysisReport:
        self._timings = {}
        if reduce:
            reduced = reduce_stabilizers(group, stabilizers)
            if len(reduced) != len(stabilizers):
                self._logger.info(f"Dropped {len(stabilizers) - len(reduced)} stabilizers equal to the whole group")
            stabilizers = reduced

        members, family_descriptor = resolve_family(group, family)
        report = AnalysisReport(
            group=GroupSpecParser.describe(group),
            stabilizers=[H.describe() for H in stabilizers],
            family=family_descriptor,
        )
        self._logger.info(
            f"Analyzing {group.name} (order {group.order}) with {len(stabilizers)} stabilizers, "
            f"family {family_descriptor['spec']} ({len(members)} subgroups)"
        )

        self._validate(group, stabilizers, members, report)

        with self._stage("lattices"):
            tori = build_norm_tori(group, stabilizers)
        report.phnp_rank = tori.phnp.rank
        report.hnp_rank = tori.hnp.rank
        report.hnp_summand_ranks = [J.rank for J in tori.summands]

        gate = None
        if not criteria_only:
            gate = self._lattice_path(group, tori, members, local, report)

        with self._stage("criteria"):
            ab = Abelianization(group)
            criteria = sha2_order_by_criteria(
                group, stabilizers, members, over_conjugates=over_conjugates, ab=ab, gate=gate
            )
            report.ker_e_full = ker_e_is_full(group, stabilizers, ab=ab)
            try:
                report.derived_criterion = derived_criterion(group, stabilizers)
            except NotNormalError:
                report.warnings.append("derived criterion skipped: some stabilizer is not normal")
        report.ker_e_order = criteria.ker_e_order
        report.h2z_prime_order = criteria.h2z_prime_order
        report.sha_order_by_criteria = criteria.order
        report.hnp_gate = criteria.hnp_gate
        if not criteria.hnp_gate:
            message = "HNP fails for some field: |H^2(Z)'|/|Ker e| need not equal |Sha^2(Lambda)|"
            self._logger.warning(message)
            report.warnings.append(message)

        if self.settings.timings:
            report.timings = dict(self._timings)
        return report

    def _validate(
        self,
        group: FiniteGroup,
        stabilizers: Sequence[Subgroup],
        family: Sequence[Subgroup],
        report: AnalysisReport,
    ) -> None:
        core = stabilizer_core(group, stabilizers)
        report.stabilizer_core_trivial = core.is_trivial
        if not core.is_trivial:
            message = f"stabilizers intersect in a subgroup of order {core.order}: not a minimal Galois closure"
            self._logger.warning(message)
            report.warnings.append(message)
        report.family_covers_group = family_covers_group(group, family)
        if not report.family_covers_group:
            message = "decomposition family does not cover every element: Sha^2(Z) may be nonzero"
            self._logger.warning(message)
            report.warnings.append(message)

    def _lattice_path(
        self,
        group: FiniteGroup,
        tori: NormOneTori,
        family: Sequence[Subgroup],
        local: bool,
        report: AnalysisReport,
    ) -> bool:
        """Cohomology and Sha^2 of the lattices; returns the HNP gate."""
        max_order = self.settings.max_order
        with self._stage("cohomology"):
            h1 = cohomology(group, tori.phnp, 1, max_order=max_order)
            h2 = cohomology(group, tori.phnp, 2, max_order=max_order)
        report.h1 = h1.structure.to_list()
        report.h2 = h2.structure.to_list()

        with self._stage("sha"):
            report.sha_phnp = sha_kernel(group, tori.phnp, family, source=h2, max_order=max_order).structure.to_list()
            summands = [sha(group, J, 2, family=family, max_order=max_order) for J in tori.summands]
        report.sha_hnp_summands = [s.to_list() for s in summands]
        # Sha commutes with direct sums
        report.sha_hnp = FiniteAbelianGroup.from_cyclic_orders(
            [d for s in summands for d in s.invariant_factors]
        ).to_list()

        if local:
            with self._stage("local"):
                report.local = [self._local_entry(group, tori.phnp, D, h2) for D in family]
        return not any(report.sha_hnp_summands)

    def _local_entry(self, group: FiniteGroup, M: GLattice, D: Subgroup, h2: CohomologyGroup) -> LocalCohomology:
        max_order = self.settings.max_order
        local_h1 = local_cohomology(D, M, 1, max_order=max_order)
        local_h2 = local_cohomology(D, M, 2, max_order=max_order)
        rho = restriction_map(group, D, M, 2, max_order=max_order, source=h2, target=local_h2)
        return LocalCohomology(
            subgroup=D.describe(),
            h1=local_h1.structure.to_list(),
            h2=local_h2.structure.to_list(),
            restriction_kernel=rho.kernel().structure.to_list(),
        )

    def dump_lattices(self, group: FiniteGroup, stabilizers: Sequence[Subgroup]) -> dict[str, Any]:
        """Rank and action matrices of the PHNP and HNP lattices."""
        tori = build_norm_tori(group, stabilizers)
        return {
            "group": GroupSpecParser.describe(group),
            "stabilizers": [H.describe() for H in stabilizers],
            "phnp": tori.phnp.to_dict(),
            "hnp": tori.hnp.to_dict(),
            "summands": [J.to_dict() for J in tori.summands],
        }
