"""
HNP Lattice Data Models

Structured data classes for analysis reports and scan findings.
Provides type safety and a fixed JSON layout instead of generic dictionaries.

Values that were not computed are None in Python and the explicit string
"not-computed" in JSON; every key is always present.
"""

from dataclasses import dataclass, field, fields
from enum import Enum
from typing import Any

from .constants import NOT_COMPUTED, PACKAGE_VERSION, REPORT_SCHEMA_VERSION
from .exceptions import InvalidInputError


class FindingKind(str, Enum):
    """
    Which test fired during a scan.
    """
    CRITERIA_MISMATCH = "criteria-mismatch"                  # gate holds but |H^2(Z)'|/|Ker e| != |Sha^2(Lambda)|
    DERIVED_CRITERION_FAILURE = "derived-criterion-failure"  # intersection of G^der·Gi is larger than G^der
    SHA_NONTRIVIAL = "sha-nontrivial"                        # Sha^2(Lambda) nontrivial (or differs from Sha^2(L1))


def _encode(value: Any) -> Any:
    return NOT_COMPUTED if value is None else value


def _decode(value: Any) -> Any:
    return None if value == NOT_COMPUTED else value


@dataclass
class LocalCohomology:
    """H^1 and H^2 of the PHNP lattice restricted to one subgroup."""

    subgroup: dict[str, Any]            # subgroup descriptor (order, members, generators)
    h1: list[int] | None = None         # invariant factors of H^1(D, Lambda)
    h2: list[int] | None = None         # invariant factors of H^2(D, Lambda)
    restriction_kernel: list[int] | None = None  # Ker(H^2(G, Lambda) -> H^2(D, Lambda))

    def to_dict(self) -> dict[str, Any]:
        return {f.name: _encode(getattr(self, f.name)) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "LocalCohomology":
        return cls(**{f.name: _decode(data.get(f.name, NOT_COMPUTED)) for f in fields(cls)})


@dataclass
class AnalysisReport:
    """
    Everything one analysis run computed for (G, stabilizers, family).

    Structures are invariant-factor lists; [] is the trivial group.
    """

    group: dict[str, Any]                       # replayable group input plus its order
    stabilizers: list[dict[str, Any]]           # subgroup descriptors, in input order
    family: dict[str, Any]                      # spec string and member descriptors

    # Lattices
    phnp_rank: int | None = None                # rank of Lambda
    hnp_rank: int | None = None                 # rank of L1 (sum of the summand ranks)
    hnp_summand_ranks: list[int] | None = None  # rank of Z[G/Gi]/<di> per stabilizer

    # Cohomology of Lambda
    h1: list[int] | None = None
    h2: list[int] | None = None
    local: list[LocalCohomology] | None = None  # per-subgroup H^1/H^2 (--local)

    # Character criteria
    ker_e_order: int | None = None
    h2z_prime_order: int | None = None
    sha_order_by_criteria: int | None = None    # |H^2(Z)'| / |Ker e|
    hnp_gate: bool | None = None                # every Sha^2(L1_i) trivial
    derived_criterion: bool | None = None       # None when some stabilizer is not normal
    ker_e_full: bool | None = None

    # Sha^2 structures
    sha_phnp: list[int] | None = None           # Sha^2(Lambda)
    sha_hnp: list[int] | None = None            # Sha^2(L1)
    sha_hnp_summands: list[list[int]] | None = None  # Sha^2(L1_i) per stabilizer

    # Validation
    stabilizer_core_trivial: bool | None = None
    family_covers_group: bool | None = None
    warnings: list[str] = field(default_factory=list)

    timings: dict[str, float] | None = None     # seconds per stage, only with --timings
    schema: int = REPORT_SCHEMA_VERSION
    version: str = PACKAGE_VERSION

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready dictionary with a fixed key order."""
        data: dict[str, Any] = {"schema": self.schema, "version": self.version}
        for f in fields(self):
            if f.name in ("schema", "version"):
                continue
            value = getattr(self, f.name)
            if f.name == "local" and value is not None:
                value = [entry.to_dict() for entry in value]
            data[f.name] = _encode(value)
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "AnalysisReport":
        """
        Rebuild a report from to_dict output.

        Raises:
            InvalidInputError: Wrong schema version or missing keys
        """
        if not isinstance(data, dict):
            raise InvalidInputError(f"Report must be a JSON object, got {type(data).__name__}")
        if data.get("schema") != REPORT_SCHEMA_VERSION:
            raise InvalidInputError(f"Unsupported report schema {data.get('schema')!r}")
        missing = [f.name for f in fields(cls) if f.name not in data]
        if missing:
            raise InvalidInputError(f"Report is missing keys: {missing}")
        values = {f.name: _decode(data[f.name]) for f in fields(cls)}
        if values["local"] is not None:
            values["local"] = [LocalCohomology.from_dict(entry) for entry in values["local"]]
        if values["warnings"] is None:
            values["warnings"] = []
        return cls(**values)

    @property
    def findings(self) -> list[FindingKind]:
        """Scan tests this report would fire (without the difference comparison mode)."""
        kinds = []
        if self.derived_criterion is False:
            kinds.append(FindingKind.DERIVED_CRITERION_FAILURE)
        if self.sha_phnp and self.sha_hnp_summands is not None and not any(self.sha_hnp_summands):
            kinds.append(FindingKind.SHA_NONTRIVIAL)
        if (
            self.hnp_gate
            and self.sha_phnp is not None
            and self.sha_order_by_criteria is not None
            and self.sha_order_by_criteria != _order(self.sha_phnp)
        ):
            kinds.append(FindingKind.CRITERIA_MISMATCH)
        return kinds


def _order(factors: list[int]) -> int:
    result = 1
    for d in factors:
        result *= d
    return result


@dataclass
class ScanFinding:
    """
    One scan hit, replayable with the analyze command.
    """

    group: dict[str, Any]               # replayable group input
    stabilizers: list[dict[str, Any]]   # the stabilizer pair
    kind: FindingKind
    evidence: dict[str, Any] = field(default_factory=dict)

    def sort_key(self) -> tuple:
        return (
            self.group.get("order", 0),
            str(self.group.get("catalog") or self.group),
            [s.get("members", []) for s in self.stabilizers],
            self.kind.value,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "group": self.group,
            "stabilizers": self.stabilizers,
            "kind": self.kind.value,
            "evidence": self.evidence,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ScanFinding":
        try:
            return cls(
                group=data["group"],
                stabilizers=data["stabilizers"],
                kind=FindingKind(data["kind"]),
                evidence=data.get("evidence", {}),
            )
        except (KeyError, ValueError, TypeError) as e:
            raise InvalidInputError(f"Malformed scan finding: {e}")
