"""
Command line interface.

    hnp-lattice analyze --group GROUP --stabilizer SUB [--stabilizer SUB ...] [options]
    hnp-lattice scan [--mode criteria|lattice] [--orders MIN-MAX] [options]
    hnp-lattice catalog [--orders MIN-MAX] [--families TAGS]

Reports go to stdout (text or --json); logging goes to stderr.
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from .analyzer import NormPrincipleAnalyzer
from .cache import report_json
from .config import Settings
from .constants import PACKAGE_VERSION, REPORT_SCHEMA_VERSION, ExitCode
from .exceptions import (
    GroupMismatchError,
    HNPLatticeError,
    InvalidInputError,
    NotAGroupError,
    NotNormalError,
    NotStableError,
    OrderCapExceededError,
    QuotientNotFreeError,
    UnsupportedFamilyError,
)
from .groups import TAGS, catalog_entries
from .models import AnalysisReport
from .parsers import DEFAULT_FAMILY, BaseParser, GroupSpecParser, SubgroupSpecParser
from .scanner import CatalogScanner, ScanMode, ScanSummary

logger = logging.getLogger(__name__)

BAD_INPUT_ERRORS = (
    InvalidInputError,
    NotAGroupError,
    UnsupportedFamilyError,
    NotNormalError,
    QuotientNotFreeError,
    NotStableError,
    GroupMismatchError,
)

DEFAULT_ORDERS = "1-16"
LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def _structure(factors: list[int] | None) -> str:
    if factors is None:
        return "not computed"
    if not factors:
        return "1"
    return " x ".join(f"Z/{d}" for d in factors)


def _value(value: Any) -> str:
    return "not computed" if value is None else str(value)


def _subgroup_name(descriptor: dict[str, Any]) -> str:
    return "<" + (", ".join(descriptor["generators"]) or "e") + ">"


def format_report(report: AnalysisReport) -> str:
    """Human readable two-column table of a report."""
    group = report.group.get("catalog") or f"custom group of order {report.group.get('order')}"
    rows: list[tuple[str, str]] = [
        ("group", str(group)),
        ("stabilizers", ", ".join(f"{_subgroup_name(s)} (order {s['order']})" for s in report.stabilizers)),
        ("family", f"{report.family['spec']} ({len(report.family['members'])} subgroups)"),
        ("rank PHNP lattice", _value(report.phnp_rank)),
        ("rank HNP lattice", _value(report.hnp_rank)),
        ("H^1(G, Lambda)", _structure(report.h1)),
        ("H^2(G, Lambda)", _structure(report.h2)),
        ("Sha^2(Lambda)", _structure(report.sha_phnp)),
        ("Sha^2(HNP lattice)", _structure(report.sha_hnp)),
    ]
    if report.sha_hnp_summands is not None:
        for i, summand in enumerate(report.sha_hnp_summands):
            rows.append((f"Sha^2(HNP lattice {i + 1})", _structure(summand)))
    rows += [
        ("|Ker e|", _value(report.ker_e_order)),
        ("|H^2(Z)'|", _value(report.h2z_prime_order)),
        ("|H^2(Z)'| / |Ker e|", _value(report.sha_order_by_criteria)),
        ("HNP gate", _value(report.hnp_gate)),
        ("derived criterion", _value(report.derived_criterion)),
        ("Ker e is everything", _value(report.ker_e_full)),
        ("stabilizer core trivial", _value(report.stabilizer_core_trivial)),
        ("family covers group", _value(report.family_covers_group)),
    ]
    for entry in report.local or []:
        name = _subgroup_name(entry.subgroup)
        rows.append((f"H^1({name}, Lambda)", _structure(entry.h1)))
        rows.append((f"H^2({name}, Lambda)", _structure(entry.h2)))
        rows.append((f"Ker res to {name}", _structure(entry.restriction_kernel)))
    if report.timings:
        for stage, seconds in report.timings.items():
            rows.append((f"time {stage}", f"{seconds:.3f}s"))
    width = max(len(label) for label, _ in rows)
    lines = [f"{label.ljust(width)}  {value}" for label, value in rows]
    lines += [f"warning: {w}" for w in report.warnings]
    return "\n".join(lines)


def _settings(args: argparse.Namespace) -> Settings:
    return Settings.from_env().override(
        max_order=getattr(args, "max_order", None),
        cache_dir=getattr(args, "cache_dir", None),
        jobs=getattr(args, "jobs", None),
        timings=True if getattr(args, "timings", False) else None,
    )


def cmd_analyze(args: argparse.Namespace) -> int:
    settings = _settings(args)
    group = GroupSpecParser.parse(args.group, closure_cap=settings.closure_cap)
    stabilizers = [SubgroupSpecParser.parse(group, spec) for spec in args.stabilizer]
    analyzer = NormPrincipleAnalyzer(settings)

    if args.dump_lattice:
        dump = analyzer.dump_lattices(group, stabilizers)
        Path(args.dump_lattice).write_text(json.dumps(dump, indent=2), encoding="utf-8")
        logger.info(f"Wrote lattices to {args.dump_lattice}")

    report = analyzer.analyze(
        group,
        stabilizers,
        family=args.family,
        criteria_only=args.criteria_only,
        local=args.local,
        reduce=args.reduce,
        over_conjugates=not args.no_conjugates,
    )
    print(report_json(report) if args.json else format_report(report))
    return ExitCode.OK


def _entries(args: argparse.Namespace) -> list[str]:
    if args.group:
        return list(args.group)
    low, high = BaseParser.parse_range(args.orders, "--orders")
    tags = {t.strip() for t in args.families.split(",") if t.strip()} if args.families else None
    return [e.expression for e in catalog_entries(high, min_order=low, tags=tags)]


def _summary_json(summary: ScanSummary, mode: ScanMode) -> str:
    return json.dumps(
        {
            "schema": REPORT_SCHEMA_VERSION,
            "version": PACKAGE_VERSION,
            "mode": mode.value,
            "groups": summary.groups,
            "pairs": summary.pairs,
            "filtered_pairs": summary.filtered_pairs,
            "skipped_groups": summary.skipped_groups,
            "findings": [f.to_dict() for f in summary.findings],
        },
        indent=2,
    )


def cmd_scan(args: argparse.Namespace) -> int:
    settings = _settings(args)
    mode = ScanMode(args.mode)
    scanner = CatalogScanner(settings)
    summary = scanner.scan(
        _entries(args),
        mode=mode,
        family=args.family,
        flag_differences=args.flag_differences,
        prime_power_filter=args.prime_power_filter,
    )
    if args.json:
        print(_summary_json(summary, mode))
    else:
        print(f"{summary.groups} groups, {summary.pairs} pairs, {len(summary.findings)} findings")
        if summary.skipped_groups:
            print(f"skipped above order cap: {', '.join(summary.skipped_groups)}")
        for finding in summary.findings:
            members = " | ".join(str(s["members"]) for s in finding.stabilizers)
            group = finding.group.get("catalog", "custom")
            print(f"FOUND {finding.kind.value}: {group} stabilizers {members} {json.dumps(finding.evidence)}")
    if summary.findings and args.fail_on_found:
        return ExitCode.FINDINGS
    return ExitCode.OK


def cmd_catalog(args: argparse.Namespace) -> int:
    low, high = BaseParser.parse_range(args.orders, "--orders")
    tags = {t.strip() for t in args.families.split(",") if t.strip()} if args.families else None
    listing = []
    for entry in catalog_entries(high, min_order=low, tags=tags):
        G = entry.build()
        listing.append(
            {
                "expression": entry.expression,
                "order": entry.order,
                "tags": sorted(entry.tags),
                "generators": [G.label(g) for g in G.generators],
            }
        )
    if args.json:
        print(json.dumps(listing, indent=2))
    else:
        for item in listing:
            print(f"{item['order']:>4}  {item['expression']:<48} {', '.join(item['generators'])}")
    return ExitCode.OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hnp-lattice",
        description="Projective and multinorm Hasse norm principle via character lattices",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {PACKAGE_VERSION}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", help="Analyze one group and stabilizer family")
    analyze.add_argument("--group", required=True, help="Catalog expression, group JSON or @file")
    analyze.add_argument(
        "--stabilizer", action="append", required=True,
        help="Subgroup JSON, @file, 'trivial' or 'whole'; repeat once per field",
    )
    analyze.add_argument("--family", default=DEFAULT_FAMILY, help="cyclic, all-cyclic or explicit:<json>")
    analyze.add_argument("--criteria-only", action="store_true", help="Skip the direct cohomology computation")
    analyze.add_argument("--json", action="store_true", help="Print the report as JSON")
    analyze.add_argument("--max-order", type=int, help="Largest group for direct cohomology")
    analyze.add_argument("--cache-dir", help="Directory for cached reports")
    analyze.add_argument("--local", action="store_true", help="Add H^1/H^2 of every family member")
    analyze.add_argument("--reduce", action="store_true", help="Drop stabilizers equal to the whole group")
    analyze.add_argument("--timings", action="store_true", help="Record seconds per stage in the report")
    analyze.add_argument("--dump-lattice", metavar="PATH", help="Write the lattice action matrices as JSON")
    analyze.add_argument(
        "--no-conjugates", action="store_true",
        help="Local kernels from D ∩ Gi only instead of every conjugate of Gi",
    )
    analyze.set_defaults(handler=cmd_analyze)

    scan = subparsers.add_parser("scan", help="Scan catalog groups for failures of HNP => PHNP")
    scan.add_argument("--mode", choices=[m.value for m in ScanMode], default=ScanMode.CRITERIA.value)
    scan.add_argument("--orders", default=DEFAULT_ORDERS, help="Order range MIN-MAX (default %(default)s)")
    scan.add_argument("--families", help=f"Comma separated catalog tags: {', '.join(TAGS)}")
    scan.add_argument("--group", action="append", help="Scan this catalog expression instead; repeatable")
    scan.add_argument("--family", default=DEFAULT_FAMILY, help="Decomposition family for lattice mode")
    scan.add_argument("--jobs", type=int, help="Worker processes")
    scan.add_argument("--json", action="store_true", help="Print findings as JSON")
    scan.add_argument("--max-order", type=int, help="Largest group for lattice mode")
    scan.add_argument("--cache-dir", help="Directory for cached reports")
    scan.add_argument("--fail-on-found", action="store_true", help="Exit 1 when there are findings")
    scan.add_argument(
        "--flag-differences", action="store_true",
        help="Lattice mode: report whenever Sha^2 of the PHNP and HNP lattices differ",
    )
    scan.add_argument(
        "--prime-power-filter", action="store_true",
        help="Skip pairs whose permutation lattice ranks are both prime powers",
    )
    scan.set_defaults(handler=cmd_scan)

    catalog = subparsers.add_parser("catalog", help="List catalog groups")
    catalog.add_argument("--orders", default=DEFAULT_ORDERS, help="Order range MIN-MAX (default %(default)s)")
    catalog.add_argument("--families", help=f"Comma separated catalog tags: {', '.join(TAGS)}")
    catalog.add_argument("--json", action="store_true", help="Print the listing as JSON")
    catalog.set_defaults(handler=cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return int(args.handler(args))
    except OrderCapExceededError as e:
        logger.error(f"{e}; raise the cap with --max-order or HNP_MAX_ORDER")
        return ExitCode.CAP_EXCEEDED
    except BAD_INPUT_ERRORS as e:
        logger.error(str(e))
        return ExitCode.BAD_INPUT
    except HNPLatticeError as e:
        # ExactnessError, IndivisibleCountsError, NotCyclicError and the like
        logger.error(f"Internal consistency check failed: {type(e).__name__}: {e}")
        return ExitCode.INTERNAL_ERROR
    except OSError as e:
        logger.error(f"Cannot write output: {e}")
        return ExitCode.OUTPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
