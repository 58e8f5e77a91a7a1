"""
Content-addressed cache of analysis reports.

Reports are stored as <directory>/<key>.json where key is the SHA-256 of the
canonical JSON of the inputs, the flags, the package version and the report
schema. A corrupt entry or an unwritable directory never changes a result: the
report is recomputed and a warning is logged.
"""

import hashlib
import json
import logging
import os
from pathlib import Path
from typing import Any

from .constants import PACKAGE_VERSION, REPORT_SCHEMA_VERSION
from .exceptions import InvalidInputError
from .models import AnalysisReport


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def report_json(report: AnalysisReport) -> str:
    """The JSON text printed by analyze --json and stored in the cache."""
    return json.dumps(report.to_dict(), indent=2)


class ReportCache:
    """
    Reports keyed by canonical input hash.

    Example:
        cache = ReportCache("~/.cache/hnp-lattice")
        key = cache.key({"group": {...}, "stabilizers": [...]}, {"criteria_only": True})
        report = cache.get(key)
    """

    def __init__(self, directory: str | Path):
        self.directory = Path(directory).expanduser()
        self._logger = logging.getLogger(__name__)
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(inputs: dict[str, Any], flags: dict[str, Any]) -> str:
        payload = {
            "inputs": inputs,
            "flags": flags,
            "version": PACKAGE_VERSION,
            "schema": REPORT_SCHEMA_VERSION,
        }
        return hashlib.sha256(canonical_json(payload).encode("utf-8")).hexdigest()

    def path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> AnalysisReport | None:
        """The cached report, or None on a miss or an unreadable entry."""
        path = self.path(key)
        if not path.exists():
            self.misses += 1
            return None
        try:
            report = AnalysisReport.from_dict(json.loads(path.read_text(encoding="utf-8")))
        except (OSError, json.JSONDecodeError, InvalidInputError, TypeError) as e:
            self._logger.warning(f"Ignoring corrupt cache entry {path}: {e}")
            self.misses += 1
            return None
        self._logger.debug(f"Cache hit {key[:12]}")
        self.hits += 1
        return report

    def put(self, key: str, report: AnalysisReport) -> bool:
        """Store a report; returns False (with a warning) when the directory is not writable."""
        path = self.path(key)
        tmp = path.with_name(f"{key}.{os.getpid()}.tmp")
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            tmp.write_text(report_json(report), encoding="utf-8")
            tmp.replace(path)
        except OSError as e:
            self._logger.warning(f"Cannot write cache entry {path}: {e}")
            return False
        return True
