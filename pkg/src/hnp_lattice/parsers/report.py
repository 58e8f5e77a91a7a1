"""
Analysis report and scan finding parser.
"""

import logging

from ..exceptions import InvalidInputError
from ..models import AnalysisReport, ScanFinding
from .base import BaseParser

logger = logging.getLogger(__name__)


class ReportParser(BaseParser):
    """Parser for JSON written by analyze --json and scan --json."""

    @classmethod
    def parse(cls, text: str) -> AnalysisReport:
        """
        Parse one analysis report.

        Raises:
            InvalidInputError: Malformed JSON, wrong schema or missing keys
        """
        return AnalysisReport.from_dict(cls.load_json(text, "report"))

    @classmethod
    def parse_findings(cls, text: str) -> list[ScanFinding]:
        """
        Parse a scan result: {"schema": 1, "findings": [...]} or a bare list.
        """
        data = cls.load_json(text, "scan result")
        if isinstance(data, dict):
            data = cls.require_key(data, "findings", "scan result")
        if not isinstance(data, list):
            raise InvalidInputError(f"Scan findings must be a list, got {type(data).__name__}")
        return [ScanFinding.from_dict(entry) for entry in data]
