"""
Base parser class with common utilities for JSON and command line input.
"""

import json
import logging
from pathlib import Path
from typing import Any

from ..exceptions import InvalidInputError

logger = logging.getLogger(__name__)


class BaseParser:
    """Base class for all input parsers."""

    @staticmethod
    def load_json(text: str, name: str = "input") -> Any:
        """
        Parse JSON text, reading it from a file when it starts with '@'.

        Args:
            text: JSON text or @path
            name: descriptive name for error messages

        Returns:
            Decoded JSON value

        Raises:
            InvalidInputError: If the file cannot be read or the JSON is malformed
        """
        if text.startswith("@"):
            path = Path(text[1:])
            try:
                text = path.read_text(encoding="utf-8")
            except OSError as e:
                raise InvalidInputError(f"Cannot read {name} file {path}: {e}")
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"Malformed {name} JSON: {e}")

    @staticmethod
    def looks_like_json(text: str) -> bool:
        stripped = text.lstrip()
        return stripped.startswith(("{", "[")) or stripped.startswith("@")

    @staticmethod
    def require_key(data: dict[str, Any], key: str, name: str = "input") -> Any:
        """
        Fetch a mandatory key from a JSON object.

        Raises:
            InvalidInputError: If data is not an object or lacks the key
        """
        if not isinstance(data, dict):
            raise InvalidInputError(f"{name} must be a JSON object, got {type(data).__name__}")
        if key not in data:
            raise InvalidInputError(f"{name} is missing '{key}'")
        return data[key]

    @staticmethod
    def require_int(value: Any, name: str = "value", minimum: int | None = None) -> int:
        """
        Validate an integer (bools rejected).

        Raises:
            InvalidInputError: If value is not an integer or is below minimum
        """
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidInputError(f"{name} must be an integer, got {value!r}")
        if minimum is not None and value < minimum:
            raise InvalidInputError(f"{name} must be at least {minimum}, got {value}")
        return value

    @staticmethod
    def require_list(value: Any, name: str = "value") -> list:
        if not isinstance(value, list):
            raise InvalidInputError(f"{name} must be a JSON list, got {type(value).__name__}")
        return value

    @staticmethod
    def parse_range(text: str, name: str = "range") -> tuple[int, int]:
        """
        Parse 'MIN-MAX' or a single 'N' into an inclusive pair.

        Raises:
            InvalidInputError: If the bounds are not positive integers with MIN <= MAX
        """
        parts = text.strip().split("-")
        try:
            if len(parts) == 1:
                low = high = int(parts[0])
            elif len(parts) == 2:
                low, high = int(parts[0]), int(parts[1])
            else:
                raise ValueError(text)
        except ValueError:
            raise InvalidInputError(f"Malformed {name} {text!r}: expected MIN-MAX")
        if low < 1 or high < low:
            raise InvalidInputError(f"Malformed {name} {text!r}: need 1 <= MIN <= MAX")
        return low, high
