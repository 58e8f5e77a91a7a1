"""
Pytest configuration shared by unit and integration tests.
"""

import pytest


def pytest_addoption(parser):
    """Add custom command line options."""
    parser.addoption(
        "--slow",
        action="store_true",
        default=False,
        help="Run slow tests (direct cohomology at order 24, long sweeps)"
    )


def pytest_collection_modifyitems(config, items):
    """Skip slow tests unless --slow is given."""
    if config.getoption("--slow", default=False):
        return
    skip_slow = pytest.mark.skip(reason="Slow test (use --slow to run)")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
