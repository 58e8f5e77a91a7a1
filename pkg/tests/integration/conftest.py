"""
Pytest configuration for integration tests

Provides the worked-example groups, analyzers and a clean environment for tests
that run whole analyses, scans and the command line.
"""

import os

import pytest
from hnp_lattice.analyzer import NormPrincipleAnalyzer
from hnp_lattice.cache import ReportCache
from hnp_lattice.config import Settings
from hnp_lattice.constants import ENV_CACHE_DIR, ENV_CLOSURE_CAP, ENV_JOBS, ENV_MAX_ORDER, ENV_SUBGROUP_CAP
from ..fixtures.test_helpers import c2_x_d4_example, klein_four, klein_subgroups, s4_example

SKIP_ENV = "HNP_SKIP_INTEGRATION"


def pytest_configure(config):
    """Configure pytest for integration tests."""
    config.addinivalue_line(
        "markers", "integration: mark test as running whole analyses or the command line"
    )


def pytest_collection_modifyitems(config, items):
    """Skip integration tests when HNP_SKIP_INTEGRATION is set."""
    if not os.getenv(SKIP_ENV):
        return
    skip_integration = pytest.mark.skip(reason=f"Integration tests disabled ({SKIP_ENV} set)")
    for item in items:
        if "integration" in item.keywords:
            item.add_marker(skip_integration)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep HNP_* variables of the calling shell out of the tests."""
    for name in (ENV_MAX_ORDER, ENV_CLOSURE_CAP, ENV_SUBGROUP_CAP, ENV_JOBS, ENV_CACHE_DIR):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def klein():
    """Klein four group with its subgroups <b>, <a>, <ab>."""
    G = klein_four()
    N, A, B = klein_subgroups(G)
    return G, N, A, B


@pytest.fixture(scope="session")
def s4():
    """S4 with the stabilizers <(1 2)> and <(1 2 3 4)>."""
    return s4_example()


@pytest.fixture(scope="session")
def c2_x_d4():
    """C2 x D4 with its two central stabilizers."""
    return c2_x_d4_example()


@pytest.fixture
def analyzer():
    """Analyzer with default settings."""
    return NormPrincipleAnalyzer(Settings())


@pytest.fixture
def analyzer_24():
    """Analyzer whose direct cohomology cap admits S4."""
    return NormPrincipleAnalyzer(Settings(max_order=24))


@pytest.fixture
def report_cache(tmp_path):
    """Report cache in a fresh directory."""
    return ReportCache(tmp_path / "cache")
