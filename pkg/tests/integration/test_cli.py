"""
Integration tests for the command line interface

Runs main() with argument lists and checks stdout, written files and exit codes.
"""

import json

import pytest
from hnp_lattice.analyzer import NormPrincipleAnalyzer
from hnp_lattice.cli import main
from hnp_lattice.constants import ENV_MAX_ORDER, PACKAGE_VERSION, REPORT_SCHEMA_VERSION, ExitCode
from hnp_lattice.exceptions import ExactnessError, HNPLatticeError, IndivisibleCountsError, NotCyclicError
from hnp_lattice.parsers import ReportParser
from ..fixtures.test_helpers import C2_X_D4, KLEIN_FOUR

N_SPEC = '{"members": [0, 1]}'
KLEIN_ANALYZE = ["analyze", "--group", KLEIN_FOUR, "--stabilizer", N_SPEC, "--stabilizer", "trivial"]


@pytest.mark.integration
class TestAnalyzeCommand:
    """Test the analyze subcommand."""

    def test_json_report(self, capsys):
        """Test the biquadratic example as JSON."""
        assert main(KLEIN_ANALYZE + ["--json"]) == ExitCode.OK
        report = ReportParser.parse(capsys.readouterr().out)

        assert report.group == {"catalog": KLEIN_FOUR, "order": 4}
        assert [s["members"] for s in report.stabilizers] == [[0, 1], [0]]
        assert report.h1 == [2]
        assert report.h2 == [2]
        assert report.sha_phnp == []
        assert report.sha_hnp == [2]
        assert report.local is None

    def test_text_report(self, capsys):
        """Test the table output."""
        assert main(KLEIN_ANALYZE) == ExitCode.OK
        out = capsys.readouterr().out
        lines = out.splitlines()

        assert lines[0].split(None, 1) == ["group", KLEIN_FOUR]
        assert any(line.startswith("Sha^2(Lambda)") and line.split()[-1] == "1" for line in out.splitlines())
        assert any(line.startswith("H^2(G, Lambda)") and line.endswith("Z/2") for line in out.splitlines())
        assert "warning: HNP fails for some field" in out

    def test_local_and_timings(self, capsys):
        """Test --local adds per-subgroup rows and --timings the stage times."""
        assert main(KLEIN_ANALYZE + ["--local", "--timings", "--json"]) == ExitCode.OK
        report = ReportParser.parse(capsys.readouterr().out)

        assert len(report.local) == 3
        assert "cohomology" in report.timings

    def test_criteria_only(self, capsys):
        """Test S4 through the character criteria."""
        argv = [
            "analyze", "--group", "symmetric(4)",
            "--stabilizer", '{"generators": ["(1 2)"]}',
            "--stabilizer", '{"generators": ["(1 2 3 4)"]}',
            "--criteria-only", "--json",
        ]
        assert main(argv) == ExitCode.OK
        report = ReportParser.parse(capsys.readouterr().out)

        assert report.sha_order_by_criteria == 2
        assert report.hnp_gate is True
        assert report.h2 is None

    def test_dump_lattice(self, tmp_path, capsys):
        """Test the lattice dump is written next to the report."""
        path = tmp_path / "lattices.json"
        assert main(KLEIN_ANALYZE + ["--dump-lattice", str(path)]) == ExitCode.OK
        dump = json.loads(path.read_text(encoding="utf-8"))

        assert dump["phnp"]["rank"] == 5
        assert dump["hnp"]["rank"] == 4
        assert capsys.readouterr().out

    def test_cache_dir(self, tmp_path, capsys):
        """Test a second run reuses the cached report."""
        cache_dir = tmp_path / "cache"
        assert main(KLEIN_ANALYZE + ["--json", "--cache-dir", str(cache_dir)]) == ExitCode.OK
        first = capsys.readouterr().out
        assert main(KLEIN_ANALYZE + ["--json", "--cache-dir", str(cache_dir)]) == ExitCode.OK
        second = capsys.readouterr().out

        assert second == first
        assert len(list(cache_dir.glob("*.json"))) == 1

    def test_reduce(self, capsys):
        """Test --reduce drops the whole-group stabilizer."""
        assert main(KLEIN_ANALYZE + ["--stabilizer", "whole", "--reduce", "--json"]) == ExitCode.OK
        report = ReportParser.parse(capsys.readouterr().out)
        assert len(report.stabilizers) == 2


@pytest.mark.integration
class TestAnalyzeErrors:
    """Test exit codes for bad input and exceeded caps."""

    @pytest.mark.parametrize(
        "argv",
        [
            ["analyze", "--group", "cyclic(", "--stabilizer", "trivial"],
            ["analyze", "--group", "mathieu(11)", "--stabilizer", "trivial"],
            ["analyze", "--group", '{"cayley": [[0, 1], [1, 1]]}', "--stabilizer", "trivial"],
            ["analyze", "--group", KLEIN_FOUR, "--stabilizer", '{"members": [0, 9]}'],
            ["analyze", "--group", KLEIN_FOUR, "--stabilizer", "trivial", "--family", "sylow"],
        ],
    )
    def test_bad_input(self, argv, capsys):
        """Test malformed groups, subgroups and families exit with 2."""
        assert main(argv) == ExitCode.BAD_INPUT
        assert capsys.readouterr().out == ""

    def test_order_cap(self, capsys):
        """Test S4 without --criteria-only exceeds the default cap."""
        argv = ["analyze", "--group", "symmetric(4)", "--stabilizer", "trivial"]
        assert main(argv) == ExitCode.CAP_EXCEEDED
        assert capsys.readouterr().out == ""

    def test_cap_from_environment(self, monkeypatch):
        """Test HNP_MAX_ORDER applies and --max-order overrides it."""
        monkeypatch.setenv(ENV_MAX_ORDER, "2")
        assert main(KLEIN_ANALYZE) == ExitCode.CAP_EXCEEDED
        assert main(KLEIN_ANALYZE + ["--max-order", "4"]) == ExitCode.OK

    def test_invalid_environment(self, monkeypatch):
        """Test a non-numeric cap in the environment is bad input."""
        monkeypatch.setenv(ENV_MAX_ORDER, "many")
        assert main(KLEIN_ANALYZE) == ExitCode.BAD_INPUT

    @pytest.mark.parametrize(
        "error",
        [
            ExactnessError("Z -> Lambda is not injective"),
            IndivisibleCountsError(4, 3),
            NotCyclicError("cyclic_h2 needs a cyclic group"),
            HNPLatticeError("unexpected"),
        ],
    )
    def test_internal_error(self, error, monkeypatch, capsys):
        """Test failed consistency checks exit with 4."""
        def fail(self, *args, **kwargs):
            raise error

        monkeypatch.setattr(NormPrincipleAnalyzer, "analyze", fail)
        assert main(KLEIN_ANALYZE) == ExitCode.INTERNAL_ERROR
        assert capsys.readouterr().out == ""

    def test_unwritable_dump(self, tmp_path, capsys):
        """Test a lattice dump into a missing directory exits with 5."""
        path = tmp_path / "missing" / "lattices.json"
        assert main(KLEIN_ANALYZE + ["--dump-lattice", str(path)]) == ExitCode.OUTPUT_ERROR
        assert not path.exists()
        assert capsys.readouterr().out == ""

    def test_version(self, capsys):
        """Test --version prints the package version."""
        with pytest.raises(SystemExit) as exc_info:
            main(["--version"])
        assert exc_info.value.code == 0
        assert PACKAGE_VERSION in capsys.readouterr().out


@pytest.mark.integration
class TestScanCommand:
    """Test the scan subcommand."""

    def test_json_summary(self, capsys):
        """Test the scan result for C2 x D4."""
        assert main(["scan", "--group", C2_X_D4, "--json"]) == ExitCode.OK
        result = json.loads(capsys.readouterr().out)

        assert result["schema"] == REPORT_SCHEMA_VERSION
        assert result["version"] == PACKAGE_VERSION
        assert result["mode"] == "criteria"
        assert result["groups"] == 1
        assert result["skipped_groups"] == []
        assert result["findings"]
        assert {f["kind"] for f in result["findings"]} == {"derived-criterion-failure"}
        assert len(ReportParser.parse_findings(json.dumps(result))) == len(result["findings"])

    def test_fail_on_found(self, capsys):
        """Test findings turn into exit code 1 only on request."""
        assert main(["scan", "--group", C2_X_D4, "--fail-on-found"]) == ExitCode.FINDINGS
        out = capsys.readouterr().out
        assert out.startswith("1 groups, ")
        assert "FOUND derived-criterion-failure" in out

    def test_no_findings(self, capsys):
        """Test a clean scan exits with 0 even with --fail-on-found."""
        argv = ["scan", "--orders", "1-8", "--families", "dihedral,quaternion", "--fail-on-found"]
        assert main(argv) == ExitCode.OK
        assert capsys.readouterr().out.startswith("3 groups, ")

    def test_lattice_mode(self, capsys):
        """Test the Klein four group in lattice mode."""
        assert main(["scan", "--mode", "lattice", "--group", KLEIN_FOUR, "--json"]) == ExitCode.OK
        result = json.loads(capsys.readouterr().out)

        assert result["mode"] == "lattice"
        assert result["pairs"] == 8
        assert result["findings"] == []

    def test_lattice_mode_skips_large_groups(self, capsys):
        """Test groups above --max-order are listed as skipped."""
        argv = ["scan", "--mode", "lattice", "--group", "symmetric(4)", "--max-order", "16", "--json"]
        assert main(argv) == ExitCode.OK
        result = json.loads(capsys.readouterr().out)
        assert result["skipped_groups"] == ["symmetric(4)"]
        assert result["groups"] == 0

    def test_prime_power_filter(self, capsys):
        """Test filtered pairs are counted."""
        assert main(["scan", "--group", KLEIN_FOUR, "--prime-power-filter", "--json"]) == ExitCode.OK
        result = json.loads(capsys.readouterr().out)
        assert result["pairs"] == 0
        assert result["filtered_pairs"] == 8

    @pytest.mark.parametrize(
        "argv",
        [
            ["scan", "--orders", "8-2"],
            ["scan", "--orders", "1-4", "--families", "sporadic"],
            ["scan", "--group", "dihedral(x)"],
        ],
    )
    def test_bad_input(self, argv):
        """Test bad ranges, tags and expressions exit with 2."""
        assert main(argv) == ExitCode.BAD_INPUT


@pytest.mark.integration
class TestCatalogCommand:
    """Test the catalog subcommand."""

    def test_json_listing(self, capsys):
        """Test groups of order at most 4."""
        assert main(["catalog", "--orders", "1-4", "--json"]) == ExitCode.OK
        listing = json.loads(capsys.readouterr().out)

        assert {item["expression"] for item in listing} == {
            "cyclic(1)", "cyclic(2)", "cyclic(3)", "cyclic(4)", KLEIN_FOUR,
        }
        assert [item["order"] for item in listing] == sorted(item["order"] for item in listing)
        klein = next(item for item in listing if item["expression"] == KLEIN_FOUR)
        assert klein["tags"] == ["abelian", "product"]
        assert klein["order"] == 4

    def test_text_listing(self, capsys):
        """Test the text listing filtered by tag."""
        assert main(["catalog", "--orders", "6-16", "--families", "symmetric,quaternion"]) == ExitCode.OK
        lines = capsys.readouterr().out.splitlines()
        assert [line.split()[1] for line in lines] == ["symmetric(3)", "quaternion8"]
