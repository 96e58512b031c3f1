"""Tests for family command."""

import json

from signbase.cli.main import main

WORKED_EXAMPLE = ["family", "--name", "dki", "--n", "7", "--k", "2", "--i", "1", "--preset", "same-sign"]


class TestFamilyCommand:
    """Tests for the family command."""

    def test_worked_example_json(self, cli_runner):
        """The same-sign D(7,2,1) has local base 67."""
        result = cli_runner.invoke(main, [*WORKED_EXAMPLE, "--json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["input"]["descriptor"] == "family:dki(n=7,k=2,i=1)+same-sign"
        bases = data["analysis"]["bases"]
        assert bases["base"] == 67
        assert bases["ordered"] == [60 + k for k in range(1, 8)]

    def test_no_analyze_prints_edge_list(self, cli_runner):
        result = cli_runner.invoke(main, [*WORKED_EXAMPLE, "--no-analyze"])
        assert result.exit_code == 0
        lines = [line for line in result.output.splitlines() if not line.startswith("#")]
        assert lines[0] == "7"
        assert len(lines) == 9
        assert "dki(n=7,k=2,i=1)+same-sign" in result.output

    def test_all_positive_is_powerful(self, cli_runner):
        result = cli_runner.invoke(main, ["family", "--name", "d1", "--n", "5"])
        assert result.exit_code == 3

    def test_all_positive_exp_only(self, cli_runner):
        """Exponents need no signs; the Wielandt digraph attains n^2-2n+2."""
        result = cli_runner.invoke(main, ["family", "--name", "d1", "--n", "5", "--exp-only", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.output)["analysis"]["exponents"]["exponent"] == 17

    def test_conflicting_sign_options(self, cli_runner):
        result = cli_runner.invoke(
            main, ["family", "--name", "d1", "--n", "5", "--preset", "d1-signed", "--negative", "1,2"]
        )
        assert result.exit_code == 2
        assert "cannot be combined" in result.output

    def test_out_of_range_parameters(self, cli_runner):
        result = cli_runner.invoke(main, ["family", "--name", "dki", "--n", "7", "--k", "9", "--i", "1"])
        assert result.exit_code == 1

    def test_bad_negative_arc(self, cli_runner):
        result = cli_runner.invoke(main, ["family", "--name", "d1", "--n", "5", "--negative", "1-2"])
        assert result.exit_code == 2

    def test_unknown_family(self, cli_runner):
        result = cli_runner.invoke(main, ["family", "--name", "zz", "--n", "5"])
        assert result.exit_code == 2
