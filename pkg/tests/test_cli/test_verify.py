"""Tests for verify command."""

import json

import click
import pytest

from signbase.cli.commands.verify import OrderRange, _effective_profile
from signbase.cli.main import main
from signbase.config.models import SuiteName, VerifyProfile


class TestOrderRange:
    """Tests for the --n parameter type."""

    @pytest.mark.parametrize(
        "text,expected",
        [("14", range(14, 15)), ("6..10", range(6, 11)), (" 7..7 ", range(7, 8))],
    )
    def test_valid(self, text, expected):
        assert OrderRange().convert(text, None, None) == expected

    @pytest.mark.parametrize("text", ["", "six", "10..6", "0", "3..x"])
    def test_invalid(self, text):
        with pytest.raises(click.BadParameter):
            OrderRange().convert(text, None, None)


class TestEffectiveProfile:
    """Tests for command-line overrides of a profile."""

    @pytest.fixture
    def profile(self):
        return VerifyProfile(name="base", battery_orders=[8])

    def test_no_overrides(self, profile):
        assert _effective_profile(profile, None, None, None, None) is profile

    def test_single_suite_drops_battery(self, profile):
        effective = _effective_profile(profile, "exponents", range(6, 11), None, None)
        assert effective.suites == [SuiteName.EXPONENTS]
        assert effective.battery_orders == []
        assert (effective.n_min, effective.n_max) == (6, 10)

    def test_battery_only(self, profile):
        effective = _effective_profile(profile, "battery", range(10, 11), 5, 3)
        assert effective.suites == []
        assert effective.battery_orders == [10]
        assert (effective.samples, effective.seed) == (5, 3)

    def test_gap_orders(self, profile):
        effective = _effective_profile(profile, "gaps", range(14, 16), None, None)
        assert effective.gap_orders == [14, 15]

    def test_tiny_order(self, profile):
        effective = _effective_profile(profile, "tiny", range(1, 3), None, None)
        assert effective.tiny_n_max == 2

    def test_all(self, profile):
        effective = _effective_profile(profile, "all", None, None, None)
        assert effective.suites == list(SuiteName)
        assert effective.battery_orders == [8]


class TestVerifyCommand:
    """Tests for the verify command."""

    def test_profile_file_json(self, cli_runner, sample_profile_file):
        result = cli_runner.invoke(main, ["verify", "--profile", str(sample_profile_file), "--json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["run"]["suites"] == ["tiny"]
        assert data["summary"]["failed"] == 0
        assert data["summary"]["total"] == len(data["outcomes"])
        assert len(data["report_hash"]) == 64

    def test_json_is_reproducible(self, cli_runner, sample_profile_file):
        args = ["verify", "--profile", str(sample_profile_file), "--suite", "tiny", "--n", "1", "--json"]
        first = cli_runner.invoke(main, args)
        second = cli_runner.invoke(main, [*args[:-1], "--workers", "2", "--json"])
        assert first.output == second.output

    def test_text_summary(self, cli_runner, sample_profile_file):
        result = cli_runner.invoke(
            main, ["verify", "--profile", str(sample_profile_file), "--suite", "tiny", "--n", "1"]
        )
        assert result.exit_code == 0
        assert "Verification Summary" in result.output
        assert "outcomes passed" in result.output

    def test_report_files(self, cli_runner, sample_profile_file, tmp_path):
        output = tmp_path / "verify.json"
        csv_path = tmp_path / "verify.csv"
        result = cli_runner.invoke(
            main,
            [
                "verify", "--profile", str(sample_profile_file), "--suite", "tiny", "--n", "1",
                "-o", str(output), "--csv", str(csv_path),
            ],
        )
        assert result.exit_code == 0
        assert json.loads(output.read_text())["summary"]["failed"] == 0
        assert csv_path.read_text(encoding="utf-8-sig").startswith("suite,instance,claim")

    def test_gap_order_below_threshold(self, cli_runner):
        """Gap statements need n >= 14; smaller orders are a usage error."""
        result = cli_runner.invoke(main, ["verify", "--suite", "gaps", "--n", "6"])
        assert result.exit_code == 2

    def test_bad_range(self, cli_runner):
        result = cli_runner.invoke(main, ["verify", "--suite", "exponents", "--n", "9..6"])
        assert result.exit_code == 2

    def test_unknown_profile(self, cli_runner):
        result = cli_runner.invoke(main, ["verify", "--profile", "nonexistent"])
        assert result.exit_code == 1
        assert "Profile not found" in result.output

    def test_unknown_suite(self, cli_runner):
        result = cli_runner.invoke(main, ["verify", "--suite", "speed"])
        assert result.exit_code == 2
