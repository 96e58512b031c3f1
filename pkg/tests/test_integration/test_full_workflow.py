"""End-to-end integration tests."""

import json

from click.testing import CliRunner

from signbase.cli.main import main

SKI_ARGS = ["family", "--name", "dki", "--n", "8", "--k", "3", "--i", "1", "--preset", "ski"]


class TestFullWorkflow:
    """Tests for generate, save, analyze and verify round trips."""

    def test_generated_file_analyzes_like_the_family(self, tmp_path):
        """Saving a generated member and analyzing the file gives the same body."""
        runner = CliRunner()

        generated = runner.invoke(main, [*SKI_ARGS, "--no-analyze"])
        assert generated.exit_code == 0
        graph_file = tmp_path / "ski.txt"
        graph_file.write_text(generated.output)

        from_family = runner.invoke(main, [*SKI_ARGS, "--json"])
        from_file = runner.invoke(main, ["analyze", str(graph_file), "--json"])
        assert from_family.exit_code == 0
        assert from_file.exit_code == 0

        family_data = json.loads(from_family.output)
        file_data = json.loads(from_file.output)
        assert family_data["analysis"] == file_data["analysis"]
        assert file_data["analysis"]["bases"]["base"] == 78

    def test_report_file_matches_stdout(self, tmp_path, sample_profile_file):
        """The JSON written with -o is byte-identical to the printed report."""
        runner = CliRunner()
        output = tmp_path / "reports" / "verify.json"

        result = runner.invoke(
            main,
            ["verify", "--profile", str(sample_profile_file), "--json", "-o", str(output)],
        )

        assert result.exit_code == 0
        assert output.read_text(encoding="utf-8") == result.output

    def test_family_analysis_saved_with_output(self, tmp_path):
        runner = CliRunner()
        output = tmp_path / "family.json"

        result = runner.invoke(
            main,
            ["family", "--name", "d1", "--n", "6", "--preset", "d1-signed", "-o", str(output)],
        )

        assert result.exit_code == 0
        data = json.loads(output.read_text(encoding="utf-8"))
        # 2n^2-4n+2+k
        assert data["analysis"]["bases"]["ordered"] == [50 + k for k in range(1, 7)]
        assert "Report written to" in result.output

    def test_powerful_member_then_signed_variant(self):
        """All-positive D2 is powerful; its same-sign preset is not."""
        runner = CliRunner()

        unsigned = runner.invoke(main, ["family", "--name", "d2", "--n", "6"])
        signed = runner.invoke(main, ["family", "--name", "d2", "--n", "6", "--preset", "d2-same", "--json"])

        assert unsigned.exit_code == 3
        assert signed.exit_code == 0
        # 2n^2-4n+1+k
        assert json.loads(signed.output)["analysis"]["bases"]["base"] == 55
