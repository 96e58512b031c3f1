"""Tests for CSV report builder."""

import csv
import json

from signbase.reports.csv_report import COLUMNS, CSVReportBuilder


class TestCSVReportBuilder:
    """Tests for CSVReportBuilder."""

    def test_build_creates_file(self, sample_verification_report, tmp_report_dir):
        """CSV file is created."""
        output_path = tmp_report_dir / "verify.csv"

        result = CSVReportBuilder().build(sample_verification_report, output_path)

        assert result.exists()
        assert result == output_path

    def test_header_and_rows(self, sample_verification_report, tmp_report_dir):
        """One header row, then one row per outcome."""
        output_path = tmp_report_dir / "verify.csv"
        CSVReportBuilder().build(sample_verification_report, output_path)

        with open(output_path, encoding="utf-8-sig", newline="") as f:
            rows = list(csv.reader(f))

        assert rows[0] == COLUMNS
        assert len(rows) == 4

    def test_values_are_json_encoded(self, sample_verification_report):
        rows = list(csv.DictReader(CSVReportBuilder().render(sample_verification_report).splitlines(keepends=True)))
        first = rows[0]
        assert first["instance"] == "d1(n=6)+d1-signed"
        assert json.loads(first["computed"]) == [51, 52]
        assert first["status"] == "PASS"

    def test_failure_row_keeps_witness(self, sample_verification_report):
        text = CSVReportBuilder().render(sample_verification_report)
        rows = list(csv.DictReader(text.splitlines(keepends=True)))
        (failed,) = [row for row in rows if row["status"] == "FAIL"]
        assert failed["claim"] == "bases agree with walk oracle"
        assert failed["witness"] == "# engine vs oracle\n2\n1 1 +\n"

    def test_utf8_bom(self, sample_verification_report, tmp_report_dir):
        """CSV starts with a BOM for spreadsheet applications."""
        output_path = tmp_report_dir / "verify.csv"
        CSVReportBuilder().build(sample_verification_report, output_path)
        assert output_path.read_bytes().startswith(b"\xef\xbb\xbf")
