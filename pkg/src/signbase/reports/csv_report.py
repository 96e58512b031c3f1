# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""CSV report builder: one row per verification outcome."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from signbase.reports.models import VerificationReport

COLUMNS = ["suite", "instance", "claim", "expected", "computed", "status", "witness"]


class CSVReportBuilder:
    """Build CSV outcome tables for spreadsheet analysis."""

    def render(self, report: VerificationReport) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(COLUMNS)
        for outcome in report.summary.outcomes:
            writer.writerow(
                [
                    outcome.suite,
                    outcome.instance,
                    outcome.claim,
                    json.dumps(outcome.expected, sort_keys=True),
                    json.dumps(outcome.computed, sort_keys=True),
                    outcome.status,
                    outcome.witness,
                ]
            )
        return buffer.getvalue()

    def build(self, report: VerificationReport, output_path: Path) -> Path:
        """
        Write a CSV report file.

        Args:
            report: Verification report
            output_path: Path for output file

        Returns:
            Path to generated file
        """
        output_path.parent.mkdir(parents=True, exist_ok=True)
        # utf-8-sig keeps spreadsheet applications happy
        output_path.write_text(self.render(report), encoding="utf-8-sig")
        return output_path
