# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Report generation orchestrator."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from signbase.engine.analysis import AnalysisResult
from signbase.reports.csv_report import CSVReportBuilder
from signbase.reports.json_report import JSONReportBuilder
from signbase.reports.models import AnalysisReport, ReportFormat, VerificationReport
from signbase.verify.outcomes import VerificationSummary


class ReportGenerator:
    """Assemble report models and write them in the requested formats."""

    def __init__(self) -> None:
        self.json_builder = JSONReportBuilder()
        self.csv_builder = CSVReportBuilder()

    def analysis_report(
        self, descriptor: str, result: AnalysisResult, include_timing: bool = False
    ) -> AnalysisReport:
        return AnalysisReport(descriptor, result, include_timing)

    def verification_report(
        self, run: dict[str, Any], summary: VerificationSummary
    ) -> VerificationReport:
        """Build a verification report and stamp its content hash."""
        report = VerificationReport(run=run, summary=summary)
        report.report_hash = self._calculate_hash(report)
        return report

    def write(
        self,
        report: VerificationReport,
        outputs: dict[ReportFormat, Path],
    ) -> list[Path]:
        """
        Write ``report`` once per requested format.

        Args:
            report: Verification report
            outputs: Target path per format; TEXT is ignored

        Returns:
            List of generated report file paths
        """
        generated = []
        if ReportFormat.JSON in outputs:
            generated.append(self.json_builder.build(report, outputs[ReportFormat.JSON]))
        if ReportFormat.CSV in outputs:
            generated.append(self.csv_builder.build(report, outputs[ReportFormat.CSV]))
        return generated

    @staticmethod
    def _calculate_hash(report: VerificationReport) -> str:
        """SHA-256 of the report content, excluding the hash itself."""
        data = report.to_dict()
        data["report_hash"] = ""
        payload = json.dumps(data, sort_keys=True, default=str)
        return hashlib.sha256(payload.encode()).hexdigest()
