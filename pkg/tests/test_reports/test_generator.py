"""Tests for report generator."""

from signbase.reports.generator import ReportGenerator
from signbase.reports.models import AnalysisReport, ReportFormat, VerificationReport
from signbase.verify.outcomes import VerificationSummary, check


class TestReportGenerator:
    """Tests for ReportGenerator."""

    def test_verification_report_hash(self, sample_verification_report):
        """Hash is a SHA-256 hex digest."""
        assert isinstance(sample_verification_report, VerificationReport)
        assert len(sample_verification_report.report_hash) == 64

    def test_hash_is_reproducible(self, sample_run, sample_summary):
        generator = ReportGenerator()
        first = generator.verification_report(sample_run, sample_summary)
        second = generator.verification_report(sample_run, sample_summary)
        assert first.report_hash == second.report_hash

    def test_hash_changes_with_content(self, sample_run, sample_summary):
        generator = ReportGenerator()
        other = VerificationSummary()
        other.add(check("bases", "d1(n=6)+d1-signed", "ordered l(k)", [51, 52], [51, 53]))
        other.finalize()
        assert (
            generator.verification_report(sample_run, sample_summary).report_hash
            != generator.verification_report(sample_run, other).report_hash
        )

    def test_write_requested_formats(self, sample_verification_report, tmp_report_dir):
        """One file per requested format; TEXT is ignored."""
        outputs = {
            ReportFormat.JSON: tmp_report_dir / "verify.json",
            ReportFormat.CSV: tmp_report_dir / "verify.csv",
            ReportFormat.TEXT: tmp_report_dir / "verify.txt",
        }
        generated = ReportGenerator().write(sample_verification_report, outputs)

        assert generated == [outputs[ReportFormat.JSON], outputs[ReportFormat.CSV]]
        assert not outputs[ReportFormat.TEXT].exists()

    def test_write_nothing(self, sample_verification_report):
        assert ReportGenerator().write(sample_verification_report, {}) == []

    def test_analysis_report(self, two_vertex_result):
        report = ReportGenerator().analysis_report("two.txt", two_vertex_result)
        assert isinstance(report, AnalysisReport)
        assert report.include_timing is False
