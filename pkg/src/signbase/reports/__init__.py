# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Analysis and verification reports."""

from signbase.reports.csv_report import CSVReportBuilder
from signbase.reports.generator import ReportGenerator
from signbase.reports.json_report import JSONReportBuilder, canonical_json
from signbase.reports.models import AnalysisReport, ReportFormat, VerificationReport

__all__ = [
    "AnalysisReport",
    "CSVReportBuilder",
    "JSONReportBuilder",
    "ReportFormat",
    "ReportGenerator",
    "VerificationReport",
    "canonical_json",
]
