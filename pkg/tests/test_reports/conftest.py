"""Test fixtures for report tests."""

import pytest

from signbase.engine.analysis import DigraphAnalyzer
from signbase.reports.generator import ReportGenerator
from signbase.verify.outcomes import VerificationSummary, check


@pytest.fixture
def sample_summary():
    """Two passing outcomes and one failure across two suites."""
    summary = VerificationSummary()
    summary.add(check("bases", "d1(n=6)+d1-signed", "ordered l(k)", [51, 52], [51, 52]))
    summary.add(check("bases", "d2(n=6)+d2-same", "ordered l(k)", [50, 51], [50, 51]))
    summary.add(
        check(
            "tiny",
            "exhaustive(n=2)",
            "bases agree with walk oracle",
            0,
            1,
            witness="# engine vs oracle\n2\n1 1 +\n",
        )
    )
    summary.add_note("n=8 seed=42: only 3 of 5 samples accepted in 1000 attempts")
    summary.finalize()
    return summary


@pytest.fixture
def sample_run():
    return {"profile": "quick", "suites": ["bases", "tiny"], "seed": 42}


@pytest.fixture
def sample_verification_report(sample_run, sample_summary):
    return ReportGenerator().verification_report(sample_run, sample_summary)


@pytest.fixture
def two_vertex_result(two_vertex_digraph):
    return DigraphAnalyzer().analyze(two_vertex_digraph)


@pytest.fixture
def tmp_report_dir(tmp_path):
    """Temporary directory for report output."""
    report_dir = tmp_path / "reports"
    report_dir.mkdir()
    return report_dir
