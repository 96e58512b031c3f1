# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Report data models."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from signbase import SCHEMA_VERSION, __version__
from signbase.engine.analysis import AnalysisResult
from signbase.verify.outcomes import VerificationSummary


class ReportFormat(str, Enum):
    """Supported report output formats."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


@dataclass
class AnalysisReport:
    """Everything ``analyze`` and ``family`` print about one digraph."""

    input_descriptor: str
    result: AnalysisResult
    include_timing: bool = False

    def analysis_dict(self) -> dict[str, Any]:
        """The report body; identical for identical digraphs whatever their source."""
        result = self.result
        digraph = result.digraph
        body: dict[str, Any] = {
            "order": digraph.n,
            "arcs": [[arc.tail, arc.head, arc.sign] for arc in digraph.arcs],
            "primitive": True,
            "nonpowerful": result.nonpowerful,
            "cycle_lengths": list(result.catalog.lengths),
            "cycle_count": len(result.catalog.cycles),
            "cycles": [cycle.to_dict() for cycle in result.catalog.cycles],
            "cycle_class_signs": {
                str(length): sorted(signs) for length, signs in result.class_signs.items()
            },
            "distinguished_pair": (
                [cycle.to_dict() for cycle in result.distinguished_pair]
                if result.distinguished_pair is not None
                else None
            ),
            "exponents": result.exponents.to_dict(),
            "c_walks": result.c_walks.to_dict(),
            "exponent_bound": result.bound.to_dict(),
            "frobenius": result.bound.frobenius,
        }
        if result.bases is not None:
            body["bases"] = result.bases.to_dict()
        if result.closed_sssd_times is not None:
            body["closed_sssd_times"] = list(result.closed_sssd_times)
        return body

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        data: dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "generator_version": __version__,
            "input": {"descriptor": self.input_descriptor},
            "analysis": self.analysis_dict(),
        }
        if self.include_timing:
            data["timing"] = dict(self.result.timing_ms)
        return data


@dataclass
class VerificationReport:
    """A verification run: its parameters, counts and every outcome."""

    run: dict[str, Any]
    summary: VerificationSummary
    report_hash: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "generator_version": __version__,
            "run": dict(self.run),
            "summary": self.summary.to_dict(),
            "outcomes": [outcome.to_dict() for outcome in self.summary.outcomes],
            "report_hash": self.report_hash,
        }
