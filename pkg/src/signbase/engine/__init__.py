# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Sign-semiring engine: digraphs, exponents and local bases."""

from signbase.engine.analysis import AnalysisResult, DigraphAnalyzer
from signbase.engine.bases import BaseReport, base_report, closed_sssd_time, sssd_oracle
from signbase.engine.digraph import (
    Arc,
    Cycle,
    CycleCatalog,
    SignedDigraph,
    cycle_catalog,
    find_distinguished_pair,
    is_nonpowerful,
    is_primitive,
    parse,
)
from signbase.engine.exponents import (
    CWalkReport,
    ExponentReport,
    c_walk_report,
    exponent_report,
    exponent_upper_bound,
    frobenius,
)
from signbase.engine.semiring import Sign, SignMatrix, mat_mul, power_stream

__all__ = [
    "AnalysisResult",
    "Arc",
    "BaseReport",
    "CWalkReport",
    "Cycle",
    "CycleCatalog",
    "DigraphAnalyzer",
    "ExponentReport",
    "Sign",
    "SignMatrix",
    "SignedDigraph",
    "base_report",
    "c_walk_report",
    "closed_sssd_time",
    "cycle_catalog",
    "exponent_report",
    "exponent_upper_bound",
    "find_distinguished_pair",
    "frobenius",
    "is_nonpowerful",
    "is_primitive",
    "mat_mul",
    "parse",
    "power_stream",
    "sssd_oracle",
]
