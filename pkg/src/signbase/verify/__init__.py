# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Verification harness for the closed-form exponent and base statements."""

from signbase.verify.formulas import (
    CHARACTERIZATIONS,
    FormulaPoint,
    base_formula,
    characterization,
    exponent_formula,
    gap_intervals,
)
from signbase.verify.outcomes import VerificationOutcome, VerificationSummary, check
from signbase.verify.sampler import RandomSignedDigraphSampler, SampledDigraph
from signbase.verify.suites import (
    SuiteRunner,
    characterization_check,
    exhaustive_tiny,
    gap_scan,
    random_battery,
    verify_base_formulas,
    verify_exponent_formulas,
)

__all__ = [
    "CHARACTERIZATIONS",
    "FormulaPoint",
    "RandomSignedDigraphSampler",
    "SampledDigraph",
    "SuiteRunner",
    "VerificationOutcome",
    "VerificationSummary",
    "base_formula",
    "characterization",
    "characterization_check",
    "check",
    "exhaustive_tiny",
    "exponent_formula",
    "gap_intervals",
    "gap_scan",
    "random_battery",
    "verify_base_formulas",
    "verify_exponent_formulas",
]
