# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Named extremal digraph families and their signed variants."""

from signbase.families.generators import (
    FAMILY_RANGES,
    PRESET_FAMILIES,
    Family,
    FamilySpec,
    Preset,
    SignPolicy,
    build_underlying,
    check_range,
    generate,
    preset,
    valid_parameters,
)
from signbase.families.signing import canonical_signing, gf2_solve, solve_signs

__all__ = [
    "FAMILY_RANGES",
    "PRESET_FAMILIES",
    "Family",
    "FamilySpec",
    "Preset",
    "SignPolicy",
    "build_underlying",
    "canonical_signing",
    "check_range",
    "generate",
    "gf2_solve",
    "preset",
    "solve_signs",
    "valid_parameters",
]
