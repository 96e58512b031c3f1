# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""
Generators for the named extremal digraph families and their signed variants.

Vertices follow the usual v_1..v_n numbering. A cycle written as a vertex
tuple ``(a, b, c, ...)`` contributes the arcs a->b, b->c, ... and the
closing arc back to ``a``.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from enum import Enum

from pydantic import BaseModel, Field, field_validator, model_validator

from signbase.engine.digraph import SignedDigraph, cycle_catalog
from signbase.errors import FamilyRangeError
from signbase.families.signing import canonical_signing, solve_signs


class Family(str, Enum):
    """Underlying digraph families."""

    D1 = "d1"
    D2 = "d2"
    DKI = "dki"
    SCRIPT_L = "script-l"
    F = "f"
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"
    F5 = "f5"
    F6 = "f6"
    F7 = "f7"
    F_PRIME = "f-prime"
    B1 = "b1"
    B2 = "b2"
    B3 = "b3"
    B4 = "b4"


class SignPolicy(str, Enum):
    """How arc signs are chosen for a generated digraph."""

    ALL_POSITIVE = "all-positive"
    PRESET = "preset"
    EXPLICIT = "explicit"
    SOLVE = "solve"


class Preset(str, Enum):
    """Named signed variants."""

    SAME_SIGN = "same-sign"
    NONPOWERFUL = "nonpowerful"
    D1_SIGNED = "d1-signed"
    D2_SAME = "d2-same"
    D2_SPLIT = "d2-split"
    SKI = "ski"
    T = "t"
    S0 = "s0"
    S1 = "s1"
    S2 = "s2"
    S3 = "s3"
    S4 = "s4"
    S5 = "s5"
    S6 = "s6"
    S7 = "s7"
    SI = "si"
    Q1 = "q1"
    Q2 = "q2"
    Q3 = "q3"
    Q4 = "q4"


# Named variants and the only family each one signs
PRESET_FAMILIES: dict[Preset, Family] = {
    Preset.D1_SIGNED: Family.D1,
    Preset.D2_SAME: Family.D2,
    Preset.D2_SPLIT: Family.D2,
    Preset.SKI: Family.DKI,
    Preset.T: Family.SCRIPT_L,
    Preset.S0: Family.F,
    Preset.S1: Family.F1,
    Preset.S2: Family.F2,
    Preset.S3: Family.F3,
    Preset.S4: Family.F4,
    Preset.S5: Family.F5,
    Preset.S6: Family.F6,
    Preset.S7: Family.F7,
    Preset.SI: Family.F_PRIME,
    Preset.Q1: Family.B1,
    Preset.Q2: Family.B2,
    Preset.Q3: Family.B3,
    Preset.Q4: Family.B4,
}

FAMILY_RANGES: dict[Family, str] = {
    Family.D1: "n >= 3",
    Family.D2: "n >= 3",
    Family.DKI: "gcd(n, n-k) = 1 and 1 <= i <= min(k+1, n-k-1)",
    Family.SCRIPT_L: "odd n >= 7",
    Family.F: "n >= 6",
    Family.F1: "n >= 6",
    Family.F2: "n >= 6",
    Family.F3: "n >= 6",
    Family.F4: "n >= 6",
    Family.F5: "n >= 6",
    Family.F6: "n >= 6",
    Family.F7: "n >= 6",
    Family.F_PRIME: "n >= 6 and 2 <= i <= n-3",
    Family.B1: "n >= 6 and gcd(n, n-3) = 1",
    Family.B2: "n >= 6 and gcd(n, n-3) = 1",
    Family.B3: "n >= 6 and gcd(n, n-3) = 1",
    Family.B4: "n >= 6 and gcd(n, n-3) = 1",
}


class FamilySpec(BaseModel):
    """Symbolic description of a family member and its sign policy."""

    family: Family
    n: int = Field(..., ge=1)
    k: int | None = None
    i: int | None = None
    policy: SignPolicy = SignPolicy.ALL_POSITIVE
    preset: Preset | None = None
    negative_arcs: list[tuple[int, int]] = Field(default_factory=list)
    cycle_signs: dict[int, int] = Field(default_factory=dict)

    @field_validator("cycle_signs")
    @classmethod
    def validate_cycle_signs(cls, v: dict[int, int]) -> dict[int, int]:
        bad = {length: sign for length, sign in v.items() if sign not in (1, -1)}
        if bad:
            raise ValueError(f"cycle signs must be +1 or -1, got {bad}")
        return v

    @model_validator(mode="after")
    def validate_policy(self) -> FamilySpec:
        """The policy fields must match the chosen policy."""
        if self.policy == SignPolicy.PRESET and self.preset is None:
            raise ValueError("preset policy needs a preset name")
        if self.policy != SignPolicy.PRESET and self.preset is not None:
            raise ValueError("a preset name requires the preset policy")
        if self.policy != SignPolicy.EXPLICIT and self.negative_arcs:
            raise ValueError("negative arcs require the explicit policy")
        if self.policy != SignPolicy.SOLVE and self.cycle_signs:
            raise ValueError("cycle-sign constraints require the solve policy")
        if self.preset is not None and self.preset in PRESET_FAMILIES:
            expected = PRESET_FAMILIES[self.preset]
            if expected != self.family:
                raise ValueError(
                    f"preset {self.preset.value} applies to family {expected.value}, "
                    f"not {self.family.value}"
                )
        return self

    def descriptor(self) -> str:
        """Stable human-readable name, e.g. ``dki(n=7,k=2,i=1)+same-sign``."""
        params = [f"n={self.n}"]
        if self.k is not None:
            params.append(f"k={self.k}")
        if self.i is not None:
            params.append(f"i={self.i}")
        text = f"{self.family.value}({','.join(params)})"
        if self.policy == SignPolicy.PRESET and self.preset is not None:
            text += f"+{self.preset.value}"
        elif self.policy == SignPolicy.EXPLICIT:
            text += "+neg[" + ";".join(f"{u}>{v}" for u, v in sorted(self.negative_arcs)) + "]"
        elif self.policy == SignPolicy.SOLVE:
            text += "+solve[" + ";".join(
                f"{length}:{'+' if sign > 0 else '-'}" for length, sign in sorted(self.cycle_signs.items())
            ) + "]"
        return text


# =============================================================================
# Parameter ranges
# =============================================================================


def check_range(family: Family, n: int, k: int | None = None, i: int | None = None) -> None:
    """Raise FamilyRangeError naming the violated range."""

    def fail(detail: str) -> FamilyRangeError:
        return FamilyRangeError(f"{family.value}: {detail} (requires {FAMILY_RANGES[family]})")

    if family in (Family.D1, Family.D2):
        if n < 3:
            raise fail(f"n={n} too small")
        return

    if family == Family.DKI:
        if k is None or i is None:
            raise fail("parameters k and i are required")
        if n < 3 or not 1 <= k <= n - 2:
            raise fail(f"k={k} out of range 1..n-2 for n={n}")
        if math.gcd(n, n - k) != 1:
            raise fail(f"gcd({n}, {n - k}) = {math.gcd(n, n - k)}")
        if not 1 <= i <= min(k + 1, n - k - 1):
            raise fail(f"i={i} out of range 1..{min(k + 1, n - k - 1)}")
        return

    if family == Family.SCRIPT_L:
        if n % 2 == 0:
            raise fail(f"script-l requires odd n, got n={n}")
        if n < 7:
            raise fail(f"n={n} too small")
        return

    if n < 6:
        raise fail(f"n={n} too small")
    if family == Family.F_PRIME:
        if i is None:
            raise fail("parameter i is required")
        if not 2 <= i <= n - 3:
            raise fail(f"i={i} out of range 2..{n - 3}")
    if family in (Family.B1, Family.B2, Family.B3, Family.B4) and math.gcd(n, n - 3) != 1:
        raise fail(f"gcd({n}, {n - 3}) = {math.gcd(n, n - 3)}")


def valid_parameters(family: Family, n: int) -> list[tuple[int | None, int | None]]:
    """Every (k, i) for which ``family`` exists at order n, in ascending order."""
    if family == Family.DKI:
        candidates: list[tuple[int | None, int | None]] = [
            (k, i) for k in range(1, n - 1) for i in range(1, k + 2)
        ]
    elif family == Family.F_PRIME:
        candidates = [(None, i) for i in range(2, n - 2)]
    else:
        candidates = [(None, None)]

    valid = []
    for k, i in candidates:
        try:
            check_range(family, n, k, i)
        except FamilyRangeError:
            continue
        valid.append((k, i))
    return valid


# =============================================================================
# Underlying digraphs
# =============================================================================


def _cycle(vertices: Sequence[int]) -> list[tuple[int, int]]:
    return [(vertices[j], vertices[(j + 1) % len(vertices)]) for j in range(len(vertices))]


def _hamilton(n: int) -> list[tuple[int, int]]:
    """C_n = (v_1, v_n, v_{n-1}, ..., v_2)."""
    return _cycle([1, *range(n, 1, -1)])


def _long_cycle(n: int) -> list[tuple[int, int]]:
    """(v_1, v_{n-1}, ..., v_2): the (n-1)-cycle avoiding v_n."""
    return _cycle([1, *range(n - 1, 1, -1)])


def _d1(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _cycle(list(range(n, 0, -1))) + [(1, n - 1)]


def _d2(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _d1(n, k, i) + [(2, n)]


def _dki(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    assert k is not None and i is not None
    return _hamilton(n) + [(j, n - k + j - 1) for j in range(1, i + 1)]


def _script_l(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _hamilton(n) + [(1, n - 2), (3, n)]


def _f(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _cycle([1, n, n - 1, *range(n - 3, 1, -1)]) + [(1, n - 2), (n - 2, n - 3)]


def _f1(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _long_cycle(n) + [(1, n - 2), (2, n), (n, n - 1)]


def _f2(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _cycle([1, n, *range(n - 2, 1, -1)]) + [(1, n - 2), (n, n - 1), (n - 1, n - 3)]


def _f3(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _cycle([1, *range(n - 2, 1, -1)]) + [(1, n - 1), (n - 1, n - 2), (1, n), (n, n - 2)]


def _f_prime(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    assert i is not None
    return _long_cycle(n) + [(1, n - 2), (i + 1, n), (n, i - 1)]


def _f4(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _long_cycle(n) + [(1, n - 2), (1, n), (n, n - 3)]


def _f5(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _long_cycle(n) + [(1, n - 2), (2, n), (n, n - 2)]


def _f6(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _long_cycle(n) + [(1, n), (n, n - 3), (2, n - 1)]


def _f7(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _long_cycle(n) + [(1, n - 2), (3, n), (n, n - 1)]


def _b1(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _hamilton(n) + [(1, n - 3), (3, n - 1)]


def _b2(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _hamilton(n) + [(1, n - 3), (4, n)]


def _b3(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _hamilton(n) + [(1, n - 3), (2, n - 2), (4, n)]


def _b4(n: int, k: int | None, i: int | None) -> list[tuple[int, int]]:
    return _hamilton(n) + [(1, n - 3), (3, n - 1), (4, n)]


_BUILDERS: dict[Family, Callable[[int, int | None, int | None], list[tuple[int, int]]]] = {
    Family.D1: _d1,
    Family.D2: _d2,
    Family.DKI: _dki,
    Family.SCRIPT_L: _script_l,
    Family.F: _f,
    Family.F1: _f1,
    Family.F2: _f2,
    Family.F3: _f3,
    Family.F4: _f4,
    Family.F5: _f5,
    Family.F6: _f6,
    Family.F7: _f7,
    Family.F_PRIME: _f_prime,
    Family.B1: _b1,
    Family.B2: _b2,
    Family.B3: _b3,
    Family.B4: _b4,
}


def build_underlying(
    family: Family, n: int, k: int | None = None, i: int | None = None
) -> SignedDigraph:
    """The all-positive member of ``family`` at order n."""
    check_range(family, n, k, i)
    return SignedDigraph.from_arcs(n, _BUILDERS[family](n, k, i))


# =============================================================================
# Signed variants
# =============================================================================


def preset(
    variant: Preset,
    n: int,
    k: int | None = None,
    i: int | None = None,
    family: Family | None = None,
) -> SignedDigraph:
    """Canonical signed variant: the fewest negative arcs meeting the variant's hypotheses.

    Named variants fix their family; ``same-sign`` and ``nonpowerful`` need
    ``family``. Every variant is nonpowerful. All variants except
    ``nonpowerful``, ``d1-signed`` and ``d2-split`` make every cycle-length
    class sign-constant; ``d2-split`` gives the two (n-1)-cycles opposite signs.
    """
    if variant in PRESET_FAMILIES:
        expected = PRESET_FAMILIES[variant]
        if family is not None and family != expected:
            raise FamilyRangeError(
                f"preset {variant.value} applies to family {expected.value}, not {family.value}"
            )
        family = expected
    elif family is None:
        raise FamilyRangeError(f"preset {variant.value} needs a family")

    underlying = build_underlying(family, n, k, i)
    catalog = cycle_catalog(underlying)

    if variant in (Preset.NONPOWERFUL, Preset.D1_SIGNED):
        return canonical_signing(underlying, catalog, constrained=())
    if variant == Preset.D2_SPLIT:
        return canonical_signing(underlying, catalog, constrained=(n,), split=n - 1)
    return canonical_signing(underlying, catalog, constrained=catalog.lengths)


def generate(spec: FamilySpec) -> SignedDigraph:
    """Build the signed digraph described by ``spec``."""
    if spec.policy == SignPolicy.PRESET:
        assert spec.preset is not None
        return preset(spec.preset, spec.n, spec.k, spec.i, family=spec.family)

    underlying = build_underlying(spec.family, spec.n, spec.k, spec.i)
    if spec.policy == SignPolicy.ALL_POSITIVE:
        return underlying
    if spec.policy == SignPolicy.EXPLICIT:
        missing = sorted(set(spec.negative_arcs) - set(underlying.arc_signs))
        if missing:
            raise FamilyRangeError(f"{spec.descriptor()}: arcs not in the digraph: {missing}")
        return underlying.with_negative_arcs(spec.negative_arcs)
    catalog = cycle_catalog(underlying)
    return underlying.with_signs(solve_signs(underlying, catalog, spec.cycle_signs))
