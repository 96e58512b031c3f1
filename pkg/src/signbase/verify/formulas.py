# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""
Closed-form exponents, local bases, gap intervals and bound lemmas.

Every formula yields one FormulaPoint per index m = 1..n of the ordered
sequence. ``vertex`` names the vertex v_j whose own value is claimed to be
that number, or None where no vertex is pinned down.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from signbase.families.generators import Family, Preset


@dataclass(frozen=True)
class FormulaPoint:
    """Expected value at position ``index`` of the ordered sequence."""

    index: int
    value: int
    vertex: int | None = None


@dataclass(frozen=True)
class FormulaBound:
    """Upper bound at position ``index``; used where only an inequality is known."""

    index: int
    value: int


def _linear(n: int, offset: int) -> list[FormulaPoint]:
    return [FormulaPoint(m, offset + m, m) for m in range(1, n + 1)]


# =============================================================================
# Exponents
# =============================================================================


def _dki_exponents(n: int, k: int, i: int) -> list[FormulaPoint]:
    return _linear(n, (n - 2) * (n - k) + 1 - i)


def _f_exponents(n: int) -> list[FormulaPoint]:
    return [
        FormulaPoint(m, n * n - 5 * n + (7 if m <= n - 2 else 6) + m, m)
        for m in range(1, n + 1)
    ]


def _f3_exponents(n: int) -> list[FormulaPoint]:
    return [
        FormulaPoint(m, n * n - 5 * n + (6 if m <= n - 1 else 5) + m, m)
        for m in range(1, n + 1)
    ]


def _f4_exponents(n: int) -> list[FormulaPoint]:
    points = [FormulaPoint(m, n * n - 5 * n + 6 + m, m) for m in range(1, n - 1)]
    points.append(FormulaPoint(n - 1, n * n - 4 * n + 4, n))
    points.append(FormulaPoint(n, n * n - 4 * n + 5, n - 1))
    return points


def _f5_exponents(n: int) -> list[FormulaPoint]:
    # the last two positions name the same vertex twice; no vertex claim there
    points = [FormulaPoint(m, n * n - 5 * n + 6 + m, m) for m in range(1, n - 1)]
    points.append(FormulaPoint(n - 1, n * n - 4 * n + 5))
    points.append(FormulaPoint(n, n * n - 4 * n + 5))
    return points


def _f_prime_exponents(n: int, i: int) -> list[FormulaPoint]:
    points = []
    for m in range(1, n + 1):
        if m <= i:
            points.append(FormulaPoint(m, n * n - 5 * n + 6 + m, m))
        elif m == i + 1:
            points.append(FormulaPoint(m, n * n - 5 * n + 5 + m, n))
        else:
            points.append(FormulaPoint(m, n * n - 5 * n + 5 + m, m - 1))
    return points


def exponent_formula(
    family: Family, n: int, k: int | None = None, i: int | None = None
) -> list[FormulaPoint]:
    """Ordered local exponents of the all-positive member of ``family``.

    Raises:
        ValueError: a required parameter is missing
    """
    if family == Family.DKI:
        if k is None or i is None:
            raise ValueError("dki needs k and i")
        return _dki_exponents(n, k, i)
    if family == Family.F_PRIME:
        if i is None:
            raise ValueError("f-prime needs i")
        return _f_prime_exponents(n, i)

    simple: dict[Family, Callable[[int], list[FormulaPoint]]] = {
        Family.D1: lambda n: _dki_exponents(n, 1, 1),
        Family.D2: lambda n: _dki_exponents(n, 1, 2),
        Family.SCRIPT_L: lambda n: _linear(n, (n - 1) * (n - 3) - 1),
        Family.F: _f_exponents,
        Family.F1: lambda n: _linear(n, n * n - 5 * n + 6),
        Family.F2: _f_exponents,
        Family.F3: _f3_exponents,
        Family.F4: _f4_exponents,
        Family.F5: _f5_exponents,
        Family.F6: _f4_exponents,
        Family.F7: lambda n: _linear(n, n * n - 5 * n + 5),
        Family.B1: lambda n: _linear(n, (n - 1) * (n - 4)),
        Family.B2: lambda n: _linear(n, (n - 3) ** 2 + n - 6),
        Family.B3: lambda n: _linear(n, (n - 3) ** 2 + n - 6),
        Family.B4: lambda n: _linear(n, (n - 3) ** 2 + n - 6),
    }
    return simple[family](n)


# =============================================================================
# Local bases
# =============================================================================


def _s0_bases(n: int) -> list[FormulaPoint]:
    return [
        FormulaPoint(m, 2 * n * n - 8 * n + (9 if m <= n - 2 else 8) + m, m)
        for m in range(1, n + 1)
    ]


def _s3_bases(n: int, pin_last: bool = True) -> list[FormulaPoint]:
    points = []
    for m in range(1, n + 1):
        value = 2 * n * n - 8 * n + 8 + m if m <= n - 1 else 2 * n * n - 7 * n + 7
        vertex = m if pin_last or m < n - 1 else None
        points.append(FormulaPoint(m, value, vertex))
    return points


def _s4_bases(n: int) -> list[FormulaPoint]:
    points = [FormulaPoint(m, 2 * n * n - 8 * n + 8 + m, m) for m in range(1, n - 1)]
    points.append(FormulaPoint(n - 1, 2 * n * n - 7 * n + 6, n))
    points.append(FormulaPoint(n, 2 * n * n - 7 * n + 7, n - 1))
    return points


def _si_bases(n: int, i: int) -> list[FormulaPoint]:
    points = []
    for m in range(1, n + 1):
        if m <= i:
            points.append(FormulaPoint(m, 2 * n * n - 8 * n + 8 + m, m))
        elif m == i + 1:
            # v_n ties l(i)
            points.append(FormulaPoint(m, 2 * n * n - 8 * n + 7 + m, n))
        else:
            points.append(FormulaPoint(m, 2 * n * n - 8 * n + 7 + m, m - 1))
    return points


def base_formula(
    variant: Preset, n: int, k: int | None = None, i: int | None = None
) -> list[FormulaPoint]:
    """Ordered local bases of a named signed variant.

    Raises:
        ValueError: the variant has no closed form (``d2-split``, ``nonpowerful``,
            ``same-sign`` off D_{k,i}) or a required parameter is missing
    """
    if variant in (Preset.SKI, Preset.SAME_SIGN):
        if k is None or i is None:
            raise ValueError(f"{variant.value} has a closed form only on dki and needs k and i")
        return _linear(n, (2 * n - 2) * (n - k) + 1 - i)
    if variant == Preset.SI:
        if i is None:
            raise ValueError("si needs i")
        return _si_bases(n, i)

    table: dict[Preset, Callable[[int], list[FormulaPoint]]] = {
        Preset.D1_SIGNED: lambda n: _linear(n, 2 * n * n - 4 * n + 2),
        Preset.D2_SAME: lambda n: _linear(n, 2 * n * n - 4 * n + 1),
        Preset.T: lambda n: _linear(n, 2 * n * (n - 3) + 2),
        Preset.S0: _s0_bases,
        Preset.S1: lambda n: _linear(n, 2 * n * n - 8 * n + 8),
        Preset.S2: _s0_bases,
        Preset.S3: _s3_bases,
        Preset.S4: _s4_bases,
        Preset.S5: lambda n: _s3_bases(n, pin_last=False),
        Preset.S6: _s4_bases,
        Preset.S7: lambda n: _linear(n, 2 * n * n - 8 * n + 7),
        Preset.Q1: lambda n: _linear(n, 2 * n * n - 8 * n + 4),
        Preset.Q2: lambda n: _linear(n, 2 * n * n - 8 * n + 3),
        Preset.Q3: lambda n: _linear(n, 2 * n * n - 8 * n + 3),
        Preset.Q4: lambda n: _linear(n, 2 * n * n - 8 * n + 3),
    }
    if variant not in table:
        raise ValueError(f"no closed-form bases for {variant.value}")
    return table[variant](n)


def d2_split_bounds(n: int) -> list[FormulaBound]:
    """Upper bounds on l(k) for D2 whose two (n-1)-cycles differ in sign."""
    return [
        FormulaBound(m, 2 * n * n - 2 * n + m + 1 if m <= n - 1 else n * n - n)
        for m in range(1, n + 1)
    ]


# =============================================================================
# Gap intervals and characterizations (n >= 14)
# =============================================================================


@dataclass(frozen=True)
class GapInterval:
    """Closed interval that no l(k) may enter."""

    label: str
    low: int
    high: int

    def contains(self, value: int) -> bool:
        return self.low <= value <= self.high


def gap_intervals(n: int, k: int) -> list[GapInterval]:
    """Forbidden intervals for l(k) at order n; empty intervals are dropped."""
    nn = 2 * n * n
    gaps = []
    lower_top = nn - 4 * n + k if n % 2 == 0 else nn - 6 * n + k + 1
    lower_bottom = nn - 8 * n + (10 if k <= n - 2 else 9) + k
    gaps.append(GapInterval("upper", lower_bottom, lower_top))
    if n % 2:
        gaps.append(GapInterval("odd-upper", nn - 6 * n + 5 + k, nn - 4 * n + k))
    gaps.append(GapInterval("lower", nn - 9 * n + 13, nn - 8 * n + 2 + k))
    return [gap for gap in gaps if gap.low <= gap.high]


@dataclass(frozen=True)
class Member:
    """A family instance named by a characterization clause."""

    family: Family
    k: int | None = None
    i: int | None = None


def _members(*entries: tuple[Family, int | None, int | None]) -> tuple[Member, ...]:
    return tuple(Member(family, k, i) for family, k, i in entries)


@dataclass(frozen=True)
class Characterization:
    """``l(m) = 2n^2 + a*n + b + m`` on the index range iff |S| is one of ``members``."""

    label: str
    a: int
    b: int
    first: Callable[[int], int]
    last: Callable[[int], int]
    members: Callable[[int], tuple[Member, ...]]
    odd_only: bool = False

    def value(self, n: int, m: int) -> int:
        return 2 * n * n + self.a * n + self.b + m

    def indices(self, n: int) -> range:
        return range(self.first(n), self.last(n) + 1)

    def matches(self, n: int, ordered: tuple[int, ...]) -> bool:
        return all(ordered[m - 1] == self.value(n, m) for m in self.indices(n))


def _whole(n: int) -> int:
    return n


def _one(n: int) -> int:
    return 1


_D = Family.DKI

CHARACTERIZATIONS: tuple[Characterization, ...] = (
    Characterization("d2-1", -6, 4, _one, _whole, lambda n: _members((_D, 2, 1)), odd_only=True),
    Characterization("d2-2", -6, 3, _one, _whole, lambda n: _members((_D, 2, 2)), odd_only=True),
    Characterization(
        "d2-3-or-l", -6, 2, _one, _whole,
        lambda n: _members((_D, 2, 3), (Family.SCRIPT_L, None, None)), odd_only=True,
    ),
    Characterization(
        "f-or-f2", -8, 9, _one, lambda n: n - 2,
        lambda n: _members((Family.F, None, None), (Family.F2, None, None)),
    ),
    Characterization("f1", -8, 8, _one, _whole, lambda n: _members((Family.F1, None, None))),
    Characterization(
        "f1-f3-f4-f5-f6", -8, 8, _one, lambda n: n - 2,
        lambda n: _members(
            (Family.F1, None, None), (Family.F3, None, None), (Family.F4, None, None),
            (Family.F5, None, None), (Family.F6, None, None),
        ),
    ),
    Characterization(
        "f1-f3-f5", -8, 8, _one, lambda n: n - 1,
        lambda n: _members(
            (Family.F1, None, None), (Family.F3, None, None), (Family.F5, None, None)
        ),
    ),
    Characterization(
        "f-f1-f2-tail", -8, 8, lambda n: n - 1, _whole,
        lambda n: _members(
            (Family.F, None, None), (Family.F1, None, None), (Family.F2, None, None)
        ),
    ),
    Characterization("f7", -8, 7, _one, _whole, lambda n: _members((Family.F7, None, None))),
    Characterization(
        "f4-f6-f7-fprime-tail", -8, 7, lambda n: n - 1, _whole,
        lambda n: _members(
            (Family.F4, None, None), (Family.F6, None, None), (Family.F7, None, None),
            *((Family.F_PRIME, None, i) for i in range(2, n - 2)),
        ),
    ),
    Characterization(
        "f3-to-f7-fprime-last", -8, 7, _whole, _whole,
        lambda n: _members(
            *((family, None, None) for family in (
                Family.F3, Family.F4, Family.F5, Family.F6, Family.F7
            )),
            *((Family.F_PRIME, None, i) for i in range(2, n - 2)),
        ),
    ),
    Characterization("d3-1", -8, 6, _one, _whole, lambda n: _members((_D, 3, 1))),
    Characterization("d3-2", -8, 5, _one, _whole, lambda n: _members((_D, 3, 2))),
    Characterization(
        "d3-3-or-b1", -8, 4, _one, _whole,
        lambda n: _members((_D, 3, 3), (Family.B1, None, None)),
    ),
    Characterization(
        "d3-4-or-b2-b4", -8, 3, _one, _whole,
        lambda n: _members(
            (_D, 3, 4), (Family.B2, None, None), (Family.B3, None, None), (Family.B4, None, None)
        ),
    ),
)


def characterization(label: str) -> Characterization:
    """Look up a clause by label.

    Raises:
        KeyError: unknown label
    """
    for clause in CHARACTERIZATIONS:
        if clause.label == label:
            return clause
    raise KeyError(f"unknown characterization {label!r}; known: {[c.label for c in CHARACTERIZATIONS]}")


# =============================================================================
# Bound lemmas
# =============================================================================


def non_d_family_bound(n: int, k: int) -> int:
    """Upper bound on l(k) for n >= 6 when |S| is neither D1 nor D2."""
    return 2 * n * n - 6 * n + k + 4


def two_length_base_range(n: int, p: int, q: int) -> tuple[int, int]:
    """Bounds on l(S) when C(S) = {p, q}, p + q > n and classes are sign-constant."""
    return p * (2 * q - 1), 2 * p * (q - 1) + n


def structure_triggered(n: int, k: int, value: int) -> bool:
    """True iff l(k) >= 3n^2/2 - 3n + k + 4."""
    return 2 * value >= 3 * n * n - 6 * n + 2 * k + 8


def case_bound(n: int, k: int, p1: int, p2: int) -> int:
    """Upper bound on l(k) once the structure conditions hold with C(S) = {p1 < p2}."""
    if p2 == n:
        return (2 * n - 1) * p1 if k <= p1 else (2 * n - 2) * p1 + k
    return n + 2 * p1 * (p2 - 1)
