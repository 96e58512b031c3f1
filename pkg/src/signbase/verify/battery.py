# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""
Inequality checks run on every analyzed instance.

Each check either produces one outcome or, where its hypotheses fail on
the instance, nothing at all.
"""

from __future__ import annotations

from signbase.engine.analysis import AnalysisResult
from signbase.engine.digraph import SignedDigraph, is_isomorphic_underlying, to_edge_list
from signbase.engine.exponents import bound_holds
from signbase.families.generators import Family, build_underlying
from signbase.verify.formulas import (
    case_bound,
    non_d_family_bound,
    structure_triggered,
    two_length_base_range,
)
from signbase.verify.outcomes import VerificationOutcome, check


def serialize_witness(digraph: SignedDigraph, detail: str = "") -> str:
    """Edge list of the instance, prefixed with a comment line."""
    comments = [detail] if detail else []
    return to_edge_list(digraph, comments)


def _first_increase(ordered: tuple[int, ...]) -> int | None:
    """First index k (1-based) with ordered[k] > ordered[k-1] + 1."""
    for k in range(2, len(ordered) + 1):
        if ordered[k - 1] > ordered[k - 2] + 1:
            return k
    return None


def _exponent_bound_outcome(suite: str, instance: str, result: AnalysisResult) -> VerificationOutcome:
    exponents, bound = result.exponents, result.bound
    passed = bound_holds(exponents, bound)
    detail = ""
    if not passed:
        for u, (e_row, b_row) in enumerate(zip(exponents.pairwise, bound.pairwise), start=1):
            for v, (e, b) in enumerate(zip(e_row, b_row), start=1):
                if e > max(1, b):
                    detail = f"exp({u},{v})={e} > d_C+phi={b}"
                    break
            if detail:
                break
    return check(
        suite,
        instance,
        "exp(u,v) <= d_C(u,v) + phi(C)",
        bound.value,
        exponents.exponent,
        passed=passed,
        witness=serialize_witness(result.digraph, detail),
    )


def _base_closed_walk_outcome(
    suite: str, instance: str, result: AnalysisResult
) -> VerificationOutcome | None:
    if result.bases is None or result.closed_sssd_times is None:
        return None
    violations = []
    for u, (base, exp, r) in enumerate(
        zip(result.bases.per_vertex, result.exponents.per_vertex, result.closed_sssd_times), start=1
    ):
        if r is None or base > exp + r:
            violations.append(f"v{u}: l={base} exp={exp} r={r}")
    return check(
        suite,
        instance,
        "l(u) <= exp(u) + r(u)",
        "no violation",
        violations[0] if violations else "no violation",
        witness=serialize_witness(result.digraph, "; ".join(violations)),
    )


def _unit_step_outcome(
    suite: str, instance: str, claim: str, ordered: tuple[int, ...], digraph: SignedDigraph
) -> VerificationOutcome:
    k = _first_increase(ordered)
    return check(
        suite,
        instance,
        claim,
        None,
        k,
        witness=serialize_witness(digraph, f"jump at k={k}: {ordered}"),
    )


def is_d_family(digraph: SignedDigraph) -> bool:
    """True iff the underlying digraph is isomorphic to D1 or D2."""
    n = digraph.n
    if n < 3:
        return False
    return any(
        is_isomorphic_underlying(digraph, build_underlying(family, n))
        for family in (Family.D1, Family.D2)
    )


def _non_d_family_outcome(
    suite: str, instance: str, result: AnalysisResult
) -> VerificationOutcome | None:
    n = result.digraph.n
    if result.bases is None or n < 6 or is_d_family(result.digraph):
        return None
    over = [
        k for k, value in enumerate(result.bases.ordered, start=1)
        if value > non_d_family_bound(n, k)
    ]
    return check(
        suite,
        instance,
        "l(k) <= 2n^2-6n+k+4 off D1/D2",
        [],
        over,
        witness=serialize_witness(result.digraph, f"ordered bases {result.bases.ordered}"),
    )


def _sign_constant(result: AnalysisResult) -> bool:
    return all(len(signs) == 1 for signs in result.class_signs.values())


def _two_length_outcome(
    suite: str, instance: str, result: AnalysisResult
) -> VerificationOutcome | None:
    n = result.digraph.n
    lengths = result.catalog.lengths
    if result.bases is None or n < 6 or len(lengths) != 2:
        return None
    p, q = lengths
    if p + q <= n or not _sign_constant(result):
        return None
    low, high = two_length_base_range(n, p, q)
    base = result.bases.base
    return check(
        suite,
        instance,
        f"{low} <= l(S) <= {high} for C(S)={{{p},{q}}}",
        [low, high],
        base,
        passed=low <= base <= high,
        witness=serialize_witness(result.digraph),
    )


def _every_pair_distinguished(result: AnalysisResult) -> bool:
    p1, p2 = result.catalog.lengths
    s1 = next(iter(result.class_signs[p1]))
    s2 = next(iter(result.class_signs[p2]))
    if p1 % 2 and p2 % 2:
        return s1 == -s2
    if p1 % 2:
        return s2 < 0
    if p2 % 2:
        return s1 < 0
    return False


def _structure_outcomes(
    suite: str, instance: str, result: AnalysisResult
) -> list[VerificationOutcome]:
    n = result.digraph.n
    if result.bases is None or n < 6:
        return []
    triggered = [
        k for k, value in enumerate(result.bases.ordered, start=1)
        if structure_triggered(n, k, value)
    ]
    if not triggered:
        return []

    witness = serialize_witness(result.digraph, f"ordered bases {result.bases.ordered}")
    lengths = result.catalog.lengths
    shape_ok = (
        len(lengths) == 2
        and sum(lengths) > n
        and _sign_constant(result)
        and _every_pair_distinguished(result)
    )
    outcomes = [
        check(
            suite,
            instance,
            "large l(k) forces two sign-constant distinguished classes",
            True,
            shape_ok,
            witness=witness,
        )
    ]
    if len(lengths) == 2:
        p1, p2 = lengths
        over = [k for k in triggered if result.bases.ordered[k - 1] > case_bound(n, k, p1, p2)]
        outcomes.append(
            check(suite, instance, "structure case bounds", [], over, witness=witness)
        )
    return outcomes


def lemma_battery(
    suite: str, instance: str, result: AnalysisResult, family_instance: bool = False
) -> list[VerificationOutcome]:
    """Every applicable inequality for one analyzed instance.

    ``family_instance`` adds the exponent unit-step check, which is only
    claimed for the named families.
    """
    outcomes = [_exponent_bound_outcome(suite, instance, result)]
    if family_instance:
        outcomes.append(
            _unit_step_outcome(
                suite, instance, "exp(k) <= exp(k-1) + 1", result.exponents.ordered, result.digraph
            )
        )
    if result.bases is not None:
        outcomes.append(
            _unit_step_outcome(
                suite, instance, "l(k) <= l(k-1) + 1", result.bases.ordered, result.digraph
            )
        )
    for extra in (
        _base_closed_walk_outcome(suite, instance, result),
        _non_d_family_outcome(suite, instance, result),
        _two_length_outcome(suite, instance, result),
    ):
        if extra is not None:
            outcomes.append(extra)
    outcomes.extend(_structure_outcomes(suite, instance, result))
    return outcomes
