"""Tests for GF(2) sign solving and canonical signings."""

import numpy as np
import pytest

from signbase.engine.digraph import SignedDigraph, cycle_catalog, cycle_class_signs
from signbase.errors import InfeasibleSignsError
from signbase.families.generators import Family, build_underlying
from signbase.families.signing import (
    canonical_signing,
    gf2_solve,
    has_distinguished_pair,
    solve_signs,
)


@pytest.fixture
def complete_3() -> SignedDigraph:
    """Every arc between three vertices, no loops: three 2-cycles and two 3-cycles."""
    return SignedDigraph.from_arcs(3, [(u, v) for u in range(1, 4) for v in range(1, 4) if u != v])


class TestGF2Solve:
    """Tests for gf2_solve."""

    def test_unique_solution(self):
        x = gf2_solve(np.array([[1, 1], [0, 1]]), np.array([1, 1]))
        assert x.tolist() == [0, 1]

    def test_free_variables_are_zero(self):
        x = gf2_solve(np.array([[1, 1]]), np.array([1]))
        assert x.tolist() == [1, 0]

    def test_inconsistent(self):
        assert gf2_solve(np.array([[1, 1], [1, 1]]), np.array([0, 1])) is None

    def test_solution_satisfies_system(self):
        rng = np.random.default_rng(3)
        matrix = rng.integers(0, 2, size=(6, 9))
        truth = rng.integers(0, 2, size=9)
        rhs = matrix @ truth % 2
        x = gf2_solve(matrix, rhs)
        assert x is not None
        assert np.array_equal(matrix @ x % 2, rhs)


class TestSolveSigns:
    """Tests for solve_signs."""

    def test_demanded_signs_hold(self):
        digraph = build_underlying(Family.D2, 6)
        catalog = cycle_catalog(digraph)
        signed = digraph.with_signs(solve_signs(digraph, catalog, {5: -1, 6: 1}))
        classes = cycle_class_signs(cycle_catalog(signed))
        assert classes == {5: frozenset({-1}), 6: frozenset({1})}

    def test_no_constraints_is_all_positive(self):
        digraph = build_underlying(Family.D1, 4)
        signs = solve_signs(digraph, cycle_catalog(digraph), {})
        assert set(signs.values()) == {1}

    def test_unknown_length(self):
        digraph = build_underlying(Family.D1, 4)
        with pytest.raises(ValueError, match="no cycles of length"):
            solve_signs(digraph, cycle_catalog(digraph), {2: -1})

    def test_infeasible(self, complete_3):
        # the three 2-cycles and the two 3-cycles cover the same arcs
        with pytest.raises(InfeasibleSignsError):
            solve_signs(complete_3, cycle_catalog(complete_3), {2: -1, 3: 1})


class TestCanonicalSigning:
    """Tests for the distinguished-pair test and canonical signings."""

    @pytest.mark.parametrize(
        "cycles, expected",
        [
            ([(3, 1), (4, -1)], True),
            ([(3, 1), (5, -1)], True),
            ([(3, 1), (4, 1)], False),
            ([(3, -1), (5, -1)], False),
            ([(2, -1), (4, -1)], False),
        ],
    )
    def test_has_distinguished_pair(self, cycles, expected):
        assert has_distinguished_pair(cycles) is expected

    def test_fewest_negative_arcs(self):
        digraph = build_underlying(Family.D1, 5)
        signed = canonical_signing(digraph, cycle_catalog(digraph))
        assert len(signed.negative_arcs) == 1

    def test_infeasible_split(self, complete_3):
        # no loops, so there is no 1-cycle class to split
        catalog = cycle_catalog(complete_3)
        with pytest.raises(InfeasibleSignsError, match="split"):
            canonical_signing(complete_3, catalog, constrained=(3,), split=1)
