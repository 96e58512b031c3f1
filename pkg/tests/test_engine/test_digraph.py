"""Tests for the signed digraph model, edge-list I/O and cycle structure."""

import pytest

from signbase.engine.digraph import (
    UNREACHABLE,
    SignedDigraph,
    cycle_catalog,
    cycle_class_signs,
    distance,
    find_distinguished_pair,
    is_isomorphic_underlying,
    is_nonpowerful,
    is_primitive,
    is_strongly_connected,
    parse,
    period,
    read_edge_list,
    require_primitive,
    signature_certificate,
    to_edge_list,
)
from signbase.errors import CycleCapExceededError, EdgeListParseError, NotPrimitiveError


class TestSignedDigraph:
    """Tests for SignedDigraph construction."""

    def test_arcs_are_sorted(self):
        digraph = SignedDigraph.from_arcs(2, [(2, 1, -1), (1, 2), (1, 1)])
        assert [(a.tail, a.head) for a in digraph.arcs] == [(1, 1), (1, 2), (2, 1)]

    def test_endpoint_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            SignedDigraph.from_arcs(2, [(1, 3)])

    def test_bad_sign(self):
        with pytest.raises(ValueError, match="sign"):
            SignedDigraph.from_arcs(2, [(1, 2, 0)])

    def test_duplicate_arc(self):
        with pytest.raises(ValueError, match="duplicate"):
            SignedDigraph.from_arcs(2, [(1, 2), (1, 2, -1)])

    def test_empty_order_rejected(self):
        with pytest.raises(ValueError):
            SignedDigraph(0, ())

    def test_successors_and_signs(self, two_vertex_digraph):
        assert two_vertex_digraph.successors[1] == (1, 2)
        assert two_vertex_digraph.predecessors[1] == (1, 2)
        assert two_vertex_digraph.sign_of(2, 1) == -1
        assert two_vertex_digraph.sign_of(2, 2) == 0
        assert two_vertex_digraph.negative_arcs == ((2, 1),)

    def test_adjacency_matrix(self, two_vertex_digraph):
        assert two_vertex_digraph.adjacency.to_symbols() == [["+", "+"], ["-", "0"]]

    def test_with_negative_arcs(self, two_vertex_digraph):
        flipped = two_vertex_digraph.with_negative_arcs([(1, 1)])
        assert flipped.negative_arcs == ((1, 1),)
        assert flipped.underlying() == two_vertex_digraph.underlying()

    def test_with_signs_rejects_missing_arcs(self, two_vertex_digraph):
        with pytest.raises(ValueError):
            two_vertex_digraph.with_signs({(2, 2): -1})

    def test_walk_sign(self, two_vertex_digraph):
        assert two_vertex_digraph.walk_sign([1, 2, 1, 1]) == -1
        with pytest.raises(KeyError):
            two_vertex_digraph.walk_sign([2, 2])


class TestEdgeList:
    """Tests for the edge-list format."""

    def test_parse(self, two_vertex_text):
        digraph = parse(two_vertex_text)
        assert digraph.n == 2
        assert len(digraph.arcs) == 3

    def test_comments_and_blank_lines(self):
        digraph = parse("# header\n\n2\n# arc list\n1 2 +\n\n2 1 -\n")
        assert digraph.negative_arcs == ((2, 1),)

    def test_round_trip(self, two_vertex_digraph):
        text = to_edge_list(two_vertex_digraph, ["example"])
        assert text.startswith("# example\n2\n")
        assert parse(text) == two_vertex_digraph

    def test_read_file(self, two_vertex_file, two_vertex_digraph):
        assert read_edge_list(two_vertex_file) == two_vertex_digraph

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("", "missing vertex count"),
            ("two\n", "expected vertex count"),
            ("0\n", "at least 1"),
            ("2\n1 2\n", "expected 'u v s'"),
            ("2\n1 x +\n", "integers"),
            ("2\n1 2 *\n", "sign must be"),
            ("2\n1 3 +\n", "out of range"),
            ("2\n1 2 +\n1 2 -\n", "duplicate arc"),
        ],
    )
    def test_parse_errors(self, text, fragment):
        with pytest.raises(EdgeListParseError, match=fragment):
            parse(text)

    def test_parse_error_reports_line(self):
        with pytest.raises(EdgeListParseError) as excinfo:
            parse("2\n1 2 +\n2 1 ?\n")
        assert excinfo.value.line_number == 3
        assert str(excinfo.value).startswith("line 3:")


class TestConnectivity:
    """Tests for strong connectivity, distances and period."""

    def test_strongly_connected(self, two_vertex_digraph, disconnected):
        assert is_strongly_connected(two_vertex_digraph)
        assert not is_strongly_connected(disconnected)
        assert not is_strongly_connected(
            SignedDigraph.from_arcs(3, [(1, 2), (2, 1), (2, 3)])
        )

    def test_distance(self, three_cycle):
        assert distance(three_cycle, 1, 3) == 2
        assert distance(three_cycle, 2, 2) == 0
        path = SignedDigraph.from_arcs(2, [(1, 2)])
        assert distance(path, 2, 1) == UNREACHABLE

    def test_period(self, three_cycle, two_vertex_digraph):
        assert period(three_cycle) == 3
        assert period(two_vertex_digraph) == 1

    def test_period_requires_strong_connectivity(self):
        with pytest.raises(NotPrimitiveError):
            period(SignedDigraph.from_arcs(2, [(1, 2)]))


class TestCycles:
    """Tests for the cycle catalog and nonpowerfulness."""

    def test_catalog(self, two_vertex_digraph):
        catalog = cycle_catalog(two_vertex_digraph)
        assert catalog.lengths == (1, 2)
        assert [(c.vertices, c.sign) for c in catalog.cycles] == [((1,), 1), ((1, 2), -1)]
        assert catalog.on_cycle_lengths[1] == frozenset({1, 2})
        assert catalog.on_cycle_lengths[2] == frozenset({2})
        assert catalog.gcd() == 1

    def test_cycle_rotation_starts_at_smallest_vertex(self, three_cycle):
        (cycle,) = cycle_catalog(three_cycle).cycles
        assert cycle.vertices == (1, 2, 3)
        assert cycle.arcs == ((1, 2), (2, 3), (3, 1))

    def test_cycle_cap(self, wielandt_5):
        with pytest.raises(CycleCapExceededError):
            cycle_catalog(wielandt_5, max_cycles=1)

    def test_class_signs(self, two_vertex_digraph):
        assert cycle_class_signs(cycle_catalog(two_vertex_digraph)) == {
            1: frozenset({1}),
            2: frozenset({-1}),
        }

    def test_distinguished_pair(self, two_vertex_digraph):
        pair = find_distinguished_pair(cycle_catalog(two_vertex_digraph))
        assert pair is not None
        assert [c.length for c in pair] == [1, 2]

    def test_opposite_odd_cycles(self):
        # loops of opposite sign joined by a 2-cycle
        digraph = SignedDigraph.from_arcs(2, [(1, 1, 1), (2, 2, -1), (1, 2), (2, 1)])
        pair = find_distinguished_pair(cycle_catalog(digraph))
        assert pair is not None
        assert {c.sign for c in pair} == {1, -1}

    def test_no_pair_when_all_positive(self, wielandt_5):
        assert find_distinguished_pair(cycle_catalog(wielandt_5)) is None
        assert not is_nonpowerful(wielandt_5)

    def test_is_primitive(self, two_vertex_digraph, three_cycle, disconnected):
        assert is_primitive(two_vertex_digraph)
        assert is_primitive(two_vertex_digraph, cycle_catalog(two_vertex_digraph))
        assert not is_primitive(three_cycle)
        assert not is_primitive(disconnected.with_negative_arcs([]))

    def test_require_primitive_reasons(self, three_cycle):
        with pytest.raises(NotPrimitiveError) as excinfo:
            require_primitive(three_cycle)
        assert excinfo.value.period == 3
        with pytest.raises(NotPrimitiveError, match="no arcs"):
            require_primitive(SignedDigraph(2, ()))
        with pytest.raises(NotPrimitiveError, match="strongly connected"):
            require_primitive(SignedDigraph.from_arcs(2, [(1, 1), (1, 2)]))

    def test_signature_certificate(self, two_vertex_digraph, wielandt_5):
        assert signature_certificate(two_vertex_digraph) is None
        eps, labels = signature_certificate(wielandt_5)
        for arc in wielandt_5.arcs:
            assert arc.sign == eps * labels[arc.tail] * labels[arc.head]

    def test_isomorphism_ignores_signs_and_labels(self, two_vertex_digraph):
        relabelled = SignedDigraph.from_arcs(2, [(2, 2), (2, 1, -1), (1, 2, -1)])
        assert is_isomorphic_underlying(two_vertex_digraph, relabelled)
        assert not is_isomorphic_underlying(
            two_vertex_digraph, SignedDigraph.from_arcs(2, [(1, 2), (2, 1)])
        )
