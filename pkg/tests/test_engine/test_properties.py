"""Property tests: engine results against brute-force definitions."""

from hypothesis import given, settings
from hypothesis import strategies as st

from signbase.engine.bases import base_report, sssd_oracle, stabilizes
from signbase.engine.digraph import (
    SignedDigraph,
    cycle_catalog,
    find_distinguished_pair,
    is_primitive,
    is_strongly_connected,
    parse,
    signature_certificate,
    to_edge_list,
)
from signbase.engine.exponents import exponent_oracle, exponent_report
from signbase.engine.semiring import SignMatrix, mat_mul, power_stream


@st.composite
def sign_matrices(draw, order: int) -> SignMatrix:
    rows = draw(
        st.lists(
            st.lists(st.sampled_from("0+-#"), min_size=order, max_size=order),
            min_size=order,
            max_size=order,
        )
    )
    return SignMatrix.from_entries(rows)


@st.composite
def signed_digraphs(draw, max_order: int = 4) -> SignedDigraph:
    n = draw(st.integers(min_value=1, max_value=max_order))
    entries = draw(st.lists(st.sampled_from((0, 1, -1)), min_size=n * n, max_size=n * n))
    arcs = [(index // n + 1, index % n + 1, sign) for index, sign in enumerate(entries) if sign]
    return SignedDigraph.from_arcs(n, arcs)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda order: st.tuples(sign_matrices(order), sign_matrices(order), sign_matrices(order))
))
def test_matrix_product_is_associative(triple):
    a, b, c = triple
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@settings(max_examples=50, deadline=None)
@given(signed_digraphs())
def test_edge_list_round_trip(digraph):
    assert parse(to_edge_list(digraph, ["property"])) == digraph


@settings(max_examples=40, deadline=None)
@given(signed_digraphs(max_order=3))
def test_power_entries_match_walk_enumeration(digraph):
    for t, power in enumerate(power_stream(digraph.adjacency, 5), start=1):
        for u in digraph.vertices:
            for v in digraph.vertices:
                assert power.entry(u - 1, v - 1) == sssd_oracle(digraph, u, v, t)


@settings(max_examples=40, deadline=None)
@given(signed_digraphs())
def test_nonpowerful_tests_agree(digraph):
    if not digraph.arcs or not is_strongly_connected(digraph):
        return
    catalog = cycle_catalog(digraph)
    if not is_primitive(digraph, catalog):
        return
    nonpowerful = find_distinguished_pair(catalog) is not None
    assert stabilizes(digraph) == nonpowerful
    assert (signature_certificate(digraph) is None) == nonpowerful


@settings(max_examples=40, deadline=None)
@given(signed_digraphs())
def test_exponents_match_reach_sets(digraph):
    if not digraph.arcs or not is_primitive(digraph):
        return
    report = exponent_report(digraph)
    for u in digraph.vertices:
        for v in digraph.vertices:
            assert report.pairwise[u - 1][v - 1] == exponent_oracle(digraph, u, v)


@settings(max_examples=40, deadline=None)
@given(signed_digraphs())
def test_base_sequence_shape(digraph):
    """Ordered bases are nondecreasing and end at the stabilization time."""
    if not digraph.arcs or not is_primitive(digraph):
        return
    if find_distinguished_pair(cycle_catalog(digraph)) is None:
        return
    report = base_report(digraph)
    assert list(report.ordered) == sorted(report.per_vertex)
    assert report.base == report.stabilization_time
    assert report.base >= exponent_report(digraph).exponent
