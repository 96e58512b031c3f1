"""Test fixtures for engine tests."""


import pytest

from signbase.engine.digraph import SignedDigraph
from signbase.families.generators import Family, Preset, build_underlying, preset


@pytest.fixture
def wielandt_5() -> SignedDigraph:
    """Hamilton 5-cycle plus a chord closing a 4-cycle, all positive."""
    return build_underlying(Family.D1, 5)


@pytest.fixture
def d1_signed_3() -> SignedDigraph:
    """D1 at n=3 with its 2-cycle made negative."""
    return preset(Preset.D1_SIGNED, 3)


@pytest.fixture
def three_cycle() -> SignedDigraph:
    """A directed 3-cycle; period 3."""
    return SignedDigraph.from_arcs(3, [(1, 2), (2, 3), (3, 1)])


@pytest.fixture
def disconnected() -> SignedDigraph:
    return SignedDigraph.from_arcs(3, [(1, 1), (1, 2), (2, 1)])
