"""Pytest configuration and fixtures."""


import pytest
from click.testing import CliRunner

from signbase.config.models import EngineConfig, VerifyProfile
from signbase.engine.digraph import SignedDigraph, parse

# Loop at v1, arc v1->v2, negative arc v2->v1
TWO_VERTEX_TEXT = "2\n1 1 +\n1 2 +\n2 1 -\n"


@pytest.fixture
def cli_runner():
    """Click CLI test runner."""
    return CliRunner()


@pytest.fixture
def two_vertex_text():
    """Edge list of the smallest primitive nonpowerful example."""
    return TWO_VERTEX_TEXT


@pytest.fixture
def two_vertex_digraph() -> SignedDigraph:
    return parse(TWO_VERTEX_TEXT)


@pytest.fixture
def two_vertex_file(tmp_path, two_vertex_text):
    """The two-vertex example written to disk."""
    path = tmp_path / "two_vertex.txt"
    path.write_text(two_vertex_text)
    return path


@pytest.fixture
def two_cycle_file(tmp_path):
    """A bipartite 2-cycle; strongly connected but not primitive."""
    path = tmp_path / "two_cycle.txt"
    path.write_text("2\n1 2 +\n2 1 +\n")
    return path


@pytest.fixture
def all_positive_file(tmp_path):
    """Primitive but powerful: every arc positive."""
    path = tmp_path / "all_positive.txt"
    path.write_text("2\n1 1 +\n1 2 +\n2 1 +\n")
    return path


@pytest.fixture
def engine_config() -> EngineConfig:
    return EngineConfig()


@pytest.fixture
def tiny_profile() -> VerifyProfile:
    """Exhaustive scan of n <= 2 only; runs in well under a second."""
    return VerifyProfile(
        name="tiny-only",
        suites=["tiny"],
        tiny_n_max=2,
        tiny_t_max=8,
        tiny_samples={},
    )


@pytest.fixture
def sample_profile_yaml():
    """Profile YAML with the exhaustive scan only."""
    return """
name: "Test profile"
description: "Exhaustive scan at n <= 2"
suites: [tiny]
n_min: 6
n_max: 6
tiny_n_max: 2
tiny_t_max: 8
"""


@pytest.fixture
def sample_profile_file(tmp_path, sample_profile_yaml):
    path = tmp_path / "test_profile.yaml"
    path.write_text(sample_profile_yaml)
    return path
