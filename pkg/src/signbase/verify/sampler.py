# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""Seeded rejection sampler for primitive nonpowerful signed digraphs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from signbase.config.defaults import (
    DEFAULT_ARC_DENSITY,
    DEFAULT_ATTEMPT_FACTOR,
    DEFAULT_FLIP_PROBABILITY,
    DEFAULT_MAX_CYCLES,
)
from signbase.config.models import EngineConfig
from signbase.engine.digraph import SignedDigraph, cycle_catalog, period, signature_certificate
from signbase.errors import CycleCapExceededError


@dataclass(frozen=True)
class SampledDigraph:
    """An accepted draw and the name that reproduces it."""

    descriptor: str
    draw: int
    digraph: SignedDigraph


@dataclass
class SampleBatch:
    """Accepted draws plus rejection counts."""

    samples: list[SampledDigraph]
    attempts: int
    rejected_not_primitive: int = 0
    rejected_powerful: int = 0
    rejected_cycle_cap: int = 0

    @property
    def rejected(self) -> int:
        return self.rejected_not_primitive + self.rejected_powerful + self.rejected_cycle_cap


class RandomSignedDigraphSampler:
    """
    Hamilton-cycle backbone over a random vertex order, Bernoulli extra
    arcs (loops included) and Bernoulli sign flips.

    Draws that are not primitive, are powerful, or exceed the cycle cap
    are rejected. Identical seeds give identical batches.
    """

    def __init__(
        self,
        n: int,
        seed: int,
        arc_density: float = DEFAULT_ARC_DENSITY,
        flip_probability: float = DEFAULT_FLIP_PROBABILITY,
        attempt_factor: int = DEFAULT_ATTEMPT_FACTOR,
        max_cycles: int = DEFAULT_MAX_CYCLES,
    ):
        if n < 2:
            raise ValueError("sampling needs n >= 2")
        self.n = n
        self.seed = seed
        self.arc_probability = min(1.0, arc_density / n)
        self.flip_probability = flip_probability
        self.attempt_factor = attempt_factor
        self.max_cycles = max_cycles
        self._rng = np.random.default_rng(seed)
        self._draws = 0

    @classmethod
    def from_config(cls, n: int, seed: int, config: EngineConfig) -> RandomSignedDigraphSampler:
        return cls(
            n,
            seed,
            arc_density=config.sample_arc_density,
            flip_probability=config.sample_flip_probability,
            attempt_factor=config.sample_attempt_factor,
            max_cycles=config.max_cycles,
        )

    def descriptor(self, draw: int) -> str:
        return f"random(n={self.n},seed={self.seed},draw={draw})"

    def draw(self) -> SignedDigraph:
        """One unfiltered draw."""
        n = self.n
        order = self._rng.permutation(n) + 1
        arcs = {(int(order[j]), int(order[(j + 1) % n])) for j in range(n)}
        extra = self._rng.random((n, n)) < self.arc_probability
        for u, v in zip(*np.nonzero(extra)):
            arcs.add((int(u) + 1, int(v) + 1))

        ordered = sorted(arcs)
        flips = self._rng.random(len(ordered)) < self.flip_probability
        self._draws += 1
        return SignedDigraph.from_arcs(
            n, [(u, v, -1 if flip else 1) for (u, v), flip in zip(ordered, flips)]
        )

    def sample(self, count: int) -> SampleBatch:
        """Up to ``count`` accepted draws within ``count * attempt_factor`` attempts."""
        batch = SampleBatch(samples=[], attempts=0)
        limit = max(1, count * self.attempt_factor)
        while len(batch.samples) < count and batch.attempts < limit:
            batch.attempts += 1
            digraph = self.draw()
            index = self._draws - 1
            if period(digraph) != 1:
                batch.rejected_not_primitive += 1
                continue
            if signature_certificate(digraph) is not None:
                batch.rejected_powerful += 1
                continue
            try:
                cycle_catalog(digraph, self.max_cycles)
            except CycleCapExceededError:
                batch.rejected_cycle_cap += 1
                continue
            batch.samples.append(SampledDigraph(self.descriptor(index), index, digraph))
        return batch
