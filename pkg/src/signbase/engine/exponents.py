# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""
Local and global primitive exponents, reach sets, C(S)-walk distances,
Frobenius numbers and the C(S)-walk exponent upper bound.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import reduce

from signbase.engine.digraph import CycleCatalog, SignedDigraph, require_primitive
from signbase.engine.semiring import boolean_mul, iter_bits
from signbase.errors import IterationCapExceededError, NotPrimitiveError

Table = tuple[tuple[int, ...], ...]


def ordered_statistics(pairwise: Table) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Row maxima and their ascending order (the k-th smallest per-vertex value)."""
    per_vertex = tuple(max(row) for row in pairwise)
    return per_vertex, tuple(sorted(per_vertex))


@dataclass(frozen=True)
class ExponentReport:
    """Pairwise, per-vertex, ordered and global primitive exponents."""

    pairwise: Table
    per_vertex: tuple[int, ...]
    ordered: tuple[int, ...]
    exponent: int

    @classmethod
    def from_pairwise(cls, pairwise: Table) -> ExponentReport:
        per_vertex, ordered = ordered_statistics(pairwise)
        return cls(pairwise, per_vertex, ordered, ordered[-1])

    def to_dict(self) -> dict[str, object]:
        return {
            "pairwise": [list(row) for row in self.pairwise],
            "per_vertex": list(self.per_vertex),
            "ordered": list(self.ordered),
            "exponent": self.exponent,
        }


@dataclass(frozen=True)
class CWalkReport:
    """Shortest walks meeting a cycle of every length in C(S)."""

    pairwise: Table
    eccentricity: tuple[int, ...]
    ordered: tuple[int, ...]
    value: int

    @classmethod
    def from_pairwise(cls, pairwise: Table) -> CWalkReport:
        eccentricity, ordered = ordered_statistics(pairwise)
        return cls(pairwise, eccentricity, ordered, ordered[-1])

    def to_dict(self) -> dict[str, object]:
        return {
            "pairwise": [list(row) for row in self.pairwise],
            "eccentricity": list(self.eccentricity),
            "ordered": list(self.ordered),
            "value": self.value,
        }


@dataclass(frozen=True)
class ExponentBound:
    """Entrywise upper bound d_C(u, v) + frobenius(C(S))."""

    pairwise: Table
    frobenius: int
    value: int

    def to_dict(self) -> dict[str, object]:
        return {
            "pairwise": [list(row) for row in self.pairwise],
            "frobenius": self.frobenius,
            "value": self.value,
        }


def reach_set(digraph: SignedDigraph, v: int, k: int) -> frozenset[int]:
    """Endpoints of the length-k walks starting at v."""
    if k < 0:
        raise ValueError("walk length must be nonnegative")
    current = {v}
    for _ in range(k):
        current = {w for u in current for w in digraph.successors[u]}
        if not current:
            break
    return frozenset(current)


def wielandt_bound(n: int) -> int:
    return (n - 1) ** 2 + 1


def exponent_report(digraph: SignedDigraph) -> ExponentReport:
    """Stream boolean powers until all-ones, recording the last zero of every entry."""
    require_primitive(digraph)
    n = digraph.n
    full = (1 << n) - 1
    cap = wielandt_bound(n) + 1
    rows = digraph.boolean_rows
    last_zero = [[0] * n for _ in range(n)]

    power = rows
    for t in range(1, cap + 1):
        if t > 1:
            power = boolean_mul(power, rows)
        if all(row == full for row in power):
            break
        for i, row in enumerate(power):
            for j in iter_bits(full & ~row):
                last_zero[i][j] = t
    else:
        raise IterationCapExceededError(f"boolean powers of an order-{n} digraph did not fill by {cap}")

    return ExponentReport.from_pairwise(tuple(tuple(z + 1 for z in row) for row in last_zero))


def frobenius(values: Iterable[int]) -> int:
    """Least m such that every integer >= m is a nonnegative combination of ``values``.

    Shortest representable number per residue class modulo the smallest
    value (Dijkstra over residues); the largest non-representable integer
    is the largest of these minus the modulus.
    """
    s = sorted(set(values))
    if not s or s[0] < 1:
        raise ValueError("frobenius needs a nonempty set of positive integers")
    if reduce(math.gcd, s) != 1:
        raise ValueError(f"gcd of {s} is not 1")
    modulus = s[0]
    if modulus == 1:
        return 0

    best = [math.inf] * modulus
    best[0] = 0
    heap = [(0, 0)]
    while heap:
        value, residue = heapq.heappop(heap)
        if value > best[residue]:
            continue
        for step in s[1:]:
            candidate = value + step
            target = candidate % modulus
            if candidate < best[target]:
                best[target] = candidate
                heapq.heappush(heap, (candidate, target))

    largest_gap = int(max(best)) - modulus
    return max(largest_gap + 1, 0)


def c_walk_report(digraph: SignedDigraph, catalog: CycleCatalog) -> CWalkReport:
    """BFS over (vertex, lengths met so far) for every start vertex."""
    require_primitive(digraph)
    if not catalog.cycles:
        raise NotPrimitiveError("cycle catalog is empty")
    n = digraph.n
    bit_of = {length: 1 << index for index, length in enumerate(catalog.lengths)}
    target = (1 << len(bit_of)) - 1
    membership = [0] * (n + 1)
    for v in digraph.vertices:
        for length in catalog.on_cycle_lengths[v]:
            membership[v] |= bit_of[length]

    table = []
    for u in digraph.vertices:
        found = [-1] * (n + 1)
        remaining = n
        start = (u, membership[u])
        seen = {start}
        queue = deque([(start, 0)])
        while queue and remaining:
            (v, met), dist = queue.popleft()
            if met == target and found[v] < 0:
                found[v] = dist
                remaining -= 1
            for w in digraph.successors[v]:
                state = (w, met | membership[w])
                if state not in seen:
                    seen.add(state)
                    queue.append((state, dist + 1))
        table.append(tuple(found[1:]))
    return CWalkReport.from_pairwise(tuple(table))


def exponent_upper_bound(
    digraph: SignedDigraph, catalog: CycleCatalog, c_walks: CWalkReport | None = None
) -> ExponentBound:
    """d_C(u, v) + frobenius(C(S)) for every pair."""
    if c_walks is None:
        c_walks = c_walk_report(digraph, catalog)
    phi = frobenius(catalog.lengths)
    pairwise = tuple(tuple(d + phi for d in row) for row in c_walks.pairwise)
    return ExponentBound(pairwise, phi, c_walks.value + phi)


def exponent_oracle(digraph: SignedDigraph, u: int, v: int) -> int:
    """exp(u, v) recomputed from reach sets; slow reference implementation."""
    cap = wielandt_bound(digraph.n) + digraph.n
    last_missing = 0
    current = {u}
    for t in range(1, cap + 1):
        current = {w for x in current for w in digraph.successors[x]}
        if v not in current:
            last_missing = t
    return last_missing + 1


def bound_holds(exponents: ExponentReport, bound: ExponentBound) -> bool:
    """Entrywise exp(u, v) <= max(1, bound(u, v))."""
    return all(
        e <= max(1, b)
        for e_row, b_row in zip(exponents.pairwise, bound.pairwise)
        for e, b in zip(e_row, b_row)
    )
