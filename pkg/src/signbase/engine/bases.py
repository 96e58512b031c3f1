# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""
Local and global bases of primitive nonpowerful signed digraphs.

Entry (u, v) of the t-th sign-semiring power of the adjacency matrix is
``#`` exactly when two length-t walks u -> v of different sign exist. The
local base l(u, v) is one more than the last t at which that entry is not
``#``; the stream stops at the first all-``#`` power, which is absorbing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from signbase.config.defaults import DEFAULT_ORACLE_BUDGET
from signbase.engine.digraph import SignedDigraph, WalkWitness, require_primitive
from signbase.engine.exponents import Table, ordered_statistics, wielandt_bound
from signbase.engine.semiring import Sign, SignMatrix, iter_bits, power_stream
from signbase.errors import EnumerationBudgetError, IterationCapExceededError, PowerfulPatternError


def base_cap(n: int) -> int:
    """Iteration cap for the sign power stream."""
    return 3 * n * n + 2 * n + 5


@dataclass(frozen=True)
class BaseReport:
    """Pairwise, per-vertex, ordered and global local bases."""

    pairwise: Table
    per_vertex: tuple[int, ...]
    ordered: tuple[int, ...]
    base: int
    stabilization_time: int

    @classmethod
    def from_pairwise(cls, pairwise: Table, stabilization_time: int) -> BaseReport:
        per_vertex, ordered = ordered_statistics(pairwise)
        return cls(pairwise, per_vertex, ordered, ordered[-1], stabilization_time)

    def to_dict(self) -> dict[str, object]:
        return {
            "pairwise": [list(row) for row in self.pairwise],
            "per_vertex": list(self.per_vertex),
            "ordered": list(self.ordered),
            "base": self.base,
            "stabilization_time": self.stabilization_time,
        }


def _stream_until_ambiguous(digraph: SignedDigraph) -> tuple[list[list[int]], int]:
    """Return the last non-# time of every entry and the first all-# time.

    Raises PowerfulPatternError once a #-free, zero-free power repeats the
    power two steps earlier past the Wielandt bound: the stream is then
    periodic and never reaches all-#.
    """
    n = digraph.n
    full = (1 << n) - 1
    threshold = wielandt_bound(n)
    last = [[0] * n for _ in range(n)]
    history: deque[SignMatrix] = deque(maxlen=2)

    for t, power in enumerate(power_stream(digraph.adjacency, base_cap(n)), start=1):
        if power.is_all_ambiguous():
            return last, t
        for i, (p, q) in enumerate(zip(power.pos, power.neg)):
            for j in iter_bits(full & ~(p & q)):
                last[i][j] = t
        if (
            t >= threshold
            and len(history) == 2
            and history[0] == power
            and not power.has_ambiguous()
            and power.is_nonzero_everywhere()
        ):
            raise PowerfulPatternError(
                f"sign powers repeat with period 2 from t={t - 2} without ambiguity; "
                "the pattern is powerful"
            )
        history.append(power)

    raise IterationCapExceededError(f"sign powers did not stabilize within {base_cap(n)} steps")


def base_report(digraph: SignedDigraph) -> BaseReport:
    """Local bases of a primitive nonpowerful signed digraph."""
    require_primitive(digraph)
    last, stabilization = _stream_until_ambiguous(digraph)
    pairwise = tuple(tuple(t + 1 for t in row) for row in last)
    return BaseReport.from_pairwise(pairwise, stabilization)


def stabilizes(digraph: SignedDigraph) -> bool:
    """True iff the sign powers of a primitive digraph reach all-#."""
    require_primitive(digraph)
    try:
        _stream_until_ambiguous(digraph)
    except PowerfulPatternError:
        return False
    return True


def closed_sssd_time(digraph: SignedDigraph, u: int) -> int | None:
    """Least r with a pair of closed SSSD walks of length r at u, or None if none arises."""
    require_primitive(digraph)
    index = u - 1
    for t, power in enumerate(power_stream(digraph.adjacency, base_cap(digraph.n)), start=1):
        if power.entry(index, index) == Sign.AMBIGUOUS:
            return t
    return None


def closed_sssd_times(digraph: SignedDigraph) -> tuple[int | None, ...]:
    """closed_sssd_time for every vertex from a single power stream."""
    require_primitive(digraph)
    n = digraph.n
    times: list[int | None] = [None] * n
    pending = (1 << n) - 1
    for t, power in enumerate(power_stream(digraph.adjacency, base_cap(n)), start=1):
        for i in iter_bits(pending):
            bit = 1 << i
            if power.pos[i] & power.neg[i] & bit:
                times[i] = t
                pending ^= bit
        if not pending:
            break
    return tuple(times)


# =============================================================================
# Walk-enumeration oracle
# =============================================================================


def _exact_reach_to(digraph: SignedDigraph, v: int, t: int) -> list[set[int]]:
    """Index r holds the vertices with a walk of exactly r steps to v."""
    layers = [{v}]
    for _ in range(t):
        layers.append({p for x in layers[-1] for p in digraph.predecessors[x]})
    return layers


def _enumerate_walks(
    digraph: SignedDigraph, u: int, v: int, t: int, budget: int
) -> tuple[WalkWitness | None, WalkWitness | None]:
    if t < 1:
        raise ValueError("walk length must be at least 1")
    layers = _exact_reach_to(digraph, v, t)
    positive: WalkWitness | None = None
    negative: WalkWitness | None = None
    if u not in layers[t]:
        return positive, negative

    visited = 0
    # a (vertex, depth, sign) state already expanded cannot yield a new sign
    expanded: set[tuple[int, int, int]] = set()
    stack: list[tuple[tuple[int, ...], int]] = [((u,), 1)]
    while stack:
        path, sign = stack.pop()
        visited += 1
        if visited > budget:
            raise EnumerationBudgetError(budget)
        depth = len(path) - 1
        if depth == t:
            if sign > 0 and positive is None:
                positive = WalkWitness(path, 1)
            elif sign < 0 and negative is None:
                negative = WalkWitness(path, -1)
            if positive is not None and negative is not None:
                break
            continue
        tail = path[-1]
        if (tail, depth, sign) in expanded:
            continue
        expanded.add((tail, depth, sign))
        remaining = t - depth - 1
        for w in digraph.successors[tail]:
            if w in layers[remaining]:
                stack.append((path + (w,), sign * digraph.arc_signs[(tail, w)]))
    return positive, negative


def sssd_oracle(
    digraph: SignedDigraph, u: int, v: int, t: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> Sign:
    """Sign summary of all length-t walks u -> v by explicit enumeration."""
    positive, negative = _enumerate_walks(digraph, u, v, t, budget)
    return Sign((Sign.PLUS if positive else 0) | (Sign.MINUS if negative else 0))


def sssd_witness(
    digraph: SignedDigraph, u: int, v: int, t: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> tuple[WalkWitness, WalkWitness] | None:
    """A positive and a negative length-t walk u -> v, if both exist."""
    positive, negative = _enumerate_walks(digraph, u, v, t, budget)
    if positive is None or negative is None:
        return None
    return positive, negative


def oracle_base_table(
    digraph: SignedDigraph, t_max: int, budget: int = DEFAULT_ORACLE_BUDGET
) -> Table:
    """Pairwise local bases from the oracle, valid when stabilization happens by t_max."""
    rows = []
    for u in digraph.vertices:
        row = []
        for v in digraph.vertices:
            last = 0
            for t in range(1, t_max + 1):
                if sssd_oracle(digraph, u, v, t, budget) != Sign.AMBIGUOUS:
                    last = t
            row.append(last + 1)
        rows.append(tuple(row))
    return tuple(rows)
