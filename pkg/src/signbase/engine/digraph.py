# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""
Signed digraph model, edge-list I/O, connectivity and cycle structure.

Vertices are labelled 1..n. Graph algorithms (strong connectivity, simple
cycle enumeration, isomorphism) are delegated to networkx; everything that
depends on arc signs is computed here.
"""

from __future__ import annotations

import math
import re
from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property, reduce
from itertools import islice
from pathlib import Path

import networkx as nx

from signbase.config.defaults import DEFAULT_MAX_CYCLES
from signbase.engine.semiring import SignMatrix
from signbase.errors import CycleCapExceededError, EdgeListParseError, NotPrimitiveError

UNREACHABLE = math.inf

_INTEGER = re.compile(r"^[0-9]+$")


@dataclass(frozen=True, order=True)
class Arc:
    """Directed arc ``tail -> head`` with sign +1 or -1."""

    tail: int
    head: int
    sign: int = 1

    @property
    def symbol(self) -> str:
        return "+" if self.sign > 0 else "-"


@dataclass(frozen=True)
class WalkWitness:
    """A concrete walk: its vertex sequence and the product of its arc signs."""

    vertices: tuple[int, ...]
    sign: int

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class SignedDigraph:
    """Digraph on vertices 1..n with at most one signed arc per ordered pair."""

    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a digraph needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        for arc in self.arcs:
            if not (1 <= arc.tail <= self.n and 1 <= arc.head <= self.n):
                raise ValueError(f"arc {arc.tail}->{arc.head} has an endpoint outside 1..{self.n}")
            if arc.sign not in (1, -1):
                raise ValueError(f"arc {arc.tail}->{arc.head} has sign {arc.sign}, expected +1 or -1")
            if (arc.tail, arc.head) in seen:
                raise ValueError(f"duplicate arc {arc.tail}->{arc.head}")
            seen.add((arc.tail, arc.head))
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs)))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int] | tuple[int, int, int]]) -> SignedDigraph:
        """Build from ``(u, v)`` or ``(u, v, sign)`` tuples; missing signs are +1."""
        built = []
        for item in arcs:
            if len(item) == 2:
                built.append(Arc(item[0], item[1], 1))
            else:
                built.append(Arc(item[0], item[1], item[2]))  # type: ignore[misc]
        return cls(n, tuple(built))

    @cached_property
    def arc_signs(self) -> dict[tuple[int, int], int]:
        return {(arc.tail, arc.head): arc.sign for arc in self.arcs}

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        """Index ``v`` holds the out-neighbours of vertex ``v`` (index 0 unused)."""
        out: list[list[int]] = [[] for _ in range(self.n + 1)]
        for arc in self.arcs:
            out[arc.tail].append(arc.head)
        return tuple(tuple(heads) for heads in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n + 1)]
        for arc in self.arcs:
            inc[arc.head].append(arc.tail)
        return tuple(tuple(tails) for tails in inc)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def negative_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((arc.tail, arc.head) for arc in self.arcs if arc.sign < 0)

    def sign_of(self, u: int, v: int) -> int:
        """Sign of arc u->v, or 0 when absent."""
        return self.arc_signs.get((u, v), 0)

    @cached_property
    def adjacency(self) -> SignMatrix:
        """Sign adjacency matrix with 0-based indices."""
        pos = [0] * self.n
        neg = [0] * self.n
        for arc in self.arcs:
            if arc.sign > 0:
                pos[arc.tail - 1] |= 1 << (arc.head - 1)
            else:
                neg[arc.tail - 1] |= 1 << (arc.head - 1)
        return SignMatrix(self.n, tuple(pos), tuple(neg))

    @cached_property
    def boolean_rows(self) -> tuple[int, ...]:
        return self.adjacency.support_rows()

    def underlying(self) -> SignedDigraph:
        """The same arcs, all signed +1."""
        return SignedDigraph(self.n, tuple(Arc(a.tail, a.head, 1) for a in self.arcs))

    def with_signs(self, signs: Mapping[tuple[int, int], int]) -> SignedDigraph:
        """Copy with arc signs replaced by ``signs``; unlisted arcs keep their sign."""
        unknown = set(signs) - set(self.arc_signs)
        if unknown:
            raise ValueError(f"cannot sign missing arcs: {sorted(unknown)}")
        return SignedDigraph(
            self.n,
            tuple(Arc(a.tail, a.head, signs.get((a.tail, a.head), a.sign)) for a in self.arcs),
        )

    def with_negative_arcs(self, negative: Iterable[tuple[int, int]]) -> SignedDigraph:
        """Copy of the underlying digraph with exactly ``negative`` signed -1."""
        negative = set(negative)
        return self.with_signs({key: (-1 if key in negative else 1) for key in self.arc_signs})

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from((a.tail, a.head, {"sign": a.sign}) for a in self.arcs)
        return graph

    def walk_sign(self, vertices: Iterable[int]) -> int:
        """Product of arc signs along a walk; raises KeyError on a missing arc."""
        seq = list(vertices)
        sign = 1
        for u, v in zip(seq, seq[1:]):
            sign *= self.arc_signs[(u, v)]
        return sign


# =============================================================================
# Edge-list format
# =============================================================================


def parse(text: str) -> SignedDigraph:
    """Parse an edge-list document.

    The first nonblank line holds ``n``; every further nonblank line is
    ``u v s`` with 1-based vertices and ``s`` in ``{+, -}``. Lines starting
    with ``#`` are comments.
    """
    n: int | None = None
    arcs: list[Arc] = []
    seen: dict[tuple[int, int], int] = {}

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()

        if n is None:
            if len(tokens) != 1 or not _INTEGER.match(tokens[0]):
                raise EdgeListParseError(f"expected vertex count, got {line!r}", line_number)
            n = int(tokens[0])
            if n < 1:
                raise EdgeListParseError("vertex count must be at least 1", line_number)
            continue

        if len(tokens) != 3:
            raise EdgeListParseError(f"expected 'u v s', got {line!r}", line_number)
        u_tok, v_tok, s_tok = tokens
        if not _INTEGER.match(u_tok) or not _INTEGER.match(v_tok):
            raise EdgeListParseError(f"vertex indices must be integers, got {line!r}", line_number)
        if s_tok not in ("+", "-"):
            raise EdgeListParseError(f"sign must be '+' or '-', got {s_tok!r}", line_number)
        u, v = int(u_tok), int(v_tok)
        for vertex in (u, v):
            if not 1 <= vertex <= n:
                raise EdgeListParseError(f"vertex {vertex} out of range 1..{n}", line_number)
        if (u, v) in seen:
            raise EdgeListParseError(
                f"duplicate arc {u}->{v} (first given on line {seen[(u, v)]})", line_number
            )
        seen[(u, v)] = line_number
        arcs.append(Arc(u, v, 1 if s_tok == "+" else -1))

    if n is None:
        raise EdgeListParseError("empty document: missing vertex count")
    return SignedDigraph(n, tuple(arcs))


def read_edge_list(path: Path) -> SignedDigraph:
    """Read and parse an edge-list file."""
    return parse(Path(path).read_text(encoding="utf-8"))


def to_edge_list(digraph: SignedDigraph, comments: Iterable[str] = ()) -> str:
    """Serialize in the edge-list format; ``parse`` inverts this."""
    lines = [f"# {comment}" for comment in comments]
    lines.append(str(digraph.n))
    lines.extend(f"{arc.tail} {arc.head} {arc.symbol}" for arc in digraph.arcs)
    return "\n".join(lines) + "\n"


# =============================================================================
# Connectivity
# =============================================================================


def is_strongly_connected(digraph: SignedDigraph) -> bool:
    return bool(nx.is_strongly_connected(digraph.to_networkx()))


def distance(digraph: SignedDigraph, u: int, v: int) -> int | float:
    """Length of a shortest directed path u->v, or ``UNREACHABLE``."""
    try:
        return int(nx.shortest_path_length(digraph.to_networkx(), u, v))
    except nx.NetworkXNoPath:
        return UNREACHABLE


def period(digraph: SignedDigraph) -> int:
    """Gcd of all cycle lengths of a strongly connected digraph.

    Uses BFS levels from vertex 1: the gcd of ``level(u) + 1 - level(v)``
    over all arcs equals the gcd of the cycle lengths.
    """
    if not is_strongly_connected(digraph):
        raise NotPrimitiveError("digraph is not strongly connected")
    if not digraph.arcs:
        return 0
    level = {1: 0}
    queue = deque([1])
    while queue:
        u = queue.popleft()
        for w in digraph.successors[u]:
            if w not in level:
                level[w] = level[u] + 1
                queue.append(w)
    return reduce(math.gcd, (abs(level[a.tail] + 1 - level[a.head]) for a in digraph.arcs), 0)


# =============================================================================
# Cycle catalog
# =============================================================================


@dataclass(frozen=True, order=True)
class Cycle:
    """Simple directed cycle, rotated so that its smallest vertex comes first."""

    vertices: tuple[int, ...]
    sign: int = field(compare=False)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        seq = self.vertices
        return tuple((seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))

    def to_dict(self) -> dict[str, object]:
        return {"vertices": list(self.vertices), "length": self.length, "sign": self.sign}


def _canonical_rotation(vertices: list[int]) -> tuple[int, ...]:
    pivot = vertices.index(min(vertices))
    return tuple(vertices[pivot:] + vertices[:pivot])


@dataclass(frozen=True)
class CycleCatalog:
    """All simple cycles of a digraph, their lengths, and per-vertex cycle lengths."""

    n: int
    cycles: tuple[Cycle, ...]

    @cached_property
    def lengths(self) -> tuple[int, ...]:
        """The cycle length set C(S), ascending."""
        return tuple(sorted({cycle.length for cycle in self.cycles}))

    @cached_property
    def on_cycle_lengths(self) -> tuple[frozenset[int], ...]:
        """Index ``v`` holds the lengths p such that v lies on some p-cycle (index 0 unused)."""
        memberships: list[set[int]] = [set() for _ in range(self.n + 1)]
        for cycle in self.cycles:
            for vertex in cycle.vertices:
                memberships[vertex].add(cycle.length)
        return tuple(frozenset(m) for m in memberships)

    def of_length(self, length: int) -> tuple[Cycle, ...]:
        return tuple(cycle for cycle in self.cycles if cycle.length == length)

    def gcd(self) -> int:
        return reduce(math.gcd, self.lengths, 0)


def cycle_catalog(digraph: SignedDigraph, max_cycles: int = DEFAULT_MAX_CYCLES) -> CycleCatalog:
    """Enumerate every simple cycle (Johnson's algorithm via networkx).

    Raises:
        CycleCapExceededError: if more than ``max_cycles`` cycles exist.
    """
    if max_cycles < 1:
        raise ValueError("max_cycles must be at least 1")
    found = list(islice(nx.simple_cycles(digraph.to_networkx()), max_cycles + 1))
    if len(found) > max_cycles:
        raise CycleCapExceededError(max_cycles)

    cycles = []
    for raw in found:
        vertices = _canonical_rotation(list(raw))
        cycles.append(Cycle(vertices, digraph.walk_sign(vertices + (vertices[0],))))
    cycles.sort(key=lambda c: (c.length, c.vertices))
    return CycleCatalog(digraph.n, tuple(cycles))


def cycle_class_signs(catalog: CycleCatalog) -> dict[int, frozenset[int]]:
    """Signs occurring among the cycles of each length."""
    classes: dict[int, set[int]] = {}
    for cycle in catalog.cycles:
        classes.setdefault(cycle.length, set()).add(cycle.sign)
    return {length: frozenset(signs) for length, signs in sorted(classes.items())}


# =============================================================================
# Primitivity and nonpowerfulness
# =============================================================================


def is_primitive(digraph: SignedDigraph, catalog: CycleCatalog | None = None) -> bool:
    """Strongly connected with gcd of cycle lengths equal to 1.

    With a catalog the gcd is read from C(S); otherwise it is the period
    computed from BFS levels.
    """
    if not digraph.arcs or not is_strongly_connected(digraph):
        return False
    if catalog is not None:
        return catalog.gcd() == 1
    return period(digraph) == 1


def require_primitive(digraph: SignedDigraph) -> None:
    """Raise NotPrimitiveError with a reason when ``digraph`` is not primitive."""
    if not digraph.arcs:
        raise NotPrimitiveError("digraph has no arcs")
    if not is_strongly_connected(digraph):
        raise NotPrimitiveError("digraph is not strongly connected")
    g = period(digraph)
    if g != 1:
        raise NotPrimitiveError(f"gcd of cycle lengths = {g}", period=g)


def find_distinguished_pair(catalog: CycleCatalog) -> tuple[Cycle, Cycle] | None:
    """Return a cycle pair certifying nonpowerfulness, or None.

    Either an odd cycle with a negative even cycle, or two odd cycles of
    opposite sign. Catalog order decides which pair is reported.
    """
    first_odd: dict[int, int] = {}
    first_negative_even: int | None = None
    for index, cycle in enumerate(catalog.cycles):
        if cycle.length % 2:
            first_odd.setdefault(cycle.sign, index)
        elif cycle.sign < 0 and first_negative_even is None:
            first_negative_even = index

    odd = sorted(first_odd.values())
    if odd and first_negative_even is not None:
        return catalog.cycles[odd[0]], catalog.cycles[first_negative_even]
    if len(odd) == 2:
        return catalog.cycles[odd[0]], catalog.cycles[odd[1]]
    return None


def is_nonpowerful(digraph: SignedDigraph, catalog: CycleCatalog | None = None) -> bool:
    """True iff the primitive digraph has a distinguished cycle pair."""
    require_primitive(digraph)
    if catalog is None:
        catalog = cycle_catalog(digraph)
    return find_distinguished_pair(catalog) is not None


def signature_certificate(digraph: SignedDigraph) -> tuple[int, dict[int, int]] | None:
    """Find ``eps`` and vertex signs ``d`` with ``sign(u, v) == eps * d[u] * d[v]`` on every arc.

    For a strongly connected digraph such a certificate exists iff every
    closed walk of length p has sign eps**p, i.e. iff the pattern is powerful.
    """
    neighbours: list[list[tuple[int, int]]] = [[] for _ in range(digraph.n + 1)]
    for arc in digraph.arcs:
        neighbours[arc.tail].append((arc.head, arc.sign))
        neighbours[arc.head].append((arc.tail, arc.sign))

    for eps in (1, -1):
        labels = {1: 1}
        queue = deque([1])
        consistent = True
        while queue and consistent:
            u = queue.popleft()
            for w, sign in neighbours[u]:
                wanted = sign * eps * labels[u]
                if w not in labels:
                    labels[w] = wanted
                    queue.append(w)
                elif labels[w] != wanted:
                    consistent = False
                    break
        if consistent and len(labels) == digraph.n:
            return eps, labels
    return None


def is_isomorphic_underlying(first: SignedDigraph, second: SignedDigraph) -> bool:
    """Isomorphism of the unsigned underlying digraphs."""
    if first.n != second.n or len(first.arcs) != len(second.arcs):
        return False
    return bool(nx.is_isomorphic(first.to_networkx(), second.to_networkx()))
