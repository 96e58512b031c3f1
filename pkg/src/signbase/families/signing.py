# ============================================================================
#  signbase
#  LICENSE: MIT
# ============================================================================
"""
Arc signings that realize prescribed cycle signs.

A cycle is negative iff it contains an odd number of negative arcs, so
cycle-sign constraints are linear equations over GF(2) in per-arc
negativity bits.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from itertools import combinations, product

import numpy as np

from signbase.engine.digraph import CycleCatalog, SignedDigraph
from signbase.errors import InfeasibleSignsError

# Negative-arc sets up to this size are searched before falling back to GF(2)
MAX_SEARCHED_NEGATIVE_ARCS = 2


def gf2_solve(matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray | None:
    """Solve ``matrix @ x = rhs`` over GF(2); free variables are set to 0.

    Returns None when the system is inconsistent.
    """
    a = (np.asarray(matrix) & 1).astype(np.uint8, copy=True)
    b = (np.asarray(rhs).reshape(-1) & 1).astype(np.uint8, copy=True)
    m, n = a.shape
    aug = np.concatenate([a, b[:, None]], axis=1)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        rows = np.where(aug[r:, c] == 1)[0]
        if rows.size == 0:
            continue
        p = r + int(rows[0])
        if p != r:
            aug[[r, p], :] = aug[[p, r], :]
        ones = np.where(aug[:, c] == 1)[0]
        ones = ones[ones != r]
        if ones.size:
            aug[ones, :] ^= aug[r, :]
        pivots.append(c)
        r += 1

    if np.any(aug[r:, n] == 1):
        return None
    x = np.zeros(n, dtype=np.uint8)
    for row, col in enumerate(pivots):
        x[col] = aug[row, n]
    return x


def _arc_order(digraph: SignedDigraph) -> list[tuple[int, int]]:
    return sorted(digraph.arc_signs)


def _cycle_masks(digraph: SignedDigraph, catalog: CycleCatalog) -> list[tuple[int, int]]:
    """(length, bitmask of arc indices) for every cataloged cycle."""
    index = {arc: j for j, arc in enumerate(_arc_order(digraph))}
    masks = []
    for cycle in catalog.cycles:
        mask = 0
        for arc in cycle.arcs:
            mask |= 1 << index[arc]
        masks.append((cycle.length, mask))
    return masks


def solve_signs(
    digraph: SignedDigraph, catalog: CycleCatalog, constraints: Mapping[int, int]
) -> dict[tuple[int, int], int]:
    """Arc signs giving every cycle of each constrained length the demanded sign.

    Raises:
        ValueError: a constrained length is not a cycle length of the digraph
        InfeasibleSignsError: the parity system has no solution
    """
    unknown = sorted(set(constraints) - set(catalog.lengths))
    if unknown:
        raise ValueError(f"no cycles of length {unknown}; cycle lengths are {list(catalog.lengths)}")

    arcs = _arc_order(digraph)
    index = {arc: j for j, arc in enumerate(arcs)}
    rows: list[list[int]] = []
    rhs: list[int] = []
    for length, sign in sorted(constraints.items()):
        for cycle in catalog.of_length(length):
            row = [0] * len(arcs)
            for arc in cycle.arcs:
                row[index[arc]] = 1
            rows.append(row)
            rhs.append(1 if sign < 0 else 0)

    if not rows:
        return {arc: 1 for arc in arcs}
    solution = gf2_solve(np.array(rows, dtype=np.uint8), np.array(rhs, dtype=np.uint8))
    if solution is None:
        demanded = ", ".join(f"{p}:{'+' if s > 0 else '-'}" for p, s in sorted(constraints.items()))
        raise InfeasibleSignsError(f"no arc signing realizes cycle signs {{{demanded}}}")
    return {arc: (-1 if solution[j] else 1) for j, arc in enumerate(arcs)}


def has_distinguished_pair(cycles: Iterable[tuple[int, int]]) -> bool:
    """Check (length, sign) pairs for an odd cycle with a negative even one, or opposite odd cycles."""
    odd_signs: set[int] = set()
    negative_even = False
    for length, sign in cycles:
        if length % 2:
            odd_signs.add(sign)
        elif sign < 0:
            negative_even = True
    return (bool(odd_signs) and negative_even) or len(odd_signs) == 2


def _acceptable(
    signed: list[tuple[int, int]], constrained: Sequence[int], split: int | None
) -> bool:
    by_length: dict[int, set[int]] = {}
    for length, sign in signed:
        by_length.setdefault(length, set()).add(sign)
    if any(len(by_length.get(length, ())) > 1 for length in constrained):
        return False
    if split is not None and len(by_length.get(split, ())) != 2:
        return False
    return has_distinguished_pair(signed)


def canonical_signing(
    digraph: SignedDigraph,
    catalog: CycleCatalog,
    constrained: Sequence[int] = (),
    split: int | None = None,
) -> SignedDigraph:
    """Nonpowerful signing with sign-constant ``constrained`` classes.

    Negative-arc sets are tried by size, then lexicographically over sorted
    arcs; the first acceptable one wins. If none of size at most
    MAX_SEARCHED_NEGATIVE_ARCS works, class-sign vectors are solved over
    GF(2). With ``split`` the cycles of that length must carry both signs.
    """
    arcs = _arc_order(digraph)
    masks = _cycle_masks(digraph, catalog)

    for size in range(MAX_SEARCHED_NEGATIVE_ARCS + 1):
        for chosen in combinations(range(len(arcs)), size):
            negative = 0
            for j in chosen:
                negative |= 1 << j
            signed = [
                (length, -1 if bin(mask & negative).count("1") % 2 else 1)
                for length, mask in masks
            ]
            if _acceptable(signed, constrained, split):
                return digraph.with_negative_arcs(arcs[j] for j in chosen)

    if split is None:
        lengths = sorted(set(constrained))
        for signs in product((1, -1), repeat=len(lengths)):
            try:
                solution = solve_signs(digraph, catalog, dict(zip(lengths, signs)))
            except InfeasibleSignsError:
                continue
            signed_digraph = digraph.with_signs(solution)
            signed = [
                (cycle.length, signed_digraph.walk_sign(cycle.vertices + cycle.vertices[:1]))
                for cycle in catalog.cycles
            ]
            if _acceptable(signed, constrained, split):
                return signed_digraph

    raise InfeasibleSignsError(
        f"no nonpowerful signing with sign-constant classes {sorted(set(constrained))}"
        + (f" and a split {split}-class" if split is not None else "")
    )
