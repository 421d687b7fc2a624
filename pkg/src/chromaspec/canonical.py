"""Canonical forms for small simple graphs.

The canonical form of a graph is the minimum, over all vertex orderings, of
the upper-triangle adjacency bitstring read column by column (the same bit
order graph6 uses).  The search is branch-and-bound: orderings are grown one
position at a time, pruned against the best string so far, and candidates
that are twins (swapping them is an automorphism) are explored only once.
Both prunings preserve the exact minimum.
"""

from __future__ import annotations

from .graphs import Graph

DEFAULT_CANONICAL_LIMIT = 8

_INF = 1 << 62


class CanonicalSizeError(ValueError):
    """Graph exceeds the configured canonicalization limit."""


def _min_columns(n: int, adj: list[int]) -> list[int]:
    """Minimum column-value sequence over all orderings of the n vertices.

    Candidates carry their column value for the position being filled and
    are updated incrementally as the ordering grows.
    """
    best = [_INF] * n

    def dfs(cands: list[tuple[int, int]]) -> None:
        j = n - len(cands)
        cands.sort()
        reps: list[tuple[int, int]] = []
        for col, v in cands:
            if col > best[j]:
                break
            twin = False
            for col2, u in reps:
                if col2 == col:
                    excl = ~((1 << v) | (1 << u))
                    if adj[v] & excl == adj[u] & excl:
                        twin = True
                        break
            if twin:
                continue
            reps.append((col, v))
            if col < best[j]:
                best[j] = col
                for t in range(j + 1, n):
                    best[t] = _INF
            if len(cands) > 1:
                dfs([((c << 1) | (adj[u] >> v & 1), u) for c, u in cands if u != v])

    dfs([(0, v) for v in range(n)])
    return best


def canonical_form(g: Graph, limit: int = DEFAULT_CANONICAL_LIMIT) -> bytes:
    """Canonical byte string: [n] + packed minimal adjacency bits.

    Identical for isomorphic graphs, distinct otherwise.  Requires a simple
    graph with n <= limit.
    """
    if not g.is_simple():
        raise ValueError("canonical form requires a simple graph")
    if g.n > limit:
        raise CanonicalSizeError(f"n={g.n} exceeds canonical limit {limit}")
    n = g.n
    if n == 0:
        return bytes([0])
    cols = _min_columns(n, g.adjacency_masks())
    bits = 0
    nbits = 0
    for j in range(1, n):
        bits = (bits << j) | cols[j]
        nbits += j
    out = bytearray([n])
    if nbits:
        pad = (-nbits) % 8
        bits <<= pad
        out += bits.to_bytes((nbits + pad) // 8, "big")
    return bytes(out)


def graph_from_canonical(form: bytes) -> Graph:
    """Rebuild the canonically labeled graph from its byte form."""
    n = form[0]
    bits = int.from_bytes(form[1:], "big")
    nbits = n * (n - 1) // 2
    bits >>= (len(form) - 1) * 8 - nbits if len(form) > 1 else 0
    edges = []
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if bits >> pos & 1:
                edges.append((i, j))
    return Graph.build(n, edges)
