"""Loopless multigraphs with dense vertex ids and tracked witness edges.

Graphs are immutable values: every operation returns a new graph.  Edges are
stored as sorted (a, b, multiplicity) triples with a < b.  Contractions that
would create a loop instead set loop_flag (the chromatic polynomial of such
a graph is identically zero), so the edge multiset itself stays loopless.

The contraction relabeling rule is fixed for reproducibility: the merged
vertex takes min(a, b) and every id above max(a, b) shifts down by one.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx


def normalize_edge(a: int, b: int) -> tuple[int, int]:
    if a == b:
        raise ValueError(f"loop edge ({a}, {b})")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int, int], ...] = ()  # (a, b, mult), a < b, sorted
    loop_flag: bool = False

    @classmethod
    def build(cls, n: int, edges=(), loop_flag: bool = False) -> Graph:
        mult: dict[tuple[int, int], int] = {}
        for e in edges:
            if len(e) == 3:
                a, b, m = e
            else:
                a, b = e
                m = 1
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            if m < 1:
                raise ValueError(f"multiplicity {m} < 1")
            key = normalize_edge(a, b)
            mult[key] = mult.get(key, 0) + m
        packed = tuple((a, b, m) for (a, b), m in sorted(mult.items()))
        return cls(n, packed, loop_flag)

    # -- standard graphs ----------------------------------------------

    @classmethod
    def edgeless(cls, n: int) -> Graph:
        return cls.build(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.build(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return cls.build(n, [(i, (i + 1) % n) for i in range(n)])

    # -- basic queries --------------------------------------------------

    @property
    def edge_count(self) -> int:
        """Total edge count with multiplicity."""
        return sum(m for _, _, m in self.edges)

    @property
    def simple_edge_count(self) -> int:
        return len(self.edges)

    def simple_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((a, b) for a, b, _ in self.edges)

    def multiplicity(self, a: int, b: int) -> int:
        key = normalize_edge(a, b)
        for x, y, m in self.edges:
            if (x, y) == key:
                return m
        return 0

    def has_edge(self, a: int, b: int) -> bool:
        return self.multiplicity(a, b) > 0

    def is_simple(self) -> bool:
        return not self.loop_flag and all(m == 1 for _, _, m in self.edges)

    def simplify(self) -> Graph:
        """Collapse multiplicities to 1 (loop_flag is preserved)."""
        return Graph(self.n, tuple((a, b, 1) for a, b, _ in self.edges), self.loop_flag)

    def adjacency_masks(self) -> list[int]:
        masks = [0] * self.n
        for a, b, _ in self.edges:
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        return masks

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b, _ in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def degrees(self) -> list[int]:
        """Simple degrees (parallel edges counted once)."""
        deg = [0] * self.n
        for a, b, _ in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    # -- connectivity and structure -------------------------------------

    def components(self) -> list[list[int]]:
        masks = self.adjacency_masks()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                m = masks[v]
                while m:
                    u = (m & -m).bit_length() - 1
                    m &= m - 1
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def component_count(self) -> int:
        return len(self.components())

    def is_connected(self) -> bool:
        return self.n <= 1 or self.component_count() == 1

    def induced(self, vertices: list[int]) -> Graph:
        """Induced subgraph relabeled densely in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        keep = []
        for a, b, m in self.edges:
            if a in index and b in index:
                keep.append((index[a], index[b], m))
        return Graph.build(len(vertices), keep, self.loop_flag)

    def is_bipartite(self) -> bool:
        masks = self.adjacency_masks()
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                m = masks[v]
                while m:
                    u = (m & -m).bit_length() - 1
                    m &= m - 1
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return False
        return True

    def is_biconnected(self) -> bool:
        """Connected with no cut vertex; defined False for n < 3."""
        if self.n < 3 or not self.is_connected():
            return False
        for v in range(self.n):
            rest = [u for u in range(self.n) if u != v]
            if not self.induced(rest).is_connected():
                return False
        return True

    def is_planar(self) -> bool:
        """Planarity of the underlying simple graph (exact, via left-right test)."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.simple_pairs())
        ok, _ = nx.check_planarity(g)
        return ok

    def __str__(self) -> str:
        flag = ", loop" if self.loop_flag else ""
        return f"Graph(n={self.n}, edges={list(self.edges)}{flag})"


@dataclass(frozen=True, slots=True)
class Witness:
    """A graph with one tracked edge, the unit the growth operations act on."""

    graph: Graph
    edge: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "edge", normalize_edge(*self.edge))
        if self.graph.loop_flag:
            raise ValueError("witness graph must be loopless")
        if not self.graph.has_edge(*self.edge):
            raise ValueError(f"witness edge {self.edge} not in graph")


# -- edge operations ----------------------------------------------------


def delete_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    """Remove one copy of the edge; the vertex set is unchanged."""
    key = normalize_edge(*edge)
    out = []
    found = False
    for a, b, m in g.edges:
        if (a, b) == key:
            found = True
            if m > 1:
                out.append((a, b, m - 1))
        else:
            out.append((a, b, m))
    if not found:
        raise ValueError(f"edge {edge} not present")
    return Graph(g.n, tuple(out), g.loop_flag)


def contract_edge(g: Graph, edge: tuple[int, int]) -> Graph:
    """Merge the endpoints into min(a, b); ids above max(a, b) shift down.

    Parallel copies of the contracted pair become loops: they are not stored,
    they set loop_flag.  All other parallel edges are kept as multiplicities.
    """
    a, b = normalize_edge(*edge)
    if not g.has_edge(a, b):
        raise ValueError(f"edge {edge} not present")

    def relabel(v: int) -> int:
        if v == b:
            return a
        return v - 1 if v > b else v

    loop_flag = g.loop_flag
    merged: dict[tuple[int, int], int] = {}
    for x, y, m in g.edges:
        if (x, y) == (a, b):
            if m > 1:
                loop_flag = True  # surviving parallel copies turn into loops
            continue
        key = normalize_edge(relabel(x), relabel(y))
        merged[key] = merged.get(key, 0) + m
    packed = tuple((x, y, m) for (x, y), m in sorted(merged.items()))
    return Graph(g.n - 1, packed, loop_flag)


# -- growth operations ---------------------------------------------------


def subdivide(w: Witness) -> Witness:
    """Replace the witness edge ab by a path a-w-b; re-witness on (a, new)."""
    a, b = w.edge
    g = delete_edge(w.graph, (a, b))
    new = g.n
    grown = Graph.build(new + 1, list(g.edges) + [(a, new), (b, new)], g.loop_flag)
    return Witness(grown, (a, new))

def add_apex(w: Witness) -> Witness:
    """Add a new vertex adjacent to both witness endpoints; witness unchanged."""
    a, b = w.edge
    g = w.graph
    new = g.n
    grown = Graph.build(new + 1, list(g.edges) + [(a, new), (b, new)], g.loop_flag)
    return Witness(grown, (a, b))


def add_leaf(g: Graph, v: int) -> Graph:
    """Attach a pendant vertex (id n) to v."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    return Graph.build(g.n + 1, list(g.edges) + [(v, g.n)], g.loop_flag)


def join_clique(g: Graph, m: int) -> Graph:
    """Join with K_m: m new mutually adjacent vertices, each adjacent to all of g."""
    if m < 1:
        raise ValueError("m must be positive")
    edges = list(g.edges)
    for i in range(m):
        u = g.n + i
        edges.extend((v, u) for v in range(g.n))
        edges.extend((g.n + j, u) for j in range(i))
    return Graph.build(g.n + m, edges, g.loop_flag)
