"""Exact chromatic polynomials by deletion-contraction with memoization.

Reduction rules, applied before any recursion: a loop kills the polynomial;
parallel edges collapse; isolated vertices contribute a factor x; pendant
vertices a factor (x - 1); disconnected graphs multiply over components;
edgeless graphs give x^n.  The recursion pivots on the lexicographically
smallest edge so traces are reproducible.

The memo key is the canonical form of the simplified simple graph; above the
canonical size limit caching falls back to an exact-label (same-ids) table
only, never to a weaker isomorphism key.
"""

from __future__ import annotations

import os

from .canonical import DEFAULT_CANONICAL_LIMIT, canonical_form
from .graphs import Graph, add_apex, add_leaf, contract_edge, delete_edge, join_clique, Witness
from .polynomials import Poly, falling_factorial_poly
from .scalars import Scalar

CACHE_FILE_HEADER = "chromaspec-cache 1"


class ChromaticCache:
    """Memo table for chromatic polynomials.

    Two layers: an exact-label table (cheap hits for graphs met with the
    same vertex ids) and a canonical-form table (hits across relabelings,
    used only for graphs within the canonical limit).
    """

    def __init__(self, canonical_limit: int = DEFAULT_CANONICAL_LIMIT):
        self.canonical_limit = canonical_limit
        self.by_graph: dict[Graph, Poly] = {}
        self.by_canon: dict[bytes, Poly] = {}

    def __len__(self) -> int:
        return len(self.by_canon)

    # -- persistence (versioned key/coefficients records) --------------

    def save(self, path) -> None:
        tmp = f"{path}.tmp.{os.getpid()}"
        with open(tmp, "w") as fh:
            fh.write(f"# {CACHE_FILE_HEADER}\n")
            for key in sorted(self.by_canon):
                coeffs = ",".join(str(c) for c in self.by_canon[key].coeffs)
                fh.write(f"{key.hex()} {coeffs}\n")
        os.replace(tmp, path)

    def load(self, path) -> int:
        loaded = 0
        with open(path) as fh:
            header = fh.readline().strip()
            if header != f"# {CACHE_FILE_HEADER}":
                raise ValueError(f"unrecognized cache file header: {header!r}")
            for line in fh:
                key_hex, _, coeffs = line.strip().partition(" ")
                coeff_tuple = tuple(int(c) for c in coeffs.split(",")) if coeffs else ()
                self.by_canon[bytes.fromhex(key_hex)] = Poly(coeff_tuple)
                loaded += 1
        return loaded


def _strip_reducible(g: Graph) -> tuple[Graph, int, int]:
    """Remove isolated and pendant vertices; count the x and (x-1) factors."""
    x_factors = 0
    leaf_factors = 0
    while True:
        deg = g.degrees()
        isolated = [v for v in range(g.n) if deg[v] == 0]
        if isolated:
            x_factors += len(isolated)
            g = g.induced([v for v in range(g.n) if deg[v] > 0])
            continue
        pendant = next((v for v in range(g.n) if deg[v] == 1), None)
        if pendant is None:
            return g, x_factors, leaf_factors
        leaf_factors += 1
        g = g.induced([v for v in range(g.n) if v != pendant])


def _poly(g: Graph, cache: ChromaticCache) -> Poly:
    """Chromatic polynomial of a simple loopless graph, memoized."""
    hit = cache.by_graph.get(g)
    if hit is not None:
        return hit
    key = None
    if g.n <= cache.canonical_limit:
        key = canonical_form(g, cache.canonical_limit)
        hit = cache.by_canon.get(key)
        if hit is not None:
            cache.by_graph[g] = hit
            return hit

    core, x_factors, leaf_factors = _strip_reducible(g)
    if core.simple_edge_count == 0:
        poly = Poly.x_power(core.n)
    elif not core.is_connected():
        poly = Poly.one()
        for comp in core.components():
            poly = poly * _poly(core.induced(comp), cache)
    else:
        a, b, _ = core.edges[0]  # lexicographically smallest pivot edge
        deleted = delete_edge(core, (a, b))
        contracted = contract_edge(core, (a, b)).simplify()
        poly = _poly(deleted, cache) - _poly(contracted, cache)
    if x_factors:
        poly = poly * Poly.x_power(x_factors)
    for _ in range(leaf_factors):
        poly = poly * Poly((-1, 1))

    cache.by_graph[g] = poly
    if key is not None:
        cache.by_canon[key] = poly
    return poly


def chromatic_poly(g: Graph, cache: ChromaticCache | None = None) -> Poly:
    """The chromatic polynomial of g (zero if a contraction produced a loop)."""
    if g.loop_flag:
        return Poly.zero()
    if cache is None:
        cache = ChromaticCache()
    return _poly(g.simplify(), cache)


def z_value(g: Graph, lam, cache: ChromaticCache | None = None) -> Scalar:
    """Sign-normalized evaluation (-1)^n P_g(-lam); positive for loopless g, lam > 0."""
    lam = Scalar.of(lam)
    value = chromatic_poly(g, cache).evaluate(-lam)
    return -value if g.n % 2 else value


# -- identity checks (each must hold for every valid input) ---------------


def check_additive_dc(g: Graph, edge, lam, cache: ChromaticCache | None = None) -> bool:
    """Z_g = Z_{g-e} + Z_{g/e}, exactly."""
    cache = cache or ChromaticCache()
    lam = Scalar.of(lam)
    lhs = z_value(g, lam, cache)
    rhs = z_value(delete_edge(g, edge), lam, cache) + z_value(contract_edge(g, edge), lam, cache)
    return lhs == rhs


def check_leaf_factor(g: Graph, v: int, cache: ChromaticCache | None = None) -> bool:
    """Attaching a leaf multiplies the chromatic polynomial by (x - 1)."""
    cache = cache or ChromaticCache()
    return chromatic_poly(add_leaf(g, v), cache) == chromatic_poly(g, cache) * Poly((-1, 1))


def check_polyid(g: Graph, edge, cache: ChromaticCache | None = None) -> bool:
    """For H = (apex added over e) - e:  P_H = P_{g/e} + (x-2) P_{g-e}, coefficient-wise."""
    cache = cache or ChromaticCache()
    h = delete_edge(add_apex(Witness(g, edge)).graph, edge)
    lhs = chromatic_poly(h, cache)
    rhs = chromatic_poly(contract_edge(g, edge), cache) + Poly((-2, 1)) * chromatic_poly(
        delete_edge(g, edge), cache
    )
    return lhs == rhs


def check_join_shift(g: Graph, m: int, cache: ChromaticCache | None = None) -> bool:
    """P_{g join K_m}(x) = x(x-1)...(x-m+1) * P_g(x - m), coefficient-wise."""
    cache = cache or ChromaticCache()
    lhs = chromatic_poly(join_clique(g, m), cache)
    rhs = falling_factorial_poly(m) * chromatic_poly(g, cache).shift_argument(m)
    return lhs == rhs
