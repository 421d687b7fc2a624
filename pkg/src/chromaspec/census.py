"""Exhaustive, isomorphism-free censuses of small simple graphs and the
evaluation spectra computed over them.

The census on n vertices is grown level by level: every graph with m+1
edges arises from one with m edges by adding an edge, so adding every
absent edge to every representative and deduplicating by canonical form
is complete.  Hard guard at n = 8 (12346 classes).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .canonical import canonical_form, graph_from_canonical
from .chromatic import ChromaticCache, chromatic_poly
from .graph6 import graph6_decode, graph6_encode
from .graphs import Graph
from .oracle import GuardError
from .regimes import WitnessValueReport, WordCountGuardError, distinct_witness_values, regime_for
from .scalars import Scalar

CENSUS_LIMIT = 8
CLASS_NAMES = ("all", "planar", "connected", "planar-connected")

_census_cache: dict[tuple[int, str], tuple[Graph, ...]] = {}


@dataclass(frozen=True, slots=True)
class GraphCensus:
    n: int
    cls: str
    graphs: tuple[Graph, ...]

    def __len__(self) -> int:
        return len(self.graphs)


def _class_filter(cls: str):
    if cls == "all":
        return lambda g: True
    if cls == "planar":
        return lambda g: g.is_planar()
    if cls == "connected":
        return lambda g: g.is_connected()
    if cls == "planar-connected":
        return lambda g: g.is_connected() and g.is_planar()
    raise ValueError(f"unknown census class {cls!r}; choose from {CLASS_NAMES}")


def enumerate_census(n: int, cls: str = "all") -> GraphCensus:
    """Every simple graph on n vertices, one representative per class."""
    if not 1 <= n <= CENSUS_LIMIT:
        raise GuardError(f"census supports 1 <= n <= {CENSUS_LIMIT}, got {n}")
    want = _class_filter(cls)
    cached = _census_cache.get((n, cls))
    if cached is not None:
        return GraphCensus(n, cls, cached)

    all_graphs = _census_cache.get((n, "all"))
    if all_graphs is None:
        level = {canonical_form(Graph.edgeless(n)): Graph.edgeless(n)}
        collected = dict(level)
        max_edges = n * (n - 1) // 2
        for _ in range(max_edges):
            nxt: dict[bytes, Graph] = {}
            for g in level.values():
                masks = g.adjacency_masks()
                for a in range(n):
                    for b in range(a + 1, n):
                        if masks[a] >> b & 1:
                            continue
                        grown = Graph.build(n, list(g.edges) + [(a, b)])
                        key = canonical_form(grown)
                        if key not in nxt:
                            nxt[key] = graph_from_canonical(key)
            level = nxt
            collected.update(nxt)
        all_graphs = tuple(
            collected[key] for key in sorted(collected, key=lambda k: (collected[k].simple_edge_count, k))
        )
        _census_cache[(n, "all")] = all_graphs

    members = tuple(g for g in all_graphs if want(g))
    _census_cache[(n, cls)] = members
    return GraphCensus(n, cls, members)


def clear_census_cache() -> None:
    _census_cache.clear()


@dataclass(frozen=True, slots=True)
class Spectrum:
    q: Scalar
    n: int
    cls: str
    values: tuple[Scalar, ...]  # sorted, exactly deduplicated

    @property
    def count(self) -> int:
        return len(self.values)

    def to_json(self) -> dict:
        return {
            "q": str(self.q),
            "n": self.n,
            "class": self.cls,
            "count": self.count,
            "values": [str(v) for v in self.values],
        }

    def csv_row(self) -> str:
        return f"{self.q},{self.n},{self.cls},{self.count}"


def _spectrum_chunk(payload) -> list[str]:
    """Worker: evaluate the chromatic polynomial of each graph6 line at q."""
    q_text, lines = payload
    q = Scalar.parse(q_text)
    cache = ChromaticCache()
    return [str(chromatic_poly(graph6_decode(line), cache).evaluate(q)) for line in lines]


def compute_spectrum(
    n: int,
    q,
    cls: str = "all",
    cache: ChromaticCache | None = None,
    jobs: int = 1,
) -> Spectrum:
    """Exact sorted distinct values of P_G(q) over the census class."""
    q = Scalar.of(q)
    census = enumerate_census(n, cls)
    if jobs > 1:
        from multiprocessing import Pool

        lines = [graph6_encode(g) for g in census.graphs]
        chunk = max(1, -(-len(lines) // jobs))
        payloads = [(str(q), lines[i : i + chunk]) for i in range(0, len(lines), chunk)]
        with Pool(jobs) as pool:
            parts = pool.map(_spectrum_chunk, payloads)
        seen = {Scalar.parse(text) for part in parts for text in part}
    else:
        cache = cache or ChromaticCache()
        seen = {chromatic_poly(g, cache).evaluate(q) for g in census.graphs}
    return Spectrum(q, n, cls, tuple(sorted(seen)))


def stanley_check(n: int, cache: ChromaticCache | None = None) -> bool:
    """|P_{K_n}(-1)| = n! (the acyclic orientation count of K_n)."""
    if not 1 <= n <= 10:
        raise GuardError(f"stanley_check supports 1 <= n <= 10, got {n}")
    value = chromatic_poly(Graph.complete(n), cache or ChromaticCache()).evaluate(-1)
    return abs(value) == Scalar.of(factorial(n))


@dataclass(frozen=True, slots=True)
class LowerBoundAudit:
    n: int
    q: Scalar
    regime_name: str | None
    word_count: int | None
    constructive_count: int | None
    constructive_applicable: bool
    constructive_holds: bool | None  # count^2 >= word_count
    exhaustive_count: int | None
    exhaustive_holds: bool | None  # exhaustive spectrum >= constructive set
    witness_report: WitnessValueReport | None

    @property
    def passed(self) -> bool:
        return self.constructive_holds is not False and self.exhaustive_holds is not False

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": str(self.q),
            "regime": self.regime_name,
            "word_count": self.word_count,
            "bound": None if self.word_count is None else f"sqrt({self.word_count})",
            "constructive_count": self.constructive_count,
            "constructive_applicable": self.constructive_applicable,
            "constructive_holds": self.constructive_holds,
            "exhaustive_count": self.exhaustive_count,
            "exhaustive_holds": self.exhaustive_holds,
            "passed": self.passed,
        }


def lower_bound_audit(
    n: int,
    q,
    include_exhaustive: bool | None = None,
    audit: bool = False,
    cache: ChromaticCache | None = None,
    regime=None,
    jobs: int = 1,
) -> LowerBoundAudit:
    """Compare exhaustive spectrum size, constructive value-set size and the
    square-root bound; all three must be consistent."""
    q = Scalar.of(q)
    cache = cache or ChromaticCache()
    if regime is None:
        regime, _ = regime_for(q, cache=cache)

    report = None
    applicable = n >= regime.seed_size
    if applicable:
        try:
            report = distinct_witness_values(n, q, audit=audit, cache=cache, regime=regime)
        except WordCountGuardError:
            applicable = False

    if include_exhaustive is None:
        include_exhaustive = n <= CENSUS_LIMIT
    exhaustive_count = None
    exhaustive_holds = None
    if include_exhaustive:
        exhaustive_count = compute_spectrum(n, q, "planar", cache, jobs=jobs).count
        if report is not None:
            exhaustive_holds = exhaustive_count >= report.value_count

    return LowerBoundAudit(
        n=n,
        q=q,
        regime_name=regime.name,
        word_count=report.word_count if report else None,
        constructive_count=report.value_count if report else None,
        constructive_applicable=applicable,
        constructive_holds=report.bound_holds if report else None,
        exhaustive_count=exhaustive_count,
        exhaustive_holds=exhaustive_holds,
        witness_report=report,
    )
