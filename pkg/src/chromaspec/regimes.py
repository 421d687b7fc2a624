"""Ping-pong regimes, mechanical certificates and constructive value sets.

A regime packages everything one growth construction needs: a seed witness,
two block operations (as basic-letter words), the ratio interval(s) and the
word-counting scheme.  Certification re-derives every interval inclusion
with exact endpoint arithmetic for the concrete evaluation point, so a
certificate is a machine-checked proof that distinct words give distinct
witnessed vectors.

Regime table by evaluation point q (never certified on trust; every q is
re-checked):

  q < 0            seed K2, letters S and B on one interval (0, 1/lam]
  q > 2            seed K3, blocks B and D = SS on (1/q, 1), Fibonacci words
  0 < q < 1.458    seed K4, blocks S^(2m) (m=1) and BB, paired intervals
  1 < q <= 3/2     seed K4, blocks SS and BSSB, intervals (-inf,0], (0,1/2]
  3/2 < q < 1.53   seed K4, blocks SSSS and BSSB, split at -1/2, top 14/25
  1.53 <= q < 2    seed K3, blocks S^(2m) (m=2) and BB, paired intervals

Overlaps resolve to the first listed candidate whose certificate passes; if
a fixed m fails, m is searched upward to M_SEARCH_LIMIT.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .chromatic import ChromaticCache
from .graphs import Graph, Witness, add_leaf
from .intervals import Interval, Mobius, PoleInsideIntervalError
from .matrices import Mat2, Vec2
from .scalars import Scalar
from .semigroup import (
    DegenerateParameterError,
    VectorMode,
    apply_word_graph,
    attainable_mode,
    feasible_mode,
    ratio,
    witness_vector,
    word_matrix,
)

SEED_SIZES = {"K2": 2, "K3": 3, "K4": 4}

M_SEARCH_LIMIT = 16
WORD_LIMIT = 1 << 20

# regime range boundaries fixed as exact rationals
_CASE1_TOP = Fraction(1458, 1000)
_CASE2_BOTTOM = Fraction(153, 100)
_SHIFTED_TOP_RATIO = Fraction(14, 25)


class CertificationError(RuntimeError):
    def __init__(self, condition: str, message: str):
        super().__init__(f"{condition}: {message}")
        self.condition = condition


class PingPongViolation(RuntimeError):
    """A consequence of a certificate failed to hold (must never happen)."""


class WordCountGuardError(ValueError):
    """Requested enumeration exceeds the word-count guard."""


@dataclass(frozen=True, slots=True)
class Block:
    label: str
    word: str  # basic letters, applied first-to-last

    @property
    def vertices_added(self) -> int:
        return len(self.word)


@dataclass(frozen=True, slots=True)
class Regime:
    name: str
    q: Scalar
    mode: VectorMode
    seed_name: str
    block_k: Block
    block_l: Block
    interval_i: Interval
    interval_j: Interval | None  # None: both images inside interval_i, disjoint
    m: int | None
    word_scheme: str  # "binary" | "fibonacci" | "balanced"
    q_range: str

    @property
    def seed_size(self) -> int:
        return SEED_SIZES[self.seed_name]

    def seed_witness(self) -> Witness:
        return Witness(Graph.complete(self.seed_size), (0, 1))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "q": str(self.q),
            "mode": self.mode.kind,
            "parameter": str(self.mode.param),
            "seed": self.seed_name,
            "blocks": {self.block_k.label: self.block_k.word, self.block_l.label: self.block_l.word},
            "interval_i": self.interval_i.to_json(),
            "interval_j": None if self.interval_j is None else self.interval_j.to_json(),
            "m": self.m,
            "word_scheme": self.word_scheme,
            "q_range": self.q_range,
        }


@dataclass(frozen=True, slots=True)
class CertCondition:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True, slots=True)
class Certificate:
    regime: Regime
    base_ratio: Scalar
    conditions: tuple[CertCondition, ...]
    images_k: tuple[Interval, ...]
    images_l: tuple[Interval, ...]

    @property
    def certified(self) -> bool:
        return all(c.passed for c in self.conditions)

    def first_failure(self) -> CertCondition | None:
        return next((c for c in self.conditions if not c.passed), None)

    def to_json(self) -> dict:
        return {
            "regime": self.regime.to_json(),
            "base_ratio": str(self.base_ratio),
            "certified": self.certified,
            "conditions": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.conditions
            ],
            "images": {
                self.regime.block_k.label: [iv.to_json() for iv in self.images_k],
                self.regime.block_l.label: [iv.to_json() for iv in self.images_l],
            },
        }


# -- regime construction ---------------------------------------------------


def _negative_regime(q: Scalar) -> Regime:
    lam = -q
    return Regime(
        name="negative",
        q=q,
        mode=feasible_mode(lam),
        seed_name="K2",
        block_k=Block("S", "S"),
        block_l=Block("B", "B"),
        interval_i=Interval.open_closed(0, Scalar.of(1) / lam),
        interval_j=None,
        m=None,
        word_scheme="binary",
        q_range="q < 0",
    )


def _supercritical_regime(q: Scalar) -> Regime:
    return Regime(
        name="supercritical",
        q=q,
        mode=attainable_mode(q),
        seed_name="K3",
        block_k=Block("B", "B"),
        block_l=Block("D", "SS"),
        interval_i=Interval.open(Scalar.of(1) / q, 1),
        interval_j=None,
        m=None,
        word_scheme="fibonacci",
        q_range="q > 2",
    )


def _case1_regime(q: Scalar, m: int) -> Regime:
    split = (q - 1) ** 2 / (2 * q - 3)  # negative throughout 0 < q < 3/2
    return Regime(
        name="low-split",
        q=q,
        mode=attainable_mode(q),
        seed_name="K4",
        block_k=Block("K", "S" * (2 * m)),
        block_l=Block("L", "BB"),
        interval_i=Interval.below(split, closed=True),
        interval_j=Interval.open(split, 0),
        m=m,
        word_scheme="balanced",
        q_range="0 < q < 1.458, q != 1",
    )


def _case3_regime(q: Scalar) -> Regime:
    return Regime(
        name="mid-anchor",
        q=q,
        mode=attainable_mode(q),
        seed_name="K4",
        block_k=Block("K", "SS"),
        block_l=Block("L", "BSSB"),
        interval_i=Interval.below(0, closed=True),
        interval_j=Interval.open_closed(0, Fraction(1, 2)),
        m=None,
        word_scheme="balanced",
        q_range="1 < q <= 3/2",
    )


def _case3_shifted_regime(q: Scalar) -> Regime:
    return Regime(
        name="mid-anchor-shifted",
        q=q,
        mode=attainable_mode(q),
        seed_name="K4",
        block_k=Block("K", "SSSS"),
        block_l=Block("L", "BSSB"),
        interval_i=Interval.below(Fraction(-1, 2), closed=True),
        interval_j=Interval.open_closed(Fraction(-1, 2), _SHIFTED_TOP_RATIO),
        m=None,
        word_scheme="balanced",
        q_range="3/2 < q < 1.53",
    )


def _case2_regime(q: Scalar, m: int) -> Regime:
    split = (q - 1) ** 2 / (2 * q - 3)  # > 1 throughout 3/2 < q < 2
    return Regime(
        name="high-split",
        q=q,
        mode=attainable_mode(q),
        seed_name="K3",
        block_k=Block("K", "S" * (2 * m)),
        block_l=Block("L", "BB"),
        interval_i=Interval.above(split, closed=True),
        interval_j=Interval.open(1, split),
        m=m,
        word_scheme="balanced",
        q_range="1.53 <= q < 2",
    )


def candidate_regimes(q, m_override: int | None = None) -> list:
    """Candidate (builder, default m) pairs in precedence order for q."""
    q = Scalar.of(q)
    if q == 0 or q == 1 or q == 2:
        raise DegenerateParameterError(f"q = {q} is a degenerate evaluation point")
    out = []
    if q < 0:
        out.append((_negative_regime(q), None))
    elif q > 2:
        out.append((_supercritical_regime(q), None))
    else:
        if q < _CASE1_TOP:
            out.append((_case1_regime(q, m_override or 1), "S2m"))
        if Scalar.of(1) < q <= Fraction(3, 2):
            out.append((_case3_regime(q), None))
        if Fraction(3, 2) < q < _CASE2_BOTTOM:
            out.append((_case3_shifted_regime(q), None))
        if q >= _CASE2_BOTTOM:
            out.append((_case2_regime(q, m_override or 2), "S2m"))
    return out


# -- certification ---------------------------------------------------------


def base_vector(regime: Regime, cache: ChromaticCache | None = None) -> Vec2:
    return witness_vector(regime.seed_witness(), regime.mode, cache or ChromaticCache())


def _block_map(block: Block, mode: VectorMode) -> tuple[Mat2, Mobius | None]:
    matrix = word_matrix(block.word, mode)
    det = matrix.det()
    return matrix, (Mobius.from_matrix(matrix) if det else None)


def try_certify(regime: Regime, cache: ChromaticCache | None = None) -> Certificate:
    """Run every certificate condition; never raises on a mere failure."""
    conditions: list[CertCondition] = []
    domains = (regime.interval_i,) if regime.interval_j is None else (
        regime.interval_i,
        regime.interval_j,
    )

    base = ratio(base_vector(regime, cache))
    in_domain = any(iv.contains(base) for iv in domains)
    conditions.append(
        CertCondition(
            "base-in-domain",
            in_domain,
            f"seed ratio {base} vs domain {' u '.join(str(d) for d in domains)}",
        )
    )

    images: dict[str, tuple[Interval, ...]] = {}
    for block in (regime.block_k, regime.block_l):
        matrix, mob = _block_map(block, regime.mode)
        conditions.append(
            CertCondition(
                f"{block.label}-nonsingular",
                mob is not None,
                f"det {matrix.det()} for block {block.label} = {block.word}",
            )
        )
        if mob is None:
            images[block.label] = ()
            continue
        imgs = []
        ok = True
        for iv in domains:
            try:
                imgs.append(mob.image(iv))
            except PoleInsideIntervalError as exc:
                conditions.append(CertCondition(f"{block.label}-pole-free", False, str(exc)))
                ok = False
                break
        if not ok:
            images[block.label] = ()
            continue
        conditions.append(
            CertCondition(
                f"{block.label}-pole-free", True, f"pole of {block.label} outside closure"
            )
        )
        images[block.label] = tuple(imgs)

    imgs_k = images.get(regime.block_k.label, ())
    imgs_l = images.get(regime.block_l.label, ())
    if imgs_k and imgs_l:
        if regime.interval_j is None:
            target_k = target_l = regime.interval_i
        else:
            target_k, target_l = regime.interval_i, regime.interval_j
        conditions.append(
            CertCondition(
                f"{regime.block_k.label}-image-inclusion",
                all(iv.is_subset(target_k) for iv in imgs_k),
                f"{[str(i) for i in imgs_k]} within {target_k}",
            )
        )
        conditions.append(
            CertCondition(
                f"{regime.block_l.label}-image-inclusion",
                all(iv.is_subset(target_l) for iv in imgs_l),
                f"{[str(i) for i in imgs_l]} within {target_l}",
            )
        )
        if regime.interval_j is None:
            conditions.append(
                CertCondition(
                    "images-disjoint",
                    imgs_k[0].disjoint_from(imgs_l[0]),
                    f"{imgs_k[0]} vs {imgs_l[0]}",
                )
            )
        else:
            conditions.append(
                CertCondition(
                    "intervals-disjoint",
                    regime.interval_i.disjoint_from(regime.interval_j),
                    f"{regime.interval_i} vs {regime.interval_j}",
                )
            )
        if regime.word_scheme == "fibonacci":
            # words of mixed block counts are compared, so the seed ratio
            # itself must be distinguishable from every one-step image
            outside = not any(iv.contains(base) for iv in imgs_k + imgs_l)
            conditions.append(
                CertCondition(
                    "base-outside-images",
                    outside,
                    f"seed ratio {base} vs images",
                )
            )
    return Certificate(
        regime=regime,
        base_ratio=base,
        conditions=tuple(conditions),
        images_k=imgs_k,
        images_l=imgs_l,
    )


def pingpong_certify(regime: Regime, cache: ChromaticCache | None = None) -> Certificate:
    cert = try_certify(regime, cache)
    if not cert.certified:
        bad = cert.first_failure()
        raise CertificationError(bad.name, bad.detail)
    return cert


def regime_for(
    q,
    m_override: int | None = None,
    name_override: str | None = None,
    cache: ChromaticCache | None = None,
) -> tuple[Regime, Certificate]:
    """First regime in table order whose certificate passes at this q.

    For the m-parameterized regimes a failing fixed m is searched upward to
    M_SEARCH_LIMIT before moving on.
    """
    q = Scalar.of(q)
    failures = []
    for regime, m_kind in candidate_regimes(q, m_override):
        if name_override and regime.name != name_override:
            continue
        cert = try_certify(regime, cache)
        if cert.certified:
            return regime, cert
        failures.append((regime.name, cert.first_failure()))
        if m_kind == "S2m" and m_override is None:
            for m in range(regime.m + 1, M_SEARCH_LIMIT + 1):
                retry = (
                    _case1_regime(q, m) if regime.name == "low-split" else _case2_regime(q, m)
                )
                cert = try_certify(retry, cache)
                if cert.certified:
                    return retry, cert
    detail = "; ".join(f"{name} failed {c.name}" for name, c in failures if c) or "no candidates"
    raise CertificationError("no-certifiable-regime", f"q = {q}: {detail}")


# -- constructive value sets -------------------------------------------------


@dataclass(frozen=True, slots=True)
class WitnessValueReport:
    n: int
    q: Scalar
    regime_name: str
    word_scheme: str
    word_count: int
    n_grown: int  # vertices reached by blocks alone
    leaf_padding: int
    value_count: int
    values: tuple[Scalar, ...]
    bound_holds: bool  # value_count^2 >= word_count (the square-root bound)
    audited: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": str(self.q),
            "regime": self.regime_name,
            "word_scheme": self.word_scheme,
            "word_count": self.word_count,
            "n_grown": self.n_grown,
            "leaf_padding": self.leaf_padding,
            "distinct_ratios": self.word_count,
            "value_count": self.value_count,
            "bound": f"sqrt({self.word_count})",
            "bound_holds": self.bound_holds,
            "audited": self.audited,
            "values": [str(v) for v in self.values],
        }


def _count_words(regime: Regime, n: int) -> tuple[int, int, int]:
    """(word count, vertices grown by blocks, leaf padding) for target n."""
    seed = regime.seed_size
    if n < seed:
        raise WordCountGuardError(f"n = {n} below the {regime.seed_name} seed size")
    if regime.word_scheme == "binary":
        t = n - seed
        return 1 << t, n, 0
    if regime.word_scheme == "fibonacci":
        budget = n - seed
        a, b = 1, 1  # compositions of the budget into block sizes 1 and 2
        for _ in range(budget):
            a, b = b, a + b
        return a, n, 0
    span = regime.block_k.vertices_added + regime.block_l.vertices_added
    t = (n - seed) // span
    grown = seed + t * span
    return comb(2 * t, t), grown, n - grown


def _iter_word_vectors(regime: Regime, v0: Vec2, n: int):
    """Yield (block label word, final vector), sharing prefixes exactly."""
    mk = word_matrix(regime.block_k.word, regime.mode)
    ml = word_matrix(regime.block_l.word, regime.mode)
    lk, ll = regime.block_k.label, regime.block_l.label
    seed = regime.seed_size

    if regime.word_scheme == "binary":
        t = n - seed

        def binary(depth, labels, vec):
            if depth == t:
                yield labels, vec
                return
            yield from binary(depth + 1, labels + lk, mk.apply(vec))
            yield from binary(depth + 1, labels + ll, ml.apply(vec))

        yield from binary(0, "", v0)
    elif regime.word_scheme == "fibonacci":
        def fib(budget, labels, vec):
            if budget == 0:
                yield labels, vec
                return
            yield from fib(budget - 1, labels + lk, mk.apply(vec))
            if budget >= 2:
                yield from fib(budget - 2, labels + ll, ml.apply(vec))

        yield from fib(n - seed, "", v0)
    else:
        span = regime.block_k.vertices_added + regime.block_l.vertices_added
        t = (n - seed) // span

        def balanced(k_left, l_left, labels, vec):
            if k_left == 0 and l_left == 0:
                yield labels, vec
                return
            if k_left:
                yield from balanced(k_left - 1, l_left, labels + lk, mk.apply(vec))
            if l_left:
                yield from balanced(k_left, l_left - 1, labels + ll, ml.apply(vec))

        yield from balanced(t, t, "", v0)


def _expand_labels(regime: Regime, labels: str) -> str:
    table = {regime.block_k.label: regime.block_k.word, regime.block_l.label: regime.block_l.word}
    return "".join(table[c] for c in labels)


def distinct_witness_values(
    n: int,
    q,
    audit: bool = False,
    cache: ChromaticCache | None = None,
    regime: Regime | None = None,
    word_limit: int = WORD_LIMIT,
) -> WitnessValueReport:
    """All same-scheme words reaching n vertices: assert their ratios are
    pairwise distinct, then emit the deleted-graph and whole-graph values.

    Every emitted value is attained by an n-vertex planar graph: blocks
    preserve planarity and leaf padding tops the vertex count up exactly.
    With audit=True each witness is rebuilt at graph level and the matrix
    prediction, planarity and vertex count are re-verified.
    """
    cache = cache or ChromaticCache()
    if regime is None:
        regime, _ = regime_for(q, cache=cache)
    q = Scalar.of(q)
    word_count, grown, padding = _count_words(regime, n)
    if word_count > word_limit:
        raise WordCountGuardError(f"{word_count} words exceed the guard {word_limit}")

    mode = regime.mode
    seed_witness = regime.seed_witness()
    v0 = witness_vector(seed_witness, mode, cache)
    pad_scale = (mode.param + 1 if mode.kind == "feasible" else mode.param - 1) ** padding

    seen_ratios: dict[Scalar, str] = {}
    values: set[Scalar] = set()
    count = 0
    for labels, vec in _iter_word_vectors(regime, v0, grown):
        count += 1
        if not vec.y:
            raise PingPongViolation(f"zero deleted-graph value on word {labels!r}")
        r = vec.x / vec.y
        other = seen_ratios.get(r)
        if other is not None:
            raise PingPongViolation(
                f"ratio collision between words {other!r} and {labels!r}: {r}"
            )
        seen_ratios[r] = labels

        final = vec.scale(pad_scale)
        if mode.kind == "feasible":
            flip = -1 if n % 2 else 1
            values.add(final.y * flip)  # deleted graph, n vertices
            values.add((final.x + final.y) * flip)  # whole graph
        else:
            values.add(final.y)
            values.add(final.y - final.x)

        if audit:
            witness = apply_word_graph(_expand_labels(regime, labels), seed_witness)
            g = witness.graph
            for _ in range(padding):
                g = add_leaf(g, 0)
                witness = Witness(g, witness.edge)
            if g.n != n:
                raise PingPongViolation(f"word {labels!r} grew {g.n} vertices, wanted {n}")
            if not g.is_planar():
                raise PingPongViolation(f"word {labels!r} produced a non-planar witness")
            recomputed = witness_vector(witness, mode, cache)
            if recomputed != final:
                raise PingPongViolation(
                    f"matrix prediction {final} != graph recomputation {recomputed} "
                    f"on word {labels!r}"
                )

    if count != word_count:
        raise PingPongViolation(f"enumerated {count} words, expected {word_count}")
    return WitnessValueReport(
        n=n,
        q=q,
        regime_name=regime.name,
        word_scheme=regime.word_scheme,
        word_count=word_count,
        n_grown=grown,
        leaf_padding=padding,
        value_count=len(values),
        values=tuple(sorted(values)),
        bound_holds=len(values) ** 2 >= word_count,
        audited=audit,
    )
