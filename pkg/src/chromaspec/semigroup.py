"""Witnessed vectors, operation matrices and words over the growth alphabet.

Two vector conventions share the same machinery:

* feasible mode, parameter lam > 0: v = (Z_{G/e}(lam), Z_{G-e}(lam));
* attainable mode, parameter q: w = (P_{G/e}(q), P_{G-e}(q)).

A word's letters act on the graph first-letter-first, so the matrix of a
word is the product of letter matrices taken last-letter-leftmost, and the
induced map on ratios x/y is the Moebius map read row-wise off that matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chromatic import ChromaticCache, chromatic_poly, z_value
from .graphs import Witness, add_apex, contract_edge, delete_edge, subdivide
from .intervals import Mobius
from .matrices import Mat2, Vec2
from .scalars import Scalar

BASIC_LETTERS = "SB"


class DegenerateParameterError(ValueError):
    """Parameter at which the operation matrices become singular."""


@dataclass(frozen=True, slots=True)
class VectorMode:
    kind: str  # "feasible" or "attainable"
    param: Scalar  # lam, respectively q

    def __post_init__(self):
        if self.kind not in ("feasible", "attainable"):
            raise ValueError(f"unknown mode {self.kind!r}")
        object.__setattr__(self, "param", Scalar.of(self.param))


def feasible_mode(lam) -> VectorMode:
    return VectorMode("feasible", Scalar.of(lam))


def attainable_mode(q) -> VectorMode:
    return VectorMode("attainable", Scalar.of(q))


def op_matrix(letter: str, mode: VectorMode) -> Mat2:
    """Matrix of one growth operation on witnessed vectors in the given mode."""
    p = mode.param
    if mode.kind == "feasible":
        if p == 0 or p == -1 or p == -2:
            raise DegenerateParameterError(f"lam = {p} makes an operation matrix singular")
        if letter == "S":
            return Mat2.of(1, 1, 0, p + 1)
        if letter == "B":
            return Mat2.of(p + 1, 0, 1, p + 2)
    else:
        if p == 0 or p == 1 or p == 2:
            raise DegenerateParameterError(f"q = {p} makes an operation matrix singular")
        if letter == "S":
            return Mat2.of(-1, 1, 0, p - 1)
        if letter == "B":
            return Mat2.of(p - 1, 0, 1, p - 2)
    raise ValueError(f"unknown letter {letter!r}")


def word_matrix(word: str, mode: VectorMode) -> Mat2:
    """Product matrix of a basic word (first letter applied first)."""
    out = Mat2.identity()
    for letter in word:
        out = op_matrix(letter, mode) * out
    return out


def apply_word_graph(word: str, start: Witness) -> Witness:
    """Apply a basic word at graph level, first letter first."""
    w = start
    for letter in word:
        if letter == "S":
            w = subdivide(w)
        elif letter == "B":
            w = add_apex(w)
        else:
            raise ValueError(f"unknown letter {letter!r}")
    return w


def predict_vector(word: str, start: Vec2, mode: VectorMode) -> Vec2:
    v = start
    for letter in word:
        v = op_matrix(letter, mode).apply(v)
    return v


def feasible_vector(w: Witness, lam, cache: ChromaticCache | None = None) -> Vec2:
    cache = cache or ChromaticCache()
    lam = Scalar.of(lam)
    return Vec2(
        z_value(contract_edge(w.graph, w.edge), lam, cache),
        z_value(delete_edge(w.graph, w.edge), lam, cache),
    )


def attainable_vector(w: Witness, q, cache: ChromaticCache | None = None) -> Vec2:
    cache = cache or ChromaticCache()
    q = Scalar.of(q)
    return Vec2(
        chromatic_poly(contract_edge(w.graph, w.edge), cache).evaluate(q),
        chromatic_poly(delete_edge(w.graph, w.edge), cache).evaluate(q),
    )


def witness_vector(w: Witness, mode: VectorMode, cache: ChromaticCache | None = None) -> Vec2:
    if mode.kind == "feasible":
        return feasible_vector(w, mode.param, cache)
    return attainable_vector(w, mode.param, cache)


def ratio(v: Vec2) -> Scalar:
    return v.ratio()


def ratio_map(word: str, mode: VectorMode) -> Mobius:
    """Moebius action on ratios induced by a basic word."""
    return Mobius.from_matrix(word_matrix(word, mode))


def sign_bridge_matrix(n: int) -> Mat2:
    """diag((-1)^(n-1), (-1)^n): attainable = bridge * feasible at lam = -q."""
    return Mat2.diagonal((-1) ** (n - 1), (-1) ** n)


def telescoped_subdivision_map(m: int, q) -> Mobius:
    """Closed form of the 2m-fold subdivision ratio map:
    r -> 1/q + (r - 1/q) / (q-1)^(2m)."""
    q = Scalar.of(q)
    if q == 0 or q == 1:
        raise DegenerateParameterError(f"q = {q} degenerate for the telescoped map")
    growth = (q - 1) ** (2 * m)
    return Mobius(Scalar.of(1), (growth - 1) / q, Scalar.of(0), growth)


def singular_third_op_matrix(lam) -> Mat2:
    """Matrix of the re-witnessing variant (witness moved to a new apex edge)."""
    lam = Scalar.of(lam)
    return Mat2.of(1, 1, lam + 1, lam + 1)


def check_singular_third_op(lam) -> bool:
    """The re-witnessing variant is always singular, so it cannot ping-pong."""
    return not singular_third_op_matrix(lam).det()
