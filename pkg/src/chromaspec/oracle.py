"""Independent anti-bug oracles for the chromatic engine.

Kept code-separate from the engine on purpose: these share no reduction
logic with it.  count_colorings enumerates assignments; the interpolation
oracle rebuilds the whole polynomial from counts at n+1 points by exact
Lagrange interpolation.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import Graph
from .polynomials import Poly

ASSIGNMENT_GUARD = 10**8


class GuardError(ValueError):
    """Enumeration size guard exceeded."""


def count_colorings(g: Graph, k: int) -> int:
    """Exact number of proper k-colorings, by assignment enumeration."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k**g.n > ASSIGNMENT_GUARD:
        raise GuardError(f"{k}^{g.n} assignments exceed the {ASSIGNMENT_GUARD} guard")
    if g.loop_flag:
        return 0
    n = g.n
    # neighbors with smaller id, so partial assignments are checked once
    earlier: list[list[int]] = [[] for _ in range(n)]
    for a, b, _ in g.edges:
        earlier[b].append(a)

    colors = [0] * n

    def walk(v: int) -> int:
        if v == n:
            return 1
        total = 0
        for c in range(k):
            if all(colors[u] != c for u in earlier[v]):
                colors[v] = c
                total += walk(v + 1)
        return total

    return walk(0)


def chromatic_poly_interpolated(g: Graph) -> Poly:
    """Chromatic polynomial via counts at k = 0..n and Lagrange interpolation."""
    n = g.n
    if g.loop_flag:
        return Poly.zero()
    points = [(0, 1 if n == 0 else 0)]
    points += [(k, count_colorings(g, k)) for k in range(1, n + 1)]
    coeffs = [Fraction(0)] * (n + 1)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            denom *= xi - xj
            shifted = [Fraction(0)] * (len(basis) + 1)
            for deg, c in enumerate(basis):
                shifted[deg] -= c * xj
                shifted[deg + 1] += c
            basis = shifted
        w = Fraction(yi) / denom
        for deg, c in enumerate(basis):
            coeffs[deg] += w * c
    assert all(c.denominator == 1 for c in coeffs), "interpolation left a fraction"
    return Poly(tuple(c.numerator for c in coeffs))
