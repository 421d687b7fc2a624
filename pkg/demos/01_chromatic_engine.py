"""Tour of the exact chromatic engine.

Everything here is exact integer/rational arithmetic: polynomials have
arbitrary-precision integer coefficients and evaluation points live in
Q or Q(sqrt(d)).
"""

from fractions import Fraction

from chromaspec import (
    ChromaticCache,
    Graph,
    Scalar,
    chromatic_poly,
    chromatic_poly_interpolated,
    contract_edge,
    count_colorings,
    delete_edge,
    z_value,
)

cache = ChromaticCache()

print("== small graphs ==")
for name, g in [("K3", Graph.complete(3)), ("P4", Graph.path(4)),
                ("C5", Graph.cycle(5)), ("K5", Graph.complete(5))]:
    print(f"P_{name}(x) = {chromatic_poly(g, cache)}")

print()
print("== deletion-contraction, step by step ==")
c4 = Graph.cycle(4)
e = (0, 1)
left = chromatic_poly(delete_edge(c4, e), cache)
right = chromatic_poly(contract_edge(c4, e), cache)
print(f"P_C4 = P_(C4 - e) - P_(C4 / e)")
print(f"     = ({left}) - ({right})")
print(f"     = {chromatic_poly(c4, cache)}")

print()
print("== two independent oracles agree ==")
g = Graph.build(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)])
poly = chromatic_poly(g, cache)
print(f"engine:        {poly}")
print(f"interpolation: {chromatic_poly_interpolated(g)}")
for k in (2, 3, 4):
    print(f"  {k} colors: engine {poly.evaluate(k)}, enumeration {count_colorings(g, k)}")

print()
print("== evaluation below zero stays meaningful ==")
k4 = Graph.complete(4)
print(f"P_K4(-1) = {chromatic_poly(k4, cache).evaluate(-1)}  (|value| = 4! acyclic orientations)")
for lam in (Fraction(1, 3), Fraction(1), Scalar.sqrt_of(5) - 1):
    print(f"sign-normalized value at lam = {lam}: {z_value(k4, lam, cache)}  (always > 0)")
