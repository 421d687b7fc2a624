"""Mechanical ping-pong certificates across the whole evaluation line.

For each q outside {0, 1, 2} a regime supplies a seed, two blocks and ratio
interval(s); certification recomputes every interval image with exact
endpoint arithmetic.  A passing certificate proves distinct words give
distinct witnessed vectors, which is what drives the spectrum lower bounds.
"""

import json
from fractions import Fraction

from chromaspec import Scalar, regime_for

SWEEP = ["-3", "-1", "-1/2", "1/3", "5/4", "3/2", "79/50", "9/5", "5/2", "3",
         "4", "3/2+1/2*sqrt(5)"]

print("== regime table over the sweep ==")
for text in SWEEP:
    q = Scalar.parse(text)
    regime, cert = regime_for(q)
    blocks = f"{regime.block_k.label}={regime.block_k.word}, {regime.block_l.label}={regime.block_l.word}"
    j = f", J = {regime.interval_j}" if regime.interval_j is not None else ""
    print(f"q = {text:>16}: {regime.name:<12} seed {regime.seed_name}, {blocks}, "
          f"I = {regime.interval_i}{j}")

print()
print("== one certificate in full ==")
regime, cert = regime_for(Fraction(3, 2))
print(json.dumps(cert.to_json(), indent=2))

print()
print("== the interval geometry at q = -1 (lam = 1) ==")
regime, cert = regime_for(-1)
print(f"domain    I        = {regime.interval_i}")
print(f"subdivide image    = {cert.images_k[0]}")
print(f"apex      image    = {cert.images_l[0]}")
print("the two images are disjoint and sit inside I, so the last letter of a")
print("word can always be read off the ratio, and words decode uniquely.")
