"""The number system everything else stands on.

Scalars are elements of Q or of one real quadratic field Q(sqrt(d)).
Comparisons are decided by exact case analysis (sign patterns plus a
squaring rule), so interval membership and certificate checks can never
suffer rounding error.
"""

from fractions import Fraction

from chromaspec import Interval, Mobius, Scalar, falling_factorial, scalar_cmp

print("== parsing and printing ==")
for text in ("-1", "3/2", "sqrt(5)", "3/2+1/2*sqrt(5)", "2-sqrt(2)"):
    s = Scalar.parse(text)
    print(f"{text:>18} -> {s}  (~ {float(s):.6f})")

print()
print("== exact comparison, no floats involved ==")
phi_sq = Scalar.parse("3/2+1/2*sqrt(5)")
print(f"sqrt(5) vs 9/4: {scalar_cmp(Scalar.sqrt_of(5), Fraction(9, 4))}  (squares: 5 vs 81/16)")
print(f"(3+sqrt(5))/2 squared is {phi_sq * phi_sq}, golden-ratio style: x^2 = 3x - 1 here,")
print(f"check: 3x - 1 = {3 * phi_sq - 1}")

print()
print("== falling factorials at awkward points ==")
for point, m in ((5, 3), (Fraction(3, 2), 2), (2, 3)):
    print(f"({point})_{m} = {falling_factorial(point, m)}")

print()
print("== interval images under an exact Moebius map ==")
f = Mobius.of(1, 1, 0, 2)  # r -> (r + 1)/2
iv = Interval.open_closed(0, 1)
print(f"map {f} sends {iv} to {f.image(iv)}")
g = Mobius.of(0, 2, -2, 5)  # r -> 2/(5 - 2r), pole at 5/2
half_line = Interval.below(Fraction(1, 2), closed=True)
print(f"map {g} sends {half_line} to {g.image(half_line)}")
print("(the infinite end maps to an open endpoint at the limit value)")
