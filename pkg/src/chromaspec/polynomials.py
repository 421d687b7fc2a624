"""Integer-coefficient polynomials, dense, indexed by degree.

Chromatic polynomials live here: coefficient k is the coefficient of x^k,
stored as arbitrary-precision ints with trailing zeros trimmed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import Scalar


def _trim(coeffs) -> tuple[int, ...]:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True, slots=True)
class Poly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def zero(cls) -> Poly:
        return cls(())

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def x_power(cls, k: int) -> Poly:
        return cls((0,) * k + (1,))

    @classmethod
    def x_minus(cls, c: int) -> Poly:
        return cls((-c, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return Poly(out)

    __rmul__ = __mul__

    def evaluate(self, point) -> Scalar:
        """Exact Horner evaluation at a Scalar (or int/Fraction) point."""
        s = Scalar.of(point)
        acc = Scalar.of(0)
        for c in reversed(self.coeffs):
            acc = acc * s + c
        return acc

    def shift_argument(self, m: int) -> Poly:
        """The polynomial p(x - m)."""
        acc = Poly.zero()
        xm = Poly((-m, 1))
        for c in reversed(self.coeffs):
            acc = acc * xm + Poly((c,))
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{k}" if mag == 1 else f"{mag}*x^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def poly_eval(p: Poly, point) -> Scalar:
    return p.evaluate(point)


def falling_factorial_poly(m: int) -> Poly:
    """x(x-1)...(x-m+1) as a polynomial; equals 1 for m = 0."""
    out = Poly.one()
    for i in range(m):
        out = out * Poly.x_minus(i)
    return out
