"""Exact arithmetic in Q and in real quadratic fields Q(sqrt(d)).

A Scalar is a + b*sqrt(d) with rational a, b and a square-free d >= 0.
All arithmetic, sign determination and comparison are exact; no floating
point is used anywhere.  Values are kept in a canonical reduced form so
that equality (and hashing) is structural.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class MixedRadicandError(ValueError):
    """Arithmetic between two distinct irrational radicands was requested."""


class ScalarParseError(ValueError):
    """Text did not match the scalar format."""


def _squarefree_split(d: int) -> tuple[int, int]:
    """Return (s, r) with d = s*s*r and r square-free."""
    s, r, f = 1, 1, 2
    while f * f <= d:
        e = 0
        while d % f == 0:
            d //= f
            e += 1
        s *= f ** (e // 2)
        if e % 2:
            r *= f
        f += 1
    return s, r * d


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_QUADRATIC_RE = re.compile(
    r"^(?:(?P<rat>[+-]?\d+(?:/\d+)?)(?=[+-]))?"  # rational part only before a signed radical
    r"(?P<sign>[+-])?"
    r"(?:(?P<coef>\d+(?:/\d+)?)\*)?"
    r"sqrt\((?P<d>\d+)\)$"
)


@dataclass(frozen=True, slots=True)
class Scalar:
    """Element a + b*sqrt(d) of Q(sqrt(d)), canonicalized on construction.

    Canonical form: fractions reduced (Fraction does this), d square-free,
    and d = 0 whenever b = 0 -- so structural equality is value equality.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        if isinstance(self.a, float) or isinstance(self.b, float):
            raise TypeError("floats are never accepted; pass Fraction or int")
        a = Fraction(self.a)
        b = Fraction(self.b)
        d = self.d
        if d < 0:
            raise ValueError(f"negative radicand {d}")
        if d == 0:
            b = Fraction(0)  # b*sqrt(0) contributes nothing
        elif b == 0:
            d = 0
        else:
            s, r = _squarefree_split(d)
            b *= s
            d = r
            if d == 1:
                a += b
                b = Fraction(0)
                d = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    # -- construction -------------------------------------------------

    @classmethod
    def of(cls, value) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        raise TypeError(f"cannot make a Scalar from {type(value).__name__}")

    @classmethod
    def sqrt_of(cls, d: int, coefficient=1) -> Scalar:
        return cls(Fraction(0), Fraction(coefficient), d)

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Parse the canonical text format, e.g. '3/2', '-1', '3/2+1/2*sqrt(5)'."""
        s = text.strip()
        if not s:
            raise ScalarParseError("empty scalar text")
        if _RATIONAL_RE.match(s):
            return cls(Fraction(s))
        m = _QUADRATIC_RE.match(s)
        if not m:
            raise ScalarParseError(f"bad scalar text: {text!r}")
        rat = m.group("rat")
        sign = m.group("sign")
        coef = m.group("coef")
        a = Fraction(rat) if rat is not None else Fraction(0)
        b = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            b = -b
        return cls(a, b, int(m.group("d")))

    # -- structure ----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def as_int(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return f.numerator

    def _join_d(self, other: Scalar) -> int:
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise MixedRadicandError(f"sqrt({self.d}) vs sqrt({other.d})")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> Scalar:
        o = Scalar.of(other)
        d = self._join_d(o)
        return Scalar(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(-self.a, -self.b, self.d)

    def __sub__(self, other) -> Scalar:
        return self + (-Scalar.of(other))

    def __rsub__(self, other) -> Scalar:
        return Scalar.of(other) - self

    def __mul__(self, other) -> Scalar:
        o = Scalar.of(other)
        d = self._join_d(o)
        return Scalar(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        if self.b == 0:
            if self.a == 0:
                raise ZeroDivisionError("inverse of 0")
            return Scalar(1 / self.a)
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of 0")
        return Scalar(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other) -> Scalar:
        return self * Scalar.of(other).inverse()

    def __rtruediv__(self, other) -> Scalar:
        return Scalar.of(other) * self.inverse()

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar(Fraction(1))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __abs__(self) -> Scalar:
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        # rationals hash like their Fraction so Scalar(2) == 2 stays coherent
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    # -- exact order --------------------------------------------------

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d), by case analysis (never floats)."""
        if self.b == 0:
            return -1 if self.a < 0 else (1 if self.a > 0 else 0)
        if self.a == 0:
            return -1 if self.b < 0 else 1
        sa = 1 if self.a > 0 else -1
        sb = 1 if self.b > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: |a| vs |b|*sqrt(d) decided by squaring
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        if lhs == rhs:
            return 0  # unreachable for square-free d >= 2, kept for safety
        return sa if lhs > rhs else sb

    def _cmp(self, other) -> int:
        return (self - Scalar.of(other)).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- presentation -------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        mag = abs(self.b)
        rad = f"sqrt({self.d})" if mag == 1 else f"{mag}*sqrt({self.d})"
        if self.a == 0:
            return rad if self.b > 0 else f"-{rad}"
        return f"{self.a}{'+' if self.b > 0 else '-'}{rad}"

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.d ** 0.5


ZERO = Scalar(Fraction(0))
ONE = Scalar(Fraction(1))


def scalar_cmp(a, b) -> int:
    """Exact trichotomy: -1, 0 or 1 as a <, =, > b."""
    return Scalar.of(a)._cmp(b)


def falling_factorial(s, m: int) -> Scalar:
    """s(s-1)...(s-m+1); the empty product (m = 0) is 1."""
    if m < 0:
        raise ValueError("negative length")
    s = Scalar.of(s)
    out = ONE
    for i in range(m):
        out = out * (s - i)
    return out
