"""Real intervals with exact endpoints and Moebius maps acting on them.

Endpoints are Scalars or None (None = the infinite end of that side, which
is always open).  Moebius images of pole-free intervals are computed exactly
from the endpoint images; this is the mechanical step behind every ping-pong
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrices import Mat2
from .scalars import Scalar


class PoleInsideIntervalError(ValueError):
    """The Moebius pole lies in the closure of the interval."""


def _fmt_end(v, closed, left):
    if v is None:
        return "(-inf" if left else "inf)"
    if left:
        return ("[" if closed else "(") + str(v)
    return str(v) + ("]" if closed else ")")


@dataclass(frozen=True, slots=True)
class Interval:
    lo: Scalar | None
    hi: Scalar | None
    lo_closed: bool
    hi_closed: bool

    def __post_init__(self):
        if self.lo is None and self.lo_closed:
            raise ValueError("-inf endpoint cannot be closed")
        if self.hi is None and self.hi_closed:
            raise ValueError("+inf endpoint cannot be closed")
        if self.lo is not None and self.hi is not None:
            c = (self.lo - self.hi).sign()
            if c > 0:
                raise ValueError(f"empty interval: lo {self.lo} > hi {self.hi}")
            if c == 0 and not (self.lo_closed and self.hi_closed):
                raise ValueError("degenerate interval must be closed on both sides")

    # -- constructors ---------------------------------------------------

    @classmethod
    def make(cls, lo, hi, lo_closed: bool, hi_closed: bool) -> Interval:
        conv = lambda v: None if v is None else Scalar.of(v)
        return cls(conv(lo), conv(hi), lo_closed, hi_closed)

    @classmethod
    def open(cls, lo, hi) -> Interval:
        return cls.make(lo, hi, False, False)

    @classmethod
    def open_closed(cls, lo, hi) -> Interval:
        return cls.make(lo, hi, False, True)

    @classmethod
    def closed_open(cls, lo, hi) -> Interval:
        return cls.make(lo, hi, True, False)

    @classmethod
    def closed(cls, lo, hi) -> Interval:
        return cls.make(lo, hi, True, True)

    @classmethod
    def below(cls, hi, closed: bool = True) -> Interval:
        """(-inf, hi] or (-inf, hi)."""
        return cls.make(None, hi, False, closed)

    @classmethod
    def above(cls, lo, closed: bool = True) -> Interval:
        """[lo, inf) or (lo, inf)."""
        return cls.make(lo, None, closed, False)

    @classmethod
    def real_line(cls) -> Interval:
        return cls.make(None, None, False, False)

    # -- membership and order --------------------------------------------

    def contains(self, value) -> bool:
        v = Scalar.of(value)
        if self.lo is not None:
            c = (v - self.lo).sign()
            if c < 0 or (c == 0 and not self.lo_closed):
                return False
        if self.hi is not None:
            c = (v - self.hi).sign()
            if c > 0 or (c == 0 and not self.hi_closed):
                return False
        return True

    def closure_contains(self, value) -> bool:
        v = Scalar.of(value)
        if self.lo is not None and (v - self.lo).sign() < 0:
            return False
        if self.hi is not None and (v - self.hi).sign() > 0:
            return False
        return True

    def is_subset(self, other: Interval) -> bool:
        if other.lo is not None:
            if self.lo is None:
                return False
            c = (self.lo - other.lo).sign()
            if c < 0 or (c == 0 and self.lo_closed and not other.lo_closed):
                return False
        if other.hi is not None:
            if self.hi is None:
                return False
            c = (self.hi - other.hi).sign()
            if c > 0 or (c == 0 and self.hi_closed and not other.hi_closed):
                return False
        return True

    def disjoint_from(self, other: Interval) -> bool:
        def separated(left: Interval, right: Interval) -> bool:
            if left.hi is None or right.lo is None:
                return False
            c = (left.hi - right.lo).sign()
            return c < 0 or (c == 0 and not (left.hi_closed and right.lo_closed))

        return separated(self, other) or separated(other, self)

    def __str__(self) -> str:
        return f"{_fmt_end(self.lo, self.lo_closed, True)}, {_fmt_end(self.hi, self.hi_closed, False)}"

    def to_json(self) -> dict:
        return {
            "lo": None if self.lo is None else str(self.lo),
            "hi": None if self.hi is None else str(self.hi),
            "lo_closed": self.lo_closed,
            "hi_closed": self.hi_closed,
        }


@dataclass(frozen=True, slots=True)
class Mobius:
    """r -> (a*r + b) / (c*r + d), with nonzero determinant."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self):
        if not self.det():
            raise ValueError("singular Moebius map")

    @classmethod
    def of(cls, a, b, c, d) -> Mobius:
        return cls(Scalar.of(a), Scalar.of(b), Scalar.of(c), Scalar.of(d))

    @classmethod
    def from_matrix(cls, m: Mat2) -> Mobius:
        return cls(m.a, m.b, m.c, m.d)

    @classmethod
    def identity(cls) -> Mobius:
        return cls.of(1, 0, 0, 1)

    def det(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def pole(self) -> Scalar | None:
        if not self.c:
            return None
        return -self.d / self.c

    def apply(self, value) -> Scalar:
        r = Scalar.of(value)
        den = self.c * r + self.d
        if not den:
            raise ZeroDivisionError(f"Moebius pole hit at r = {r}")
        return (self.a * r + self.b) / den

    def proportional_to(self, other: Mobius) -> bool:
        """Equality as maps: coefficient 4-tuples proportional."""
        u = (self.a, self.b, self.c, self.d)
        v = (other.a, other.b, other.c, other.d)
        for i in range(4):
            for j in range(i + 1, 4):
                if (u[i] * v[j] - u[j] * v[i]):
                    return False
        return True

    def image(self, iv: Interval) -> Interval:
        """Exact image of a pole-free interval.

        Openness propagates pointwise; the image of an infinite endpoint is
        always open (the limit value a/c is approached, never attained).
        """
        increasing = self.det().sign() > 0
        if not self.c:
            # affine map; infinite ends stay infinite
            def end(v, closed):
                return (None, False) if v is None else (self.apply(v), closed)
        else:
            p = self.pole()
            if iv.closure_contains(p):
                raise PoleInsideIntervalError(
                    f"pole {p} lies in the closure of {iv}"
                )
            lim = self.a / self.c

            def end(v, closed):
                return (lim, False) if v is None else (self.apply(v), closed)

        lo_img = end(iv.lo, iv.lo_closed)
        hi_img = end(iv.hi, iv.hi_closed)
        if not increasing:
            lo_img, hi_img = hi_img, lo_img
        return Interval(lo_img[0], hi_img[0], lo_img[1], hi_img[1])

    def __str__(self) -> str:
        return f"r -> ({self.a}*r + {self.b})/({self.c}*r + {self.d})"


def mobius_image(f: Mobius, iv: Interval) -> Interval:
    return f.image(iv)
