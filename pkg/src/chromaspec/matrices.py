"""Exact 2-vectors and 2x2 matrices over Scalar."""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import Scalar


@dataclass(frozen=True, slots=True)
class Vec2:
    x: Scalar
    y: Scalar

    @classmethod
    def of(cls, x, y) -> Vec2:
        return cls(Scalar.of(x), Scalar.of(y))

    def scale(self, s) -> Vec2:
        s = Scalar.of(s)
        return Vec2(self.x * s, self.y * s)

    def ratio(self) -> Scalar:
        if not self.y:
            raise ZeroDivisionError("ratio of a vector with zero second entry")
        return self.x / self.y

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True, slots=True)
class Mat2:
    """Row-major [[a, b], [c, d]]."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    @classmethod
    def of(cls, a, b, c, d) -> Mat2:
        return cls(Scalar.of(a), Scalar.of(b), Scalar.of(c), Scalar.of(d))

    @classmethod
    def identity(cls) -> Mat2:
        return cls.of(1, 0, 0, 1)

    @classmethod
    def diagonal(cls, p, q) -> Mat2:
        return cls.of(p, 0, 0, q)

    def det(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, k: int) -> Mat2:
        if k < 0:
            raise ValueError("negative matrix power")
        out = Mat2.identity()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def apply(self, v: Vec2) -> Vec2:
        return Vec2(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)

    def entries(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"
