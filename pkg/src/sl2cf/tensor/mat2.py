"""Exact 2x2 matrices and seeded unimodular samplers."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import DomainError


@dataclass(frozen=True)
class Mat2:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    det: Fraction = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        object.__setattr__(self, "det", self.a * self.d - self.b * self.c)

    @classmethod
    def of(cls, rows) -> "Mat2":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @property
    def trace(self) -> Fraction:
        return self.a + self.d

    def rows(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def inverse(self) -> "Mat2":
        if self.det == 0:
            raise DomainError("singular matrix")
        k = 1 / self.det
        return Mat2(self.d * k, -self.b * k, -self.c * k, self.a * k)

    def require_unimodular(self) -> "Mat2":
        if self.det != 1:
            raise DomainError(f"determinant is {self.det}, expected 1")
        return self


def elementary(t) -> Mat2:
    """``[[t, 1], [-1, 0]]``, unimodular with trace ``t``."""
    return Mat2(t, 1, -1, 0)


def random_rational(rng: random.Random, size: int = 5) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


def random_unimodular(rng: random.Random, factors: int = 2) -> Mat2:
    """Product of ``factors`` elementary matrices with random rational traces."""
    m = Mat2.identity()
    for _ in range(factors):
        m = m @ elementary(random_rational(rng))
    return m


def random_pairs(seed: int, count: int) -> list[tuple[Mat2, Mat2]]:
    rng = random.Random(seed)
    return [(random_unimodular(rng), random_unimodular(rng)) for _ in range(count)]
