"""Admissible triples, strand numbers and the closed-form network values Θ and Δ."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

from .errors import DomainError, ResourceError

FACTORIAL_CAP = 256

_fact_lock = threading.Lock()
_fact_table = [1]


def factorial(n: int) -> int:
    """Memoized factorial; the table only ever grows, under a lock."""
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    if n > FACTORIAL_CAP:
        raise ResourceError(f"factorial argument {n} exceeds cap {FACTORIAL_CAP}")
    if n >= len(_fact_table):
        with _fact_lock:
            while len(_fact_table) <= n:
                _fact_table.append(_fact_table[-1] * len(_fact_table))
    return _fact_table[n]


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def is_admissible(a: int, b: int, c: int) -> bool:
    """True iff ``(-a+b+c)/2, (a-b+c)/2, (a+b-c)/2`` are all nonnegative integers."""
    if min(a, b, c) < 0 or (a + b + c) % 2:
        return False
    return a <= b + c and b <= a + c and c <= a + b


class StrandNumbers(NamedTuple):
    alpha: int
    beta: int
    gamma: int
    delta: int


@dataclass(frozen=True, order=True)
class AdmissibleTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if not is_admissible(self.a, self.b, self.c):
            raise DomainError(f"({self.a},{self.b},{self.c}) is not admissible")

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def strands(self) -> StrandNumbers:
        return strand_numbers(self)

    @property
    def degree(self) -> int:
        return (self.a + self.b + self.c) // 2

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


def triple(t) -> AdmissibleTriple:
    """Coerce a 3-sequence to an :class:`AdmissibleTriple` (raises DomainError)."""
    if isinstance(t, AdmissibleTriple):
        return t
    a, b, c = t
    return AdmissibleTriple(int(a), int(b), int(c))


def strand_numbers(t) -> StrandNumbers:
    a, b, c = triple(t)
    return StrandNumbers((-a + b + c) // 2, (a - b + c) // 2, (a + b - c) // 2, (a + b + c) // 2)


def cg_range(a: int, b: int) -> list[int]:
    """Descending list ``a+b, a+b-2, ..., |a-b|``."""
    if a < 0 or b < 0:
        raise DomainError("labels must be nonnegative")
    return list(range(a + b, abs(a - b) - 1, -2))


def theta(a, b=None, c=None) -> Fraction:
    """Θ(a,b,c) = α!β!γ!(δ+1)! / (a!b!c!)."""
    t = triple((a, b, c) if b is not None else a)
    al, be, ga, de = strand_numbers(t)
    num = factorial(al) * factorial(be) * factorial(ga) * factorial(de + 1)
    return Fraction(num, factorial(t.a) * factorial(t.b) * factorial(t.c))


def delta_dim(c: int) -> Fraction:
    """Δ(c) = c + 1, the dimension of the c-th symmetric power."""
    if c < 0:
        raise DomainError("label must be nonnegative")
    return Fraction(c + 1)


def triples_up_to(max_delta: int) -> list[AdmissibleTriple]:
    """All admissible triples with degree ≤ max_delta, ordered by (δ, a, b, c)."""
    out = []
    for d in range(max_delta + 1):
        for al in range(d + 1):
            for be in range(d - al + 1):
                ga = d - al - be
                out.append(AdmissibleTriple(be + ga, al + ga, al + be))
    out.sort(key=lambda t: (t.degree, t.a, t.b, t.c))
    return out
