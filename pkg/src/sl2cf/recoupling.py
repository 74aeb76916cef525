"""6j-symbols: exact extraction from trivalent trees plus the closed special families."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import is_admissible, theta
from .errors import DomainError
from .tensor import thick
from .tensor.diagrams import fused_diagram, h_diagram
from .tensor.network import NetworkMap


@dataclass(frozen=True, order=True)
class SixJKey:
    """Arguments of the symbol ``{a b c; d e f}``.

    ``e`` is the inner edge of the right tree (``d -> a, e``; ``e -> b, c``)
    and ``f`` the inner edge of the left tree (``d -> f, c``; ``f -> a, b``).
    """

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int

    def __post_init__(self):
        for t in self.triples():
            if not is_admissible(*t):
                raise DomainError(f"6j key {self.as_tuple()} needs admissible {t}")

    def triples(self) -> tuple[tuple[int, int, int], ...]:
        a, b, c, d, e, f = self.as_tuple()
        return ((b, c, e), (a, e, d), (a, b, f), (f, c, d))

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def __str__(self) -> str:
        return "{%d %d %d; %d %d %d}" % self.as_tuple()


def key_of(k) -> SixJKey:
    return k if isinstance(k, SixJKey) else SixJKey(*(int(v) for v in k))


_cache: dict[SixJKey, Fraction] = {}
_cache_lock = threading.Lock()


def _extract(k: SixJKey) -> Fraction:
    a, b, c, d, e, f = k.as_tuple()
    right = thick.compose(thick.tensor(thick.ThickMap.identity(a), thick.vertex(b, c, e)), thick.vertex(a, e, d))
    left = thick.compose(thick.tensor(thick.vertex(a, b, f), thick.ThickMap.identity(c)), thick.vertex(f, c, d))
    # bubble identity: pairing with the dual left tree isolates the f coefficient
    pairing = thick.trace(thick.compose(left.transpose(), right))
    return pairing * (f + 1) / (theta(a, b, f) * theta(f, c, d))


def sixj_general(key) -> Fraction:
    """Coefficient of the ``f`` left tree in the right tree with inner edge ``e``."""
    k = key_of(key)
    hit = _cache.get(k)
    if hit is not None:
        return hit
    value = _extract(k)
    with _cache_lock:
        return _cache.setdefault(k, value)


def primed_sign(key) -> int:
    a, b, c, d, e, f = key_of(key).as_tuple()
    return -1 if (b + d - e - f) // 2 % 2 else 1


def sixj_primed(key) -> Fraction:
    """Coefficient of the fused diagram through ``f`` in the H diagram through ``e``."""
    return primed_sign(key) * sixj_general(key)


def cache_size() -> int:
    return len(_cache)


def special_key(a: int, b: int, c: int, c_shift: int, a_shift: int) -> SixJKey:
    if c_shift not in (1, -1) or a_shift not in (1, -1):
        raise DomainError("shifts must be +1 or -1")
    if not is_admissible(a, b, c):
        raise DomainError(f"({a},{b},{c}) is not admissible")
    return SixJKey(1, a, b, c + c_shift, c, a + a_shift)


def sixj_special(a: int, b: int, c: int, c_shift: int, a_shift: int) -> Fraction:
    """Closed forms of ``{1 a b; c±1 c a±1}``."""
    special_key(a, b, c, c_shift, a_shift)
    if c_shift == 1 and a_shift == 1:
        return Fraction(1)
    if c_shift == 1:
        return (-1) ** ((a - b + c + 2) // 2) * Fraction(a + b - c, 2 * (a + 1))
    if a_shift == 1:
        return (-1) ** ((a - b + c) // 2) * Fraction(-a + b + c, 2 * c)
    return Fraction((a + b + c + 2) * (a - b + c), 4 * (a + 1) * c)


def recoupling_1abc(e_shift: int, a: int, b: int, c: int) -> list[tuple[Fraction, int]]:
    """Expansion of the H diagram ``(1, a, b, c; e = c+e_shift)`` over fused diagrams ``f = a±1``.

    Returns ``[(coefficient, f), ...]``; targets whose triples are not
    admissible are left out.
    """
    if e_shift not in (1, -1):
        raise DomainError("e_shift must be +1 or -1")
    if (a + b + c) % 2 == 0 or min(a, b, c) < 0:
        raise DomainError(f"(1+a+b+c) must be even with nonnegative labels, got ({a},{b},{c})")
    e = c + e_shift
    if not (is_admissible(1, e, c) and is_admissible(e, b, a)):
        raise DomainError(f"H diagram (1,{a},{b},{c}; {e}) is not admissible")
    i = (a + 1 - b + c) // 2
    sign = (-1) ** i
    if e_shift == -1:
        coeffs = {a + 1: Fraction(1), a - 1: -sign * Fraction(a + b - c + 1, 2 * (a + 1))}
    else:
        coeffs = {a + 1: sign * Fraction(-a + b + c + 1, 2 * (c + 1)),
                  a - 1: Fraction((a + b + c + 3) * (a - b + c + 1), 4 * (a + 1) * (c + 1))}
    return [(v, f) for f, v in coeffs.items() if f >= 0 and is_admissible(1, a, f) and is_admissible(c, b, f)]


def _kink_sign(a: int, b: int, c: int) -> int:
    # i - 1 kinks, i = strands joining a+1 to c in the (c, b, a+1) vertex
    i = (a + 1 - b + c) // 2
    return -1 if (i - 1) % 2 else 1


def kinked_h(a: int, b: int, c: int, e: int) -> NetworkMap:
    """H diagram of the ``(1, a, b, c)`` recoupling as drawn by the symmetrizer recurrence:
    the ``e = c+1`` diagram carries the recurrence's ``i-1`` kinks."""
    h = h_diagram(1, a, b, c, e)
    return h * _kink_sign(a, b, c) if e == c + 1 else h


def kinked_fused(a: int, b: int, c: int, f: int) -> NetworkMap:
    """Fused diagram of the ``(1, a, b, c)`` recoupling; ``f = a-1`` carries the ``i-1`` kinks."""
    g = fused_diagram(1, a, b, c, f)
    return g * _kink_sign(a, b, c) if f == a - 1 else g
