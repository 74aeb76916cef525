"""Central functions χ_{a,b,c} as polynomials in the trace coordinates.

Slots of a triple carry variables: ``a`` pairs with ``y``, ``b`` with ``x``
and ``c`` with ``z``, so that χ_{a,b,c} has leading monomial x^β y^α z^γ.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import Sequence

from .algebra import CentralExpansion, Poly3
from .combinatorics import AdmissibleTriple, binomial, cg_range, is_admissible, strand_numbers, triple

# slot (a, b, c) -> variable index in (x, y, z)
SLOT_VARIABLE = (1, 0, 2)

PERMUTATIONS = ((0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1))


def chi_rank1(n: int) -> Poly3:
    """χ^n(x) = Σ_r (-1)^r C(n-r, r) x^{n-2r}."""
    if n < 0:
        raise ValueError("rank-one label must be nonnegative")
    return Poly3({(n - 2 * r, 0, 0): (-1) ** r * binomial(n - r, r) for r in range(n // 2 + 1)})


def rank1_product_range(a: int, b: int) -> list[int]:
    """Labels c with χ^a χ^b = Σ χ^c."""
    return cg_range(a, b)


def permute_triple(sigma: Sequence[int], t) -> AdmissibleTriple:
    """σ(t) with σ(t)_i = t_{σ(i)}."""
    vals = triple(t).as_tuple()
    return AdmissibleTriple(*(vals[sigma[i]] for i in range(3)))


def _variable_map(sigma: Sequence[int]) -> tuple[int, int, int]:
    perm = [0, 0, 0]
    for i in range(3):
        perm[SLOT_VARIABLE[sigma[i]]] = SLOT_VARIABLE[i]
    return tuple(perm)


class ChiTable:
    """Memo of central functions; inserts are idempotent and guarded by a lock."""

    def __init__(self):
        self._memo: dict[tuple[int, int, int], Poly3] = {(0, 0, 0): Poly3.constant(1)}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._memo)

    def get(self, t) -> Poly3:
        key = triple(t).as_tuple()
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        value = self._compute(key)
        with self._lock:
            return self._memo.setdefault(key, value)

    def _compute(self, key: tuple[int, int, int]) -> Poly3:
        a, b, c = key
        if a + c <= b:
            # β = 0, so (a-1, b, c-1) is not admissible; a transposition into
            # slot b brings in α = c (swap a,b) or else γ = a (swap b,c)
            sigma = (1, 0, 2) if c > 0 else (0, 2, 1)
            source = permute_triple(sigma, key)
            return self.get(source).permute_variables(_variable_map(sigma))
        return self._recurrence(a, b, c)

    def _recurrence(self, a: int, b: int, c: int) -> Poly3:
        x = Poly3.var("x")
        out = x * self.get((a - 1, b, c - 1))
        if a > 1 and is_admissible(a - 2, b, c):
            out -= self.get((a - 2, b, c)) * Fraction((a + b - c) ** 2, 4 * a * (a - 1))
        if c > 1 and is_admissible(a, b, c - 2):
            out -= self.get((a, b, c - 2)) * Fraction((-a + b + c) ** 2, 4 * c * (c - 1))
        if a > 1 and c > 1 and is_admissible(a - 2, b, c - 2):
            k = Fraction((a + b + c) ** 2 * (a - b + c - 2) ** 2, 16 * a * (a - 1) * c * (c - 1))
            out -= self.get((a - 2, b, c - 2)) * k
        return out


DEFAULT_TABLE = ChiTable()


def central_function(t) -> Poly3:
    return DEFAULT_TABLE.get(t)


def apply_symmetry(sigma: Sequence[int], t) -> Poly3:
    """Polynomial of χ_{σ(t)} obtained from χ_t by substituting variables."""
    if sorted(sigma) != [0, 1, 2]:
        raise ValueError(f"not a permutation of 3 symbols: {sigma}")
    return central_function(t).permute_variables(_variable_map(sigma))


def leading_monomial(t) -> tuple[int, int, int]:
    al, be, ga, _ = strand_numbers(t)
    return (be, al, ga)


def grading(t) -> tuple[int, int]:
    a, b, _ = triple(t)
    return (a % 2, b % 2)


def monomial_grading(exps: Sequence[int]) -> tuple[int, int]:
    i, j, k = exps
    return ((i + k) % 2, (j + k) % 2)


def multiply_by_x(t) -> CentralExpansion:
    """x·χ_{a,b,c} as a combination of at most four central functions."""
    a, b, c = triple(t)
    terms = {(a + 1, b, c + 1): Fraction(1)}
    if a > 0 and is_admissible(a - 1, b, c + 1):
        terms[(a - 1, b, c + 1)] = Fraction((a + b - c) ** 2, 4 * a * (a + 1))
    if c > 0 and is_admissible(a + 1, b, c - 1):
        terms[(a + 1, b, c - 1)] = Fraction((-a + b + c) ** 2, 4 * c * (c + 1))
    if a > 0 and c > 0 and is_admissible(a - 1, b, c - 1):
        terms[(a - 1, b, c - 1)] = Fraction((a + b + c + 2) ** 2 * (a - b + c) ** 2,
                                            16 * a * (a + 1) * c * (c + 1))
    return CentralExpansion(terms)
