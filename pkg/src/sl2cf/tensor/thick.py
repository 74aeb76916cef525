"""Spin networks with thick (symmetrized) edges in the weight basis.

A map between tensor products of ``Sym^n V`` is stored by its *reduced* form:
summing the dense matrix over weight classes (number of ``e2`` factors) on
every leg.  With ``W_n`` the ``2^n x (n+1)`` weight indicator and
``D_n = diag(1/C(n,k))`` one has ``S_n = W_n D_n W_nᵀ``, so

* composing along a leg of label ``n`` inserts ``D_n``,
* the identity of leg ``n`` reduces to ``diag(C(n,k))``,
* closing a leg is a trace weighted by ``D_n``.

Reduced arrays hold exact :class:`fractions.Fraction` entries.  Dimensions are
``n+1`` per leg instead of ``2^n``, which is what makes degree-5 oracle checks
and the 6j extraction cheap.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from ..combinatorics import is_admissible, strand_numbers
from ..errors import DomainError, ResourceError
from .mat2 import Mat2
from .network import NetworkMap, weight

MAX_LABEL = 64


def set_label_cap(n: int) -> None:
    global MAX_LABEL
    MAX_LABEL = n


def _check_labels(labels: Sequence[int]) -> None:
    for n in labels:
        if n < 0:
            raise DomainError("labels must be nonnegative")
        if n > MAX_LABEL:
            raise ResourceError(f"label {n} exceeds the thick-edge cap of {MAX_LABEL}")


def _frac_array(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(Fraction(0))
    return arr


@lru_cache(maxsize=None)
def _inv_binomials(n: int) -> np.ndarray:
    out = np.empty(n + 1, dtype=object)
    out[:] = [Fraction(1, comb(n, k)) for k in range(n + 1)]
    return out


def _scale_axis(arr: np.ndarray, axis: int, weights: np.ndarray) -> np.ndarray:
    shape = [1] * arr.ndim
    shape[axis] = len(weights)
    return arr * weights.reshape(shape)


class ThickMap:
    """Reduced map ``⊗ Sym^{ins} -> ⊗ Sym^{outs}``; array axes are outs then ins."""

    __slots__ = ("outs", "ins", "arr")

    def __init__(self, outs: Sequence[int], ins: Sequence[int], arr: np.ndarray):
        self.outs = tuple(outs)
        self.ins = tuple(ins)
        _check_labels(self.outs + self.ins)
        expected = tuple(n + 1 for n in self.outs + self.ins)
        if arr.shape != expected:
            raise DomainError(f"reduced array shape {arr.shape} does not match legs {expected}")
        self.arr = arr

    @classmethod
    def identity(cls, n: int) -> "ThickMap":
        arr = _frac_array((n + 1, n + 1))
        for k in range(n + 1):
            arr[k, k] = Fraction(comb(n, k))
        return cls((n,), (n,), arr)

    @classmethod
    def scalar(cls, value) -> "ThickMap":
        arr = np.empty((), dtype=object)
        arr[()] = Fraction(value)
        return cls((), (), arr)

    def transpose(self) -> "ThickMap":
        k = len(self.outs)
        axes = list(range(k, self.arr.ndim)) + list(range(k))
        return ThickMap(self.ins, self.outs, self.arr.transpose(axes))

    def __mul__(self, factor) -> "ThickMap":
        return ThickMap(self.outs, self.ins, self.arr * Fraction(factor))

    __rmul__ = __mul__

    def __add__(self, other: "ThickMap") -> "ThickMap":
        if (self.outs, self.ins) != (other.outs, other.ins):
            raise DomainError("cannot add maps with different legs")
        return ThickMap(self.outs, self.ins, self.arr + other.arr)

    def __sub__(self, other: "ThickMap") -> "ThickMap":
        return self + other * -1

    def __eq__(self, other):
        if not isinstance(other, ThickMap):
            return NotImplemented
        return (self.outs, self.ins) == (other.outs, other.ins) and bool(np.all(self.arr == other.arr))

    def scalar_value(self) -> Fraction:
        if self.outs or self.ins:
            raise DomainError("map is not closed")
        return Fraction(self.arr[()])

    def __repr__(self) -> str:
        return f"ThickMap({self.ins}->{self.outs})"


def compose(f: ThickMap, g: ThickMap) -> ThickMap:
    """``f ∘ g``."""
    if f.ins != g.outs:
        raise DomainError(f"cannot compose: legs {g.outs} feed {f.ins}")
    k = len(g.outs)
    garr = g.arr
    for axis, n in enumerate(g.outs):
        garr = _scale_axis(garr, axis, _inv_binomials(n))
    fo = len(f.outs)
    arr = np.tensordot(f.arr, garr, axes=(list(range(fo, fo + k)), list(range(k))))
    return ThickMap(f.outs, g.ins, arr)


def compose_all(*maps: ThickMap) -> ThickMap:
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def tensor(f: ThickMap, g: ThickMap) -> ThickMap:
    arr = np.multiply.outer(f.arr, g.arr)
    fo, fi, go = len(f.outs), len(f.ins), len(g.outs)
    order = (list(range(fo)) + list(range(fo + fi, fo + fi + go))
             + list(range(fo, fo + fi)) + list(range(fo + fi + go, arr.ndim)))
    return ThickMap(f.outs + g.outs, f.ins + g.ins, arr.transpose(order))


def tensor_all(maps: Sequence[ThickMap]) -> ThickMap:
    out = ThickMap.scalar(1)
    for m in maps:
        out = tensor(out, m)
    return out


def trace(f: ThickMap) -> Fraction:
    """Close every output leg onto the matching input leg."""
    if f.outs != f.ins:
        raise DomainError("trace needs an endomorphism")
    arr = f.arr
    k = len(f.outs)
    for axis, n in enumerate(f.outs):
        arr = _scale_axis(arr, axis, _inv_binomials(n))
    for _ in range(k):
        arr = np.trace(arr, axis1=0, axis2=arr.ndim // 2)
    return Fraction(arr[()] if isinstance(arr, np.ndarray) else arr)


# vertices and matrix insertions

@lru_cache(maxsize=4096)
def _vertex_array(a: int, b: int, c: int) -> np.ndarray:
    al, be, ga, _ = strand_numbers((a, b, c))
    arr = _frac_array((a + 1, b + 1, c + 1))
    for w1 in range(be + 1):
        for w2 in range(al + 1):
            base = comb(be, w1) * comb(al, w2)
            for m in range(ga + 1):
                v = base * comb(ga, m) * (-1) ** m
                arr[w1 + m, w2 + ga - m, w1 + w2] += v
    arr.setflags(write=False)
    return arr


def vertex(a: int, b: int, c: int) -> ThickMap:
    """Reduced Clebsch-Gordan injection ``V_c -> V_a ⊗ V_b``."""
    if not is_admissible(a, b, c):
        raise DomainError(f"({a},{b},{c}) is not admissible")
    _check_labels((a, b, c))
    return ThickMap((a, b), (c,), _vertex_array(a, b, c).copy())


def covertex(a: int, b: int, c: int) -> ThickMap:
    """Reduced projection ``V_a ⊗ V_b -> V_c``."""
    return vertex(a, b, c).transpose()


def _poly_pow(p: list, n: int) -> list:
    out = [Fraction(1)]
    for _ in range(n):
        nxt = [Fraction(0)] * (len(out) + len(p) - 1)
        for i, u in enumerate(out):
            if u:
                for j, v in enumerate(p):
                    nxt[i + j] += u * v
        out = nxt
    return out


def _poly_mul(p: list, q: list) -> list:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, u in enumerate(p):
        for j, v in enumerate(q):
            out[i + j] += u * v
    return out


@lru_cache(maxsize=4096)
def _strand_array(x: Mat2, n: int) -> np.ndarray:
    # X e1 = a e1 + c e2 and X e2 = b e1 + d e2; powers of e2 index the weight
    col1 = [x.a, x.c]
    col2 = [x.b, x.d]
    arr = _frac_array((n + 1, n + 1))
    for k in range(n + 1):
        m = _poly_mul(_poly_pow(col1, n - k), _poly_pow(col2, k))
        for i, v in enumerate(m):
            arr[i, k] = comb(n, k) * v
    arr.setflags(write=False)
    return arr


def strand(x: Mat2, n: int) -> ThickMap:
    """``X^{⊗n}`` acting on ``V_n``, reduced."""
    _check_labels((n,))
    return ThickMap((n,), (n,), _strand_array(x, n).copy())


def central_function_numeric(t, x1: Mat2, x2: Mat2) -> Fraction:
    """``tr(ι* ∘ (X1-action ⊗ X2-action) ∘ ι)`` on ``V_c`` for unimodular ``X1, X2``."""
    x1.require_unimodular()
    x2.require_unimodular()
    a, b, c = t
    v = vertex(a, b, c)
    middle = tensor(strand(x1, a), strand(x2, b))
    return trace(compose_all(v.transpose(), middle, v))


def theta_value(a: int, b: int, c: int) -> Fraction:
    v = vertex(a, b, c)
    return trace(compose(v.transpose(), v))


# conversion to and from the dense engine

def _weight_matrix(labels: Sequence[int]) -> np.ndarray:
    """Indicator of ``V^{⊗Σn}`` basis vectors against the product weight basis."""
    total = sum(labels)
    rows = 1 << total
    dims = [n + 1 for n in labels]
    out = np.zeros((rows, int(np.prod(dims)) if dims else 1), dtype=np.int64)
    for idx in range(rows):
        shift = total
        col = 0
        for n in labels:
            shift -= n
            w = weight((idx >> shift) & ((1 << n) - 1))
            col = col * (n + 1) + w
        out[idx, col] = 1
    return out


def from_network(net: NetworkMap, outs: Sequence[int], ins: Sequence[int]) -> ThickMap:
    """Reduce a dense map whose legs are the given symmetrized bands."""
    if sum(outs) != net.outputs or sum(ins) != net.inputs:
        raise DomainError("leg labels do not cover the map's strands")
    wo = _weight_matrix(outs).astype(object)
    wi = _weight_matrix(ins).astype(object)
    red = wo.T.dot(net.num.astype(object)).dot(wi)
    arr = np.vectorize(lambda v: Fraction(int(v), net.den), otypes=[object])(red)
    shape = tuple(n + 1 for n in list(outs) + list(ins))
    return ThickMap(outs, ins, arr.reshape(shape))


def to_network(f: ThickMap) -> NetworkMap:
    """Expand to the dense ``S ∘ F ∘ S`` map."""
    wo = _weight_matrix(f.outs).astype(object)
    wi = _weight_matrix(f.ins).astype(object)
    arr = f.arr
    for axis, n in enumerate(f.outs + f.ins):
        arr = _scale_axis(arr, axis, _inv_binomials(n))
    mo = int(np.prod([n + 1 for n in f.outs])) if f.outs else 1
    mi = int(np.prod([n + 1 for n in f.ins])) if f.ins else 1
    dense = wo.dot(np.asarray(arr).reshape(mo, mi)).dot(wi.T)
    return NetworkMap.from_rows(sum(f.ins), sum(f.outs), dense.tolist())
