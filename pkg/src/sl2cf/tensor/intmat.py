"""Exact integer matrices backed by numpy.

Arrays are int64 whenever every entry provably fits, and Python-int object
arrays otherwise.  All helpers return a new array and never mutate inputs.
"""
from __future__ import annotations

from functools import reduce
from math import gcd

import numpy as np

_LIMIT = 1 << 62


def max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(abs(int(a.max())), abs(int(a.min()))))


def shrink(a: np.ndarray) -> np.ndarray:
    """Downcast an object array to int64 when all entries fit."""
    if a.dtype == object and max_abs(a) < _LIMIT:
        return a.astype(np.int64)
    return a


def as_object(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    inner = a.shape[-1] if a.ndim else 1
    if a.dtype != object and b.dtype != object and max_abs(a) * max_abs(b) * max(inner, 1) < _LIMIT:
        return a @ b
    return shrink(as_object(a) @ as_object(b))


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object and max_abs(a) * max_abs(b) < _LIMIT:
        return np.kron(a, b)
    return shrink(np.kron(as_object(a), as_object(b)))


def scale(a: np.ndarray, k: int) -> np.ndarray:
    if a.dtype != object and max_abs(a) * abs(k) < _LIMIT:
        return a * k
    return shrink(as_object(a) * k)


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.dtype != object and b.dtype != object and max_abs(a) + max_abs(b) < _LIMIT:
        return a + b
    return shrink(as_object(a) + as_object(b))


def tensordot(a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
    if a.dtype != object and b.dtype != object:
        sa = [a.shape[i] for i in np.atleast_1d(axes[0])]
        inner = int(np.prod(sa)) if sa else 1
        if max_abs(a) * max_abs(b) * max(inner, 1) < _LIMIT:
            return np.tensordot(a, b, axes)
    return shrink(np.tensordot(as_object(a), as_object(b), axes))


def content(a: np.ndarray) -> int:
    """gcd of all entries (0 for the zero array)."""
    if a.size == 0:
        return 0
    if a.dtype != object:
        return int(np.gcd.reduce(np.abs(a).ravel()))
    return reduce(gcd, (int(v) for v in a.ravel()), 0)


def exact_div(a: np.ndarray, k: int) -> np.ndarray:
    if a.dtype != object:
        return a // k
    return shrink(a // k)
