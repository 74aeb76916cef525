"""Dense exact spin-network maps ``V^{⊗k_in} -> V^{⊗k_out}`` with ``V = C^2``.

Basis convention: ``e1 -> 0``, ``e2 -> 1``; a basis tensor of ``V^{⊗n}`` is
indexed big-endian (first tensor factor is the most significant bit), which
matches ``numpy.kron``.  Under the extrema-ciliation convention every cup is
``1 -> e1⊗e2 - e2⊗e1`` and every cap is ``v⊗w -> det[v w]``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb, factorial, gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from ..errors import DomainError, ResourceError
from . import intmat

MAX_STRANDS = 16


def set_strand_cap(n: int) -> None:
    global MAX_STRANDS
    if n < 1:
        raise ValueError("strand cap must be positive")
    MAX_STRANDS = n


def check_strands(*counts: int) -> None:
    for k in counts:
        if k > MAX_STRANDS:
            raise ResourceError(f"{k} strands exceeds the cap of {MAX_STRANDS}")


class NetworkMap:
    """Exact ``2^k_out x 2^k_in`` matrix stored as ``num / den``."""

    __slots__ = ("inputs", "outputs", "num", "den")

    def __init__(self, inputs: int, outputs: int, num: np.ndarray, den: int = 1):
        check_strands(inputs, outputs)
        if num.shape != (1 << outputs, 1 << inputs):
            raise DomainError(f"matrix shape {num.shape} does not match arity {inputs}->{outputs}")
        if den <= 0:
            raise DomainError("denominator must be positive")
        g = gcd(intmat.content(num), den)
        if g > 1:
            num, den = intmat.exact_div(num, g), den // g
        if intmat.content(num) == 0:
            den = 1
        self.inputs = inputs
        self.outputs = outputs
        self.num = num
        self.den = den

    @classmethod
    def from_rows(cls, inputs: int, outputs: int, rows: Sequence[Sequence]) -> "NetworkMap":
        fr = [[Fraction(v) for v in row] for row in rows]
        d = lcm(*(v.denominator for row in fr for v in row)) if fr and fr[0] else 1
        num = np.array([[int(v * d) for v in row] for row in fr], dtype=object)
        return cls(inputs, outputs, intmat.shrink(num.reshape(1 << outputs, 1 << inputs)), d)

    @classmethod
    def scalar(cls, value) -> "NetworkMap":
        return cls.from_rows(0, 0, [[value]])

    @classmethod
    def zero(cls, inputs: int, outputs: int) -> "NetworkMap":
        return cls(inputs, outputs, np.zeros((1 << outputs, 1 << inputs), dtype=np.int64))

    @classmethod
    def identity(cls, n: int = 1) -> "NetworkMap":
        check_strands(n)
        return cls(n, n, np.eye(1 << n, dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    def entry(self, row: int, col: int) -> Fraction:
        return Fraction(int(self.num[row, col]), self.den)

    def to_fractions(self) -> np.ndarray:
        out = np.empty(self.num.shape, dtype=object)
        for idx, v in np.ndenumerate(self.num):
            out[idx] = Fraction(int(v), self.den)
        return out

    def apply(self, vector: Sequence) -> list[Fraction]:
        """Image of a coordinate vector of ``V^{⊗inputs}``."""
        v = [Fraction(x) for x in vector]
        if len(v) != self.num.shape[1]:
            raise DomainError("vector length does not match inputs")
        return [sum((Fraction(int(self.num[i, j]), self.den) * v[j] for j in range(len(v))), Fraction(0))
                for i in range(self.num.shape[0])]

    def is_zero(self) -> bool:
        return intmat.content(self.num) == 0

    def __eq__(self, other):
        if not isinstance(other, NetworkMap):
            return NotImplemented
        if (self.inputs, self.outputs) != (other.inputs, other.outputs):
            return False
        return np.array_equal(intmat.scale(self.num, other.den), intmat.scale(other.num, self.den))

    __hash__ = None

    def __add__(self, other: "NetworkMap") -> "NetworkMap":
        if (self.inputs, self.outputs) != (other.inputs, other.outputs):
            raise DomainError("cannot add maps of different arity")
        d = lcm(self.den, other.den)
        num = intmat.add(intmat.scale(self.num, d // self.den), intmat.scale(other.num, d // other.den))
        return NetworkMap(self.inputs, self.outputs, num, d)

    def __neg__(self) -> "NetworkMap":
        return NetworkMap(self.inputs, self.outputs, intmat.scale(self.num, -1), self.den)

    def __sub__(self, other: "NetworkMap") -> "NetworkMap":
        return self + (-other)

    def __mul__(self, factor) -> "NetworkMap":
        q = Fraction(factor)
        return NetworkMap(self.inputs, self.outputs, intmat.scale(self.num, q.numerator), self.den * q.denominator)

    __rmul__ = __mul__

    def __matmul__(self, other: "NetworkMap") -> "NetworkMap":
        return compose(self, other)

    def transpose(self) -> "NetworkMap":
        """Dual map with respect to the standard inner product (vertical reflection)."""
        return NetworkMap(self.outputs, self.inputs, np.ascontiguousarray(self.num.T), self.den)

    def rank(self) -> int:
        return exact_rank(self.num)

    def __repr__(self) -> str:
        return f"NetworkMap({self.inputs}->{self.outputs}, den={self.den})"


def compose(f: NetworkMap, g: NetworkMap) -> NetworkMap:
    """``f ∘ g`` (``f`` stacked on top of ``g``)."""
    if g.outputs != f.inputs:
        raise DomainError(f"cannot compose: {g.outputs} outputs feed {f.inputs} inputs")
    return NetworkMap(g.inputs, f.outputs, intmat.matmul(f.num, g.num), f.den * g.den)


def tensor(f: NetworkMap, g: NetworkMap) -> NetworkMap:
    """Side-by-side juxtaposition, ``f`` on the left."""
    return NetworkMap(f.inputs + g.inputs, f.outputs + g.outputs, intmat.kron(f.num, g.num), f.den * g.den)


def tensor_all(maps: Iterable[NetworkMap]) -> NetworkMap:
    out = NetworkMap.scalar(1)
    for m in maps:
        out = tensor(out, m)
    return out


def compose_all(*maps: NetworkMap) -> NetworkMap:
    """``maps[0] ∘ maps[1] ∘ ...``"""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def apply_blocks(blocks: Sequence[NetworkMap], g: NetworkMap) -> NetworkMap:
    """``(blocks[0] ⊗ blocks[1] ⊗ ...) ∘ g`` without forming the Kronecker product."""
    if sum(b.inputs for b in blocks) != g.outputs:
        raise DomainError("block inputs do not cover the outputs of g")
    arr = g.num.reshape([1 << b.inputs for b in blocks] + [g.num.shape[1]])
    den = g.den
    for axis, b in enumerate(blocks):
        arr = intmat.tensordot(b.num, arr, ([1], [axis]))
        arr = np.moveaxis(arr, 0, axis)
        den *= b.den
    outputs = sum(b.outputs for b in blocks)
    return NetworkMap(g.inputs, outputs, np.ascontiguousarray(arr).reshape(1 << outputs, g.num.shape[1]), den)


def partial_trace(f: NetworkMap, k: int) -> NetworkMap:
    """Close the rightmost ``k`` strands of an endomorphism into loops."""
    if f.inputs != f.outputs or k > f.inputs:
        raise DomainError("partial trace needs an endomorphism with at least k strands")
    n = f.inputs - k
    arr = f.num.reshape(1 << n, 1 << k, 1 << n, 1 << k)
    arr = np.trace(arr, axis1=1, axis2=3)
    return NetworkMap(n, n, intmat.shrink(np.ascontiguousarray(arr)), f.den)


def trace(f: NetworkMap) -> Fraction:
    return contract_closed(partial_trace(f, f.inputs))


def contract_closed(net: NetworkMap) -> Fraction:
    """The scalar of a closed network."""
    if net.inputs or net.outputs:
        raise DomainError(f"network is not closed ({net.inputs}->{net.outputs})")
    return Fraction(int(net.num[0, 0]), net.den)


# primitives

_PRIMITIVES = {
    "identity": (1, 1, [[1, 0], [0, 1]]),
    "cap": (2, 0, [[1, 0, 0, 1]]),
    "cup": (0, 2, [[1], [0], [0], [1]]),
    "cap_vertex": (2, 0, [[0, 1, -1, 0]]),
    "cup_vertex": (0, 2, [[0], [1], [-1], [0]]),
    "swap": (2, 2, [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
}


def primitive(kind: str) -> NetworkMap:
    """Component maps: ``identity``, ``cap`` (v⊗w -> vᵀw), ``cup`` (1 -> e1⊗e1+e2⊗e2),
    ``cap_vertex`` (v⊗w -> det[v w]), ``cup_vertex`` (1 -> e1⊗e2-e2⊗e1) and ``swap``."""
    try:
        ki, ko, rows = _PRIMITIVES[kind]
    except KeyError:
        raise DomainError(f"unknown primitive {kind!r}") from None
    return NetworkMap(ki, ko, np.array(rows, dtype=np.int64))


def identity(n: int = 1) -> NetworkMap:
    return NetworkMap.identity(n)


def permutation_map(perm: Sequence[int]) -> NetworkMap:
    """Strand permutation sending input factor ``i`` to output position ``perm[i]``."""
    n = len(perm)
    check_strands(n)
    if sorted(perm) != list(range(n)):
        raise DomainError(f"not a permutation: {perm}")
    size = 1 << n
    num = np.zeros((size, size), dtype=np.int64)
    for col in range(size):
        bits = [(col >> (n - 1 - i)) & 1 for i in range(n)]
        out = [0] * n
        for i, bit in enumerate(bits):
            out[perm[i]] = bit
        row = 0
        for bit in out:
            row = (row << 1) | bit
        num[row, col] = 1
    return NetworkMap(n, n, num)


def block_swap(a: int, b: int) -> NetworkMap:
    """Crossing of an ``a``-strand band over a ``b``-strand band: ``V^a⊗V^b -> V^b⊗V^a``."""
    return permutation_map([b + i for i in range(a)] + list(range(b)))


def nested_cups(n: int) -> NetworkMap:
    """``n`` concentric cups ``C -> V^{⊗2n}``; strand ``i`` pairs with ``2n-1-i``."""
    check_strands(2 * n)
    size = 1 << (2 * n)
    num = np.zeros((size, 1), dtype=np.int64)
    for left in range(1 << n):
        bits = [(left >> (n - 1 - i)) & 1 for i in range(n)]
        # pair (i, 2n-1-i): e1⊗e2 -> +1, e2⊗e1 -> -1
        right_bits = [1 - bit for bit in reversed(bits)]
        sign = -1 if sum(bits) % 2 else 1
        row = 0
        for bit in bits + right_bits:
            row = (row << 1) | bit
        num[row, 0] = sign
    return NetworkMap(0, 2 * n, num)


def nested_caps(n: int) -> NetworkMap:
    return nested_cups(n).transpose()


# symmetrizers

def weight(index: int) -> int:
    return bin(index).count("1")


def symmetrizer(n: int) -> NetworkMap:
    """Projection of ``V^{⊗n}`` onto ``Sym^n V``.

    Uses the weight form ``S[I,J] = [wt I = wt J] / C(n, wt I)``, where ``wt``
    counts ``e2`` factors; equal to the permutation average.
    """
    if n < 0:
        raise DomainError("symmetrizer rank must be nonnegative")
    check_strands(n)
    size = 1 << n
    den = lcm(*(comb(n, k) for k in range(n + 1)))
    wts = np.array([weight(i) for i in range(size)])
    vals = np.array([den // comb(n, k) for k in range(n + 1)], dtype=np.int64)
    num = np.where(wts[:, None] == wts[None, :], vals[wts][:, None], 0).astype(np.int64)
    return NetworkMap(n, n, num, den)


def symmetrizer_by_permutations(n: int) -> NetworkMap:
    """Reference construction: ``1/n! Σ_σ σ``.  Cost grows as ``n!``."""
    if n > 8:
        raise ResourceError("permutation-sum symmetrizer is limited to n <= 8")
    total = NetworkMap.zero(n, n)
    for perm in permutations(range(n)):
        total = total + permutation_map(perm)
    return total * Fraction(1, factorial(n))


def symmetrizer_by_recurrence(n: int) -> NetworkMap:
    """Single-strand recurrence ``S_n = (1⊗S_{n-1}) - (n-1)/n (1⊗S_{n-1})(U⊗1^{n-2})(1⊗S_{n-1})``
    with ``U = cup∘cap`` on the two leftmost strands."""
    s = identity(0) if n == 0 else identity(1)
    for m in range(2, n + 1):
        lifted = tensor(identity(1), s)
        hook = compose(primitive("cup_vertex"), primitive("cap_vertex"))
        u = tensor(hook, identity(m - 2))
        s = lifted - compose_all(lifted, u, lifted) * Fraction(m - 1, m)
    return s


# Clebsch-Gordan vertices

def clebsch_injection(a: int, b: int, c: int) -> NetworkMap:
    """Trivalent up-vertex ``V^{⊗c} -> V^{⊗a}⊗V^{⊗b}``:
    ``(S_a⊗S_b) ∘ (1^β ⊗ cups^γ ⊗ 1^α) ∘ S_c``."""
    from ..combinatorics import is_admissible
    if not is_admissible(a, b, c):
        raise DomainError(f"({a},{b},{c}) is not admissible")
    check_strands(a + b, c)
    al, be, ga = (-a + b + c) // 2, (a - b + c) // 2, (a + b - c) // 2
    middle = tensor_all([identity(be), nested_cups(ga), identity(al)])
    base = compose(middle, symmetrizer(c))
    return apply_blocks([symmetrizer(a), symmetrizer(b)], base)


def clebsch_projection(a: int, b: int, c: int) -> NetworkMap:
    """Trivalent down-vertex ``V^{⊗a}⊗V^{⊗b} -> V^{⊗c}`` (vertical mirror of the up-vertex)."""
    return clebsch_injection(a, b, c).transpose()


def theta_network(a: int, b: int, c: int) -> Fraction:
    """Closed theta graph: the trace of ``projection ∘ injection`` over ``V^{⊗c}``."""
    inj = clebsch_injection(a, b, c)
    return trace(compose(inj.transpose(), inj))


def loop_through_symmetrizer(n: int) -> Fraction:
    return trace(symmetrizer(n))


# linear algebra

def exact_rank(num: np.ndarray) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination."""
    rows = [[int(v) for v in row] for row in num]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [p[col] * x - f * y for x, y in zip(rows[r], p)]
                g = 0
                for x in rows[r]:
                    g = gcd(g, x)
                if g > 1:
                    rows[r] = [x // g for x in rows[r]]
        rank += 1
    return rank
