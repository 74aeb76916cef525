import random
from fractions import Fraction

import pytest

from sl2cf.combinatorics import cg_range, strand_numbers, theta, triples_up_to
from sl2cf.errors import DomainError, ResourceError
from sl2cf.tensor import network as nw
from sl2cf.tensor.diagrams import (
    bent_up_vertex,
    cap_on_legs,
    crossed_down_vertex,
    kink,
    matrix_map,
    matrix_strand,
    thick_kink,
)
from sl2cf.tensor.mat2 import Mat2, random_unimodular


def test_primitive_relations():
    cup, cap = nw.primitive("cup"), nw.primitive("cap")
    # zig-zag
    assert nw.compose(nw.tensor(nw.identity(), cap), nw.tensor(cup, nw.identity())) == nw.identity()
    assert nw.contract_closed(nw.compose(cap, cup)) == 2
    with pytest.raises(DomainError):
        nw.primitive("crossing")


def test_binor():
    cv, kv = nw.primitive("cup_vertex"), nw.primitive("cap_vertex")
    assert nw.primitive("swap") == nw.identity(2) - nw.compose(cv, kv)


def test_permutation_map_matches_swap():
    assert nw.permutation_map([1, 0]) == nw.primitive("swap")
    assert nw.block_swap(1, 1) == nw.primitive("swap")
    p = nw.permutation_map([2, 0, 1])
    assert nw.compose(p, nw.compose(p, p)) == nw.identity(3)


@pytest.mark.parametrize("n", range(7))
def test_symmetrizer(n):
    s = nw.symmetrizer(n)
    assert s == nw.symmetrizer_by_permutations(n) == nw.symmetrizer_by_recurrence(n)
    assert nw.compose(s, s) == s
    assert s.rank() == n + 1
    assert nw.trace(s) == n + 1


@pytest.mark.parametrize("n", range(1, 7))
def test_looping(n):
    s = nw.symmetrizer(n)
    assert nw.partial_trace(s, 1) == nw.symmetrizer(n - 1) * Fraction(n + 1, n)
    for k in range(1, n + 1):
        assert nw.partial_trace(s, k) == nw.symmetrizer(n - k) * Fraction(n + 1, n - k + 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_capping(n):
    for i in range(n - 1):
        assert cap_on_legs(n, i).is_zero()
        assert cap_on_legs(n, i).transpose().is_zero()


def test_equivariance():
    rng = random.Random(3)
    cv, kv = nw.primitive("cup_vertex"), nw.primitive("cap_vertex")
    for _ in range(5):
        x = random_unimodular(rng)
        xx = nw.tensor(matrix_map(x), matrix_map(x))
        assert nw.compose(xx, cv) == cv
        assert nw.compose(kv, xx) == kv
        for n in range(4):
            xn = nw.tensor_all([matrix_map(x)] * n) if n else nw.identity(0)
            assert nw.compose(xn, nw.symmetrizer(n)) == nw.compose(nw.symmetrizer(n), xn)


def test_matrix_strand_traces_give_rank_one_characters():
    x = Mat2(2, 1, 1, 1)
    # trace of Sym^n X is the complete homogeneous polynomial in the eigenvalues
    assert nw.trace(matrix_strand(x, 2)) == x.trace ** 2 - x.det
    assert nw.trace(matrix_strand(x, 3)) == x.trace ** 3 - 2 * x.trace * x.det


@pytest.mark.parametrize("t", [t.as_tuple() for t in triples_up_to(5)])
def test_bubble(t):
    a, b, c = t
    inj = nw.clebsch_injection(a, b, c)
    assert (inj.inputs, inj.outputs) == (c, a + b)
    for d in cg_range(a, b):
        m = nw.compose(nw.clebsch_projection(a, b, d), inj)
        if d == c:
            assert m == nw.symmetrizer(c) * (theta(a, b, c) / (c + 1))
        else:
            assert m.is_zero()
    assert nw.theta_network(a, b, c) == theta(a, b, c)


@pytest.mark.parametrize("a", range(5))
@pytest.mark.parametrize("b", range(5))
def test_fusion(a, b):
    total = nw.NetworkMap.zero(a + b, a + b)
    for c in cg_range(a, b):
        term = nw.compose(nw.clebsch_injection(a, b, c), nw.clebsch_projection(a, b, c))
        total = total + term * (Fraction(c + 1) / theta(a, b, c))
    assert total == nw.tensor(nw.symmetrizer(a), nw.symmetrizer(b))


@pytest.mark.parametrize("n", range(6))
def test_kink_sign(n):
    assert kink(n) == nw.identity(n) * (-1) ** n
    assert thick_kink(n) == nw.symmetrizer(n) * (-1) ** n


@pytest.mark.parametrize("t", [t.as_tuple() for t in triples_up_to(4)])
def test_vertex_signs(t):
    al, _, ga, _ = strand_numbers(t)
    proj = nw.clebsch_projection(*t)
    assert crossed_down_vertex(*t) == proj * (-1) ** ga
    assert bent_up_vertex(*t) == proj * (-1) ** al


def test_strand_cap():
    old = nw.MAX_STRANDS
    try:
        nw.set_strand_cap(4)
        with pytest.raises(ResourceError):
            nw.symmetrizer(5)
    finally:
        nw.set_strand_cap(old)
    assert nw.symmetrizer(5).shape == (32, 32)


def test_exact_rank():
    import numpy as np
    assert nw.exact_rank(np.array([[1, 2], [2, 4]])) == 1
    assert nw.exact_rank(np.array([[0, 1], [1, 0]])) == 2
