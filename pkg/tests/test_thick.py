import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2cf.combinatorics import theta, triples_up_to
from sl2cf.errors import DomainError, ResourceError
from sl2cf.tensor import network as nw
from sl2cf.tensor import thick
from sl2cf.tensor.diagrams import matrix_strand
from sl2cf.tensor.mat2 import Mat2, elementary, random_pairs, random_unimodular

small = [t.as_tuple() for t in triples_up_to(4)]


@pytest.mark.parametrize("t", small)
def test_vertex_reduces_the_dense_injection(t):
    a, b, c = t
    dense = thick.from_network(nw.clebsch_injection(a, b, c), [a, b], [c])
    assert dense == thick.vertex(a, b, c)
    assert thick.to_network(thick.vertex(a, b, c)) == nw.clebsch_injection(a, b, c)


@pytest.mark.parametrize("t", [t.as_tuple() for t in triples_up_to(8)])
def test_theta_value(t):
    assert thick.theta_value(*t) == theta(t)


@pytest.mark.parametrize("n", range(6))
def test_strand_matches_dense(n):
    rng = random.Random(n)
    x = random_unimodular(rng)
    assert thick.to_network(thick.strand(x, n)) == matrix_strand(x, n)


def test_strand_is_multiplicative():
    rng = random.Random(11)
    x, y = random_unimodular(rng), random_unimodular(rng)
    for n in range(5):
        assert thick.compose(thick.strand(x, n), thick.strand(y, n)) == thick.strand(x @ y, n)
        assert thick.strand(Mat2.identity(), n) == thick.ThickMap.identity(n)


def test_composition_and_tensor_agree_with_dense():
    f = thick.vertex(2, 1, 3)
    g = thick.compose(thick.tensor(thick.ThickMap.identity(2), thick.vertex(0, 1, 1)), f)
    dense = nw.compose(nw.tensor(nw.symmetrizer(2), nw.clebsch_injection(0, 1, 1)), nw.clebsch_injection(2, 1, 3))
    assert thick.to_network(g) == dense


def test_trace_of_identity_is_dimension():
    for n in range(8):
        assert thick.trace(thick.ThickMap.identity(n)) == n + 1


@given(st.integers(0, 10 ** 6))
@settings(max_examples=15, deadline=None)
def test_numeric_central_function_is_conjugation_invariant(seed):
    rng = random.Random(seed)
    x1, x2, g = (random_unimodular(rng) for _ in range(3))
    gi = g.inverse()
    for t in [(1, 0, 1), (1, 1, 2), (2, 2, 2)]:
        assert thick.central_function_numeric(t, x1, x2) == thick.central_function_numeric(t, g @ x1 @ gi, g @ x2 @ gi)


def test_numeric_central_function_at_identity_is_theta():
    one = Mat2.identity()
    for t in small:
        assert thick.central_function_numeric(t, one, one) == theta(t)


def test_numeric_rejects_non_unimodular():
    with pytest.raises(DomainError):
        thick.central_function_numeric((1, 0, 1), Mat2(2, 0, 0, 1), Mat2.identity())


def test_label_cap():
    old = thick.MAX_LABEL
    try:
        thick.set_label_cap(3)
        with pytest.raises(ResourceError):
            thick.vertex(2, 2, 4)
    finally:
        thick.set_label_cap(old)


def test_samplers_are_unimodular_and_seeded():
    pairs = random_pairs(5, 10)
    assert pairs == random_pairs(5, 10)
    for x, y in pairs:
        assert x.det == 1 and y.det == 1
    assert elementary(Fraction(3, 2)).trace == Fraction(3, 2)
