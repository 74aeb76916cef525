import random
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sl2cf import central as cf
from sl2cf.algebra import Poly3, parse_poly
from sl2cf.combinatorics import theta, triples_up_to
from sl2cf.errors import DomainError
from sl2cf.products import central_to_poly
from sl2cf.tensor import thick
from sl2cf.tensor.mat2 import random_pairs

triples4 = [t.as_tuple() for t in triples_up_to(4)]


def test_small_values():
    assert cf.central_function((0, 0, 0)) == Poly3.constant(1)
    assert cf.central_function((1, 0, 1)) == parse_poly("x")
    assert cf.central_function((0, 1, 1)) == parse_poly("y")
    assert cf.central_function((1, 1, 0)) == parse_poly("z")
    assert cf.central_function((2, 0, 2)) == parse_poly("x^2 - 1")


@pytest.mark.parametrize("t", [t.as_tuple() for t in triples_up_to(3)])
def test_against_contraction(t):
    p = cf.central_function(t)
    for x1, x2 in random_pairs(99, 6):
        assert p.eval(x1.trace, x2.trace, (x1 @ x2.inverse()).trace) == thick.central_function_numeric(t, x1, x2)


@pytest.mark.parametrize("t", triples4)
def test_monic_and_graded(t):
    p = cf.central_function(t)
    exps, coeff = p.leading()
    assert coeff == 1 and exps == cf.leading_monomial(t)
    assert {cf.monomial_grading(e) for e, _ in p.items()} == {cf.grading(t)}
    assert p.degree() == sum(t) // 2
    assert p.eval(2, 2, 2) == theta(t)


@pytest.mark.parametrize("t", triples4)
@pytest.mark.parametrize("sigma", cf.PERMUTATIONS)
def test_symmetry(t, sigma):
    assert cf.apply_symmetry(sigma, t) == cf.central_function(cf.permute_triple(sigma, t))


def test_bad_permutation():
    with pytest.raises(ValueError):
        cf.apply_symmetry((0, 0, 1), (1, 0, 1))


@pytest.mark.parametrize("t", triples4)
def test_multiply_by_x(t):
    assert central_to_poly(cf.multiply_by_x(t)) == parse_poly("x") * cf.central_function(t)


def test_recurrence_from_definition():
    # x·χ_{a-1,b,c-1} minus the lower corrections for (2,2,2); the (0,2,0) term is not admissible
    lhs = cf.central_function((2, 2, 2))
    rhs = parse_poly("x") * cf.central_function((1, 2, 1))
    rhs -= cf.central_function((0, 2, 2)) * Fraction(4, 8)
    rhs -= cf.central_function((2, 2, 0)) * Fraction(4, 8)
    assert lhs == rhs


@given(st.integers(0, 12), st.integers(0, 12))
@settings(max_examples=40, deadline=None)
def test_rank_one_product(a, b):
    lhs = cf.chi_rank1(a) * cf.chi_rank1(b)
    rhs = Poly3()
    for c in cf.rank1_product_range(a, b):
        rhs = rhs + cf.chi_rank1(c)
    assert lhs == rhs


def test_rank_one_is_a_central_function():
    for n in range(8):
        assert cf.chi_rank1(n) == cf.central_function((n, 0, n))


def test_rank_one_eigenvalues():
    lam = Fraction(3, 2)
    for n in range(8):
        want = (lam ** (n + 1) - lam ** (-n - 1)) / (lam - 1 / lam)
        assert cf.chi_rank1(n).eval(lam + 1 / lam, 0, 0) == want
    with pytest.raises(ValueError):
        cf.chi_rank1(-1)


def test_inadmissible():
    with pytest.raises(DomainError):
        cf.central_function((1, 1, 1))


def test_table_is_safe_under_threads():
    table = cf.ChiTable()
    keys = [t.as_tuple() for t in triples_up_to(5)]
    random.Random(1).shuffle(keys)
    results = {}

    def work(i):
        results[i] = [table.get(k) for k in keys]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    for i in range(4):
        assert results[i] == [cf.central_function(k) for k in keys]
    assert len(table) == len(keys)
