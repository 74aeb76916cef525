"""Verification suites driven by the CLI.  Each check scans its parameter space in
increasing order and stops at the first counterexample."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import central as cf
from .algebra import CentralExpansion, render_poly
from .errors import DomainError
from .combinatorics import cg_range, is_admissible, strand_numbers, theta, triples_up_to
from .products import central_to_poly, monomial_to_central, poly_to_central, product_central, product_via_polynomials
from .recoupling import (
    SixJKey,
    kinked_fused,
    kinked_h,
    recoupling_1abc,
    sixj_general,
    sixj_primed,
    sixj_special,
    special_key,
)
from .tensor import network as nw
from .tensor import thick
from .tensor.diagrams import bent_up_vertex, cap_on_legs, crossed_down_vertex, fused_diagram, h_diagram, matrix_map, thick_kink
from .tensor.mat2 import random_pairs, random_unimodular

SUITES = ("diagrams", "recurrence", "symmetry", "products")
# run on request only, never by "all"
EXTRA_SUITES = ("recoupling",)


@dataclass
class ReportEntry:
    check: str
    parameters: dict = field(default_factory=dict)
    status: str = "pass"
    details: str = ""

    def to_json(self) -> dict:
        return {"check": self.check, "parameters": self.parameters, "status": self.status, "details": self.details}


def _run(name: str, params: dict, cases: Iterable, test: Callable) -> ReportEntry:
    """``test(case)`` returns None on success or a message describing the failure."""
    count = 0
    for case in cases:
        count += 1
        problem = test(case)
        if problem is not None:
            return ReportEntry(name, params, "fail", f"counterexample {case}: {problem}")
    return ReportEntry(name, params, "pass", f"{count} cases")


# diagrams

def diagram_checks(max_delta: int, seed: int) -> list[ReportEntry]:
    n_max = min(6, max(2, 2 * max_delta))
    pair_max = min(4, max(1, max_delta))
    out = []

    def binor(_):
        rhs = nw.identity(2) - nw.compose(nw.primitive("cup_vertex"), nw.primitive("cap_vertex"))
        return None if nw.primitive("swap") == rhs else "swap differs from id - cup∘cap"

    out.append(_run("binor", {}, [()], binor))
    out.append(_run("loop_value", {}, [()], lambda _: None if nw.contract_closed(
        nw.compose(nw.primitive("cap"), nw.primitive("cup"))) == 2 else "loop is not 2"))
    out.append(_run("loop_through_symmetrizer", {"n_max": n_max}, range(n_max + 1),
                    lambda n: None if nw.loop_through_symmetrizer(n) == n + 1 else "value is not n+1"))
    out.append(_run("symmetrizer_constructions", {"n_max": n_max}, range(n_max + 1), lambda n: (
        None if nw.symmetrizer(n) == nw.symmetrizer_by_permutations(n) == nw.symmetrizer_by_recurrence(n)
        and nw.compose(nw.symmetrizer(n), nw.symmetrizer(n)) == nw.symmetrizer(n)
        else "constructions disagree or not idempotent")))
    out.append(_run("looping_one_strand", {"n_max": n_max}, range(1, n_max + 1),
                    lambda n: None if nw.partial_trace(nw.symmetrizer(n), 1)
                    == nw.symmetrizer(n - 1) * Fraction(n + 1, n) else "mismatch"))
    out.append(_run("looping_k_strands", {"n_max": n_max},
                    [(n, k) for n in range(1, n_max + 1) for k in range(1, n + 1)],
                    lambda nk: None if nw.partial_trace(nw.symmetrizer(nk[0]), nk[1])
                    == nw.symmetrizer(nk[0] - nk[1]) * Fraction(nk[0] + 1, nk[0] - nk[1] + 1) else "mismatch"))
    out.append(_run("capping", {"n_max": n_max}, [(n, i) for n in range(2, n_max + 1) for i in range(n - 1)],
                    lambda ni: None if cap_on_legs(*ni).is_zero() else "nonzero"))

    def bubble(case):
        a, b, c, d = case
        m = nw.compose(nw.clebsch_projection(a, b, d), nw.clebsch_injection(a, b, c))
        want = nw.symmetrizer(c) * (theta(a, b, c) / (c + 1)) if c == d else nw.NetworkMap.zero(c, d)
        return None if m == want else "projection∘injection mismatch"

    cases = [(a, b, c, d) for a in range(2 * max_delta + 1) for b in range(2 * max_delta + 1)
             for c in cg_range(a, b) for d in cg_range(a, b) if (a + b + c) // 2 <= max_delta and (a + b + d) // 2 <= max_delta]
    out.append(_run("bubble", {"max_delta": max_delta}, cases, bubble))

    def fusion(ab):
        a, b = ab
        total = nw.NetworkMap.zero(a + b, a + b)
        for c in cg_range(a, b):
            total = total + nw.compose(nw.clebsch_injection(a, b, c), nw.clebsch_projection(a, b, c)) * ((c + 1) / theta(a, b, c))
        return None if total == nw.tensor(nw.symmetrizer(a), nw.symmetrizer(b)) else "sum differs from S_a⊗S_b"

    out.append(_run("fusion", {"max_label": pair_max}, [(a, b) for a in range(pair_max + 1) for b in range(pair_max + 1)], fusion))
    # a kinked n-band passes through 3n strands, so n = 6 would exceed the default cap
    kink_max = min(n_max, 5)
    out.append(_run("sign_kink", {"n_max": kink_max}, range(kink_max + 1),
                    lambda n: None if thick_kink(n) == nw.symmetrizer(n) * (-1) ** n else "mismatch"))
    small = [tuple(t) for t in triples_up_to(max(1, max_delta))]
    out.append(_run("sign_crossed_vertex", {"max_delta": max_delta}, small, lambda t: None if crossed_down_vertex(*t)
                    == nw.clebsch_projection(*t) * (-1) ** strand_numbers(t).gamma else "mismatch"))
    out.append(_run("sign_bent_vertex", {"max_delta": max_delta}, small, lambda t: None if bent_up_vertex(*t)
                    == nw.clebsch_projection(*t) * (-1) ** strand_numbers(t).alpha else "mismatch"))

    rng = random.Random(seed)

    def equivariance(_):
        x = random_unimodular(rng)
        xx = nw.tensor(matrix_map(x), matrix_map(x))
        cup, cap = nw.primitive("cup_vertex"), nw.primitive("cap_vertex")
        ok = nw.compose(xx, cup) == cup and nw.compose(cap, xx) == cap
        return None if ok else f"fails at {x}"

    out.append(_run("equivariance", {"seed": seed}, range(5), equivariance))
    out.append(_run("theta_network", {"max_delta": max_delta}, small,
                    lambda t: None if nw.theta_network(*t) == theta(t) else "closed theta differs from formula"))
    return out


# recurrence and structure

def recurrence_checks(max_delta: int, seed: int, samples: int = 20) -> list[ReportEntry]:
    ts = triples_up_to(max_delta)
    pairs = random_pairs(seed, samples)
    out = []

    def oracle(t):
        p = cf.central_function(t)
        for x1, x2 in pairs:
            want = thick.central_function_numeric(t, x1, x2)
            got = p.eval(x1.trace, x2.trace, (x1 @ x2.inverse()).trace)
            if got != want:
                return f"polynomial gives {got}, contraction gives {want} at {x1}, {x2}"
        return None

    out.append(_run("oracle_equivalence", {"max_delta": max_delta, "seed": seed, "samples": samples}, ts, oracle))
    out.append(_run("theta_specialization", {"max_delta": max_delta}, ts, lambda t: None
                    if cf.central_function(t).eval(2, 2, 2) == theta(t) else "value at (2,2,2) is not Θ"))

    def monic(t):
        exps, c = cf.central_function(t).leading()
        return None if (exps, c) == (cf.leading_monomial(t), 1) else f"leading term {exps} with coefficient {c}"

    out.append(_run("monic", {"max_delta": max_delta}, ts, monic))
    out.append(_run("grading", {"max_delta": max_delta}, ts, lambda t: None if all(
        cf.monomial_grading(e) == cf.grading(t) for e, _ in cf.central_function(t).items()) else "mixed grading"))

    def xmult(t):
        lhs = cf.central_function(t) * cf.central_function((1, 0, 1))
        return None if central_to_poly(cf.multiply_by_x(t)) == lhs else "expansion differs from x·χ"

    out.append(_run("multiply_by_x", {"max_delta": max_delta}, ts, xmult))
    n_max = 2 * max_delta
    out.append(_run("rank1_product", {"n_max": n_max}, [(a, b) for a in range(n_max + 1) for b in range(n_max + 1)],
                    lambda ab: None if cf.chi_rank1(ab[0]) * cf.chi_rank1(ab[1]) == sum(
                        (cf.chi_rank1(c) for c in cf.rank1_product_range(*ab)), cf.Poly3()) else "mismatch"))
    rng = random.Random(seed)
    lams = [_random_lambda(rng) for _ in range(10)]
    out.append(_run("rank1_eigenvalues", {"n_max": 10, "seed": seed}, range(11), lambda n: None if all(
        cf.chi_rank1(n).eval(lam + 1 / lam, 0, 0) == (lam ** (n + 1) - lam ** (-n - 1)) / (lam - 1 / lam)
        for lam in lams) else "eigenvalue form differs"))
    return out


def _random_lambda(rng: random.Random) -> Fraction:
    while True:
        lam = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if lam not in (0, 1, -1):
            return lam


# symmetry

def symmetry_checks(max_delta: int) -> list[ReportEntry]:
    cases = [(sigma, t.as_tuple()) for t in triples_up_to(max_delta) for sigma in cf.PERMUTATIONS]
    return [_run("symmetry", {"max_delta": max_delta, "permutations": 6}, cases, lambda st: None
                 if cf.apply_symmetry(*st) == cf.central_function(cf.permute_triple(*st))
                 else f"substitution gives {render_poly(cf.apply_symmetry(*st))}")]


# products

def product_checks(max_delta: int) -> list[ReportEntry]:
    ts = [t.as_tuple() for t in triples_up_to(max_delta)]
    pairs = [(t1, t2) for t1 in ts for t2 in ts]
    out = []

    def cross(pair):
        p, q = product_central(*pair), product_via_polynomials(*pair)
        return None if p == q else f"6j path {p} but polynomial path {q}"

    out.append(_run("product_cross_path", {"max_delta": max_delta}, pairs, cross))
    out.append(_run("product_commutative", {"max_delta": max_delta}, pairs,
                    lambda pr: None if product_central(*pr) == product_central(pr[1], pr[0]) else "not symmetric"))

    def soundness(pair):
        (a, b, c), (a2, b2, c2) = pair
        for (k, l, m), _ in product_central(*pair).items():
            if not (is_admissible(a, a2, k) and is_admissible(b, b2, l) and is_admissible(c, c2, m)
                    and is_admissible(k, l, m)):
                return f"output {k, l, m} violates admissibility"
            g = ((a + a2) % 2, (b + b2) % 2)
            if cf.grading((k, l, m)) != g:
                return f"output {k, l, m} has wrong grading"
        return None

    out.append(_run("product_filter_and_grading", {"max_delta": max_delta}, pairs, soundness))
    ts_rt = [t.as_tuple() for t in triples_up_to(max_delta + 1)]
    out.append(_run("round_trip_central", {"max_delta": max_delta + 1}, ts_rt, lambda t: None
                    if poly_to_central(cf.central_function(t)) == CentralExpansion({t: 1}) else "not recovered"))
    deg = max_delta + 2
    monos = [(i, j, n - i - j) for n in range(deg + 1) for i in range(n + 1) for j in range(n - i + 1)]
    out.append(_run("round_trip_monomial", {"max_degree": deg}, monos, lambda e: None
                    if central_to_poly(monomial_to_central(*e)) == cf.Poly3.monomial(*e) else "not recovered"))
    return out


# recoupling

def recoupling_checks(max_label: int) -> list[ReportEntry]:
    out = []
    cases = [(a, b, c, s) for a in range(max_label + 1) for b in range(max_label + 1) for c in range(max_label + 1)
             for s in (-1, 1) if (a + b + c) % 2 and is_admissible(1, c + s, c) and is_admissible(c + s, b, a)]

    def one_strand(case):
        a, b, c, s = case
        lhs = kinked_h(a, b, c, c + s)
        rhs = nw.NetworkMap.zero(lhs.inputs, lhs.outputs)
        for coeff, f in recoupling_1abc(s, a, b, c):
            rhs = rhs + kinked_fused(a, b, c, f) * coeff
        return None if lhs == rhs else "expansion differs entrywise"

    out.append(_run("one_strand_recoupling", {"max_label": max_label}, cases, one_strand))
    fam = []
    for a in range(max_label + 1):
        for b in range(2 * max_label + 1):
            for c in range(max_label + 1):
                for cs in (1, -1):
                    for s in (1, -1):
                        try:
                            special_key(a, b, c, cs, s)
                        except DomainError:
                            continue
                        fam.append((a, b, c, cs, s))
    for cs in (1, -1):
        for s in (1, -1):
            sub = [f for f in fam if f[3:] == (cs, s)]
            out.append(_run(f"special_family_c{'+' if cs > 0 else '-'}1_a{'+' if s > 0 else '-'}1",
                            {"max_label": max_label}, sub, lambda f: None
                            if sixj_special(*f) == sixj_general(special_key(*f))
                            else f"closed form {sixj_special(*f)}, extraction {sixj_general(special_key(*f))}"))

    def completeness(key):
        a, b, c, d, e = key
        h = h_diagram(a, b, c, d, e)
        total = nw.NetworkMap.zero(h.inputs, h.outputs)
        for f in cg_range(a, b):
            if is_admissible(d, c, f):
                total = total + fused_diagram(a, b, c, d, f) * sixj_primed(SixJKey(a, b, c, d, e, f))
        return None if total == h else "reconstruction differs"

    keys = [(a, b, c, d, e) for a in range(max_label + 1) for b in range(max_label + 1) for c in range(max_label + 1)
            for d in range(max_label + 1) for e in cg_range(b, c) if is_admissible(a, e, d) and a + b + c + d <= 14
            and any(is_admissible(d, c, f) for f in cg_range(a, b))]
    out.append(_run("change_of_basis_completeness", {"max_label": max_label}, keys, completeness))
    return out


def run_suite(name: str, max_delta: int, seed: int) -> list[ReportEntry]:
    if name == "diagrams":
        return diagram_checks(max_delta, seed)
    if name == "recurrence":
        return recurrence_checks(max_delta, seed)
    if name == "symmetry":
        return symmetry_checks(max_delta)
    if name == "products":
        return product_checks(max_delta)
    if name == "recoupling":
        return recoupling_checks(max(1, max_delta))
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, max_delta, seed))
        return out
    raise ValueError(f"unknown suite {name!r}")
