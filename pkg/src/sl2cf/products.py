"""Products of central functions and conversion between the monomial and central bases."""
from __future__ import annotations

from fractions import Fraction

from .algebra import CentralExpansion, Poly3
from .central import central_function
from .combinatorics import binomial, cg_range, delta_dim, is_admissible, theta, triple
from .errors import DomainError
from .recoupling import sixj_general
from .tensor.mat2 import Mat2


def _structure_weight(t1, t2, j: int, k: int, l: int, m: int) -> Fraction:
    a, b, c = t1
    a2, b2, c2 = t2
    return (delta_dim(j) / theta(a2, b, j)
            * sixj_general((a, a2, j, c, b, k))
            * sixj_general((b2, b, j, c2, a2, l))
            * sixj_general((k, l, c2, c, j, m)))


def _j_range(t1, t2, k: int, l: int) -> list[int]:
    # the remaining triples of the three 6j keys hold by construction of k, l, m
    _, b, c = t1
    a2, _, c2 = t2
    return [j for j in cg_range(a2, b) if is_admissible(c, j, k) and is_admissible(c2, j, l)]


def product_central(t1, t2) -> CentralExpansion:
    """χ_{t1}·χ_{t2} expanded in central functions via 6j-symbols."""
    t1, t2 = triple(t1).as_tuple(), triple(t2).as_tuple()
    a, b, c = t1
    a2, b2, c2 = t2
    out = {}
    for k in cg_range(a, a2):
        for l in cg_range(b, b2):
            for m in cg_range(c, c2):
                if not is_admissible(k, l, m):
                    continue
                s = sum((_structure_weight(t1, t2, j, k, l, m) for j in _j_range(t1, t2, k, l)), Fraction(0))
                if s:
                    out[(k, l, m)] = (s * s * theta(a, a2, k) * theta(b, b2, l) * theta(c, c2, m)
                                      / (delta_dim(k) * delta_dim(l) * delta_dim(m)))
    return CentralExpansion(out)


def product_via_polynomials(t1, t2) -> CentralExpansion:
    return poly_to_central(central_function(t1) * central_function(t2))


def _binomial_step(n: int, r: int) -> int:
    return binomial(n, r) - binomial(n, r - 1)


def monomial_to_central(ex: int, ey: int, ez: int) -> CentralExpansion:
    """x^ex y^ey z^ez as a combination of central functions."""
    if min(ex, ey, ez) < 0:
        raise DomainError("exponents must be nonnegative")
    out: dict[tuple[int, int, int], Fraction] = {}
    for r in range(ex // 2 + 1):
        for s in range(ey // 2 + 1):
            for t in range(ez // 2 + 1):
                weight = _binomial_step(ex, r) * _binomial_step(ey, s) * _binomial_step(ez, t)
                if not weight:
                    continue
                p, q, u = ex - 2 * r, ey - 2 * s, ez - 2 * t
                for k in cg_range(p, u):
                    for m in cg_range(p, q):
                        for l in cg_range(q, u):
                            if not is_admissible(k, l, m):
                                continue
                            g = sixj_general((p, u, l, m, q, k))
                            if not g:
                                continue
                            v = (delta_dim(l) * delta_dim(m) * theta(p, u, k)
                                 / (delta_dim(k) * theta(p, q, m) * theta(q, u, l)))
                            out[(k, l, m)] = out.get((k, l, m), Fraction(0)) + weight * v * g * g
    return CentralExpansion(out)


def poly_to_central(p: Poly3) -> CentralExpansion:
    out = CentralExpansion()
    for exps, coeff in p.items():
        out = out + monomial_to_central(*exps).scale(coeff)
    return out


def central_to_poly(ce: CentralExpansion) -> Poly3:
    out = Poly3()
    for t, coeff in ce.items():
        out = out + central_function(t) * coeff
    return out


def fricke_slice(tau_x, tau_y, zeta) -> tuple[Mat2, Mat2]:
    """Unimodular pair with traces ``(tau_x, tau_y, zeta + 1/zeta)``."""
    zeta = Fraction(zeta)
    if zeta == 0:
        raise DomainError("zeta must be nonzero")
    return Mat2(tau_x, 1, -1, 0), Mat2(tau_y, 1 / zeta, -zeta, 0)
