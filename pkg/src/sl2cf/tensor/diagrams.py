"""Composite dense diagrams: matrix insertions, kinks, bent vertices and four-leg trees.

Four-leg diagrams take labels ``(A, B, C, D)`` clockwise from the top left.
Trees are maps ``V_D -> V_A ⊗ V_B ⊗ V_C``; H and fused diagrams are maps
``V_D ⊗ V_C -> V_A ⊗ V_B``.
"""
from __future__ import annotations

from .mat2 import Mat2
from .network import (
    NetworkMap,
    block_swap,
    clebsch_injection,
    clebsch_projection,
    compose,
    compose_all,
    identity,
    nested_caps,
    nested_cups,
    symmetrizer,
    tensor,
    tensor_all,
)


def matrix_map(x: Mat2) -> NetworkMap:
    """The single-strand map ``v -> X v``."""
    return NetworkMap.from_rows(1, 1, [list(r) for r in x.rows()])


def matrix_strand(x: Mat2, n: int) -> NetworkMap:
    """``S_n ∘ X^{⊗n} ∘ S_n``."""
    s = symmetrizer(n)
    return compose_all(s, tensor_all([matrix_map(x)] * n), s)


def kink(n: int) -> NetworkMap:
    """An ``n``-band with one kink: ``(caps ⊗ 1)(1 ⊗ cups)``."""
    return compose(tensor(nested_caps(n), identity(n)), tensor(identity(n), nested_cups(n)))


def thick_kink(n: int) -> NetworkMap:
    return compose(kink(n), symmetrizer(n))


def crossed_down_vertex(a: int, b: int, c: int) -> NetworkMap:
    """Down-vertex ``(b, a, c)`` fed through a crossing of the ``a`` and ``b`` bands."""
    return compose(clebsch_projection(b, a, c), block_swap(a, b))


def bent_up_vertex(a: int, b: int, c: int) -> NetworkMap:
    """Up-vertex ``V_a -> V_c ⊗ V_b`` with its ``b`` leg bent down to the right."""
    return compose(tensor(identity(c), nested_caps(b)), tensor(clebsch_injection(c, b, a), identity(b)))


def cap_on_legs(n: int, i: int) -> NetworkMap:
    """``cap_vertex`` on strands ``i, i+1`` after ``S_n``."""
    from .network import primitive
    cap = tensor_all([identity(i), primitive("cap_vertex"), identity(n - i - 2)])
    return compose(cap, symmetrizer(n))


def up_tree_right(A: int, B: int, C: int, D: int, e: int) -> NetworkMap:
    """``D`` splits into ``A`` and ``e``; ``e`` splits into ``B`` and ``C``."""
    return compose(tensor(identity(A), clebsch_injection(B, C, e)), clebsch_injection(A, e, D))


def up_tree_left(A: int, B: int, C: int, D: int, f: int) -> NetworkMap:
    """``D`` splits into ``f`` and ``C``; ``f`` splits into ``A`` and ``B``."""
    return compose(tensor(clebsch_injection(A, B, f), identity(C)), clebsch_injection(f, C, D))


def h_diagram(A: int, B: int, C: int, D: int, e: int) -> NetworkMap:
    """``D`` splits into ``A`` and ``e``, then ``e`` and ``C`` fuse into ``B``."""
    return compose(tensor(identity(A), clebsch_projection(e, C, B)),
                   tensor(clebsch_injection(A, e, D), identity(C)))


def fused_diagram(A: int, B: int, C: int, D: int, f: int) -> NetworkMap:
    """``D`` and ``C`` fuse into ``f``, which splits into ``A`` and ``B``."""
    return compose(clebsch_injection(A, B, f), clebsch_projection(D, C, f))
