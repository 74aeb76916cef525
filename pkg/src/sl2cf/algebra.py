"""Exact scalar and trivariate polynomial arithmetic.

Scalars are :class:`fractions.Fraction` throughout.  Polynomials live in the
trace coordinates ``x = tr(X1)``, ``y = tr(X2)``, ``z = tr(X1 X2^-1)`` and are
stored sparsely as ``{(ex, ey, ez): coefficient}``.
"""
from __future__ import annotations

import ast
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .combinatorics import is_admissible
from .errors import DomainError

Rational = Fraction
Exponent = Tuple[int, int, int]
Triple = Tuple[int, int, int]
Scalar = Union[int, Fraction]

VARIABLES = ("x", "y", "z")


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational literal: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Canonical ``p/q`` rendering, omitting ``/1``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Poly3:
    """Immutable sparse polynomial in ``x, y, z`` with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, Scalar] | Iterable[tuple[Exponent, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Fraction] = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or min(exps) < 0:
                raise DomainError(f"bad exponent triple {exps}")
            c = clean.get(exps, Fraction(0)) + as_rational(coeff)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, c: Scalar) -> "Poly3":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, ex: int, ey: int, ez: int, coeff: Scalar = 1) -> "Poly3":
        return cls({(ex, ey, ez): coeff})

    @classmethod
    def var(cls, name: str) -> "Poly3":
        exps = [0, 0, 0]
        exps[VARIABLES.index(name)] = 1
        return cls({tuple(exps): 1})

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, ex: int, ey: int, ez: int) -> Fraction:
        return self._terms.get((ex, ey, ez), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def leading(self) -> tuple[Exponent, Fraction]:
        """Highest monomial in graded-lex order (x > y > z) and its coefficient."""
        if not self._terms:
            raise DomainError("zero polynomial has no leading term")
        exps = max(self._terms, key=_graded_key)
        return exps, self._terms[exps]

    # arithmetic

    def _coerce(self, other) -> "Poly3":
        if isinstance(other, Poly3):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly3.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly3(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly3({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return Poly3()
            return Poly3({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Fraction] = {}
        for (a1, b1, c1), p in self._terms.items():
            for (a2, b2, c2), q in other._terms.items():
                key = (a1 + a2, b1 + b2, c1 + c2)
                out[key] = out.get(key, Fraction(0)) + p * q
        return Poly3(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not polynomials")
        result, base = Poly3.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly3):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == Poly3.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def eval(self, x: Scalar, y: Scalar, z: Scalar) -> Fraction:
        x, y, z = as_rational(x), as_rational(y), as_rational(z)
        total = Fraction(0)
        for (a, b, c), coeff in self._terms.items():
            total += coeff * x**a * y**b * z**c
        return total

    def permute_variables(self, perm: Tuple[int, int, int]) -> "Poly3":
        """Send variable ``i`` to variable ``perm[i]`` (exponent ``e_i`` moves to slot ``perm[i]``)."""
        if sorted(perm) != [0, 1, 2]:
            raise DomainError(f"not a permutation of 3 symbols: {perm}")
        out = {}
        for exps, c in self._terms.items():
            new = [0, 0, 0]
            for i, e in enumerate(exps):
                new[perm[i]] = e
            out[tuple(new)] = c
        return Poly3(out)

    # rendering

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: _graded_key(kv[0]), reverse=True)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"Poly3({render_poly(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"exponents": list(e), "coefficient": format_rational(c)}
            for e, c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "Poly3":
        return cls({tuple(item["exponents"]): parse_rational(item["coefficient"]) for item in data})


def _graded_key(exps: Exponent) -> tuple[int, int, int, int]:
    return (sum(exps), *exps)


def _monomial_text(exps: Exponent, style: str) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        elif style == "latex":
            parts.append(f"{name}^{{{e}}}" if e > 9 else f"{name}^{e}")
        else:
            parts.append(f"{name}^{e}")
    return ("" if style == "latex" else "*").join(parts)


def _latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"\\tfrac{{{q.numerator}}}{{{q.denominator}}}"


def render_poly(p: Poly3, style: str = "text") -> str:
    """Deterministic rendering; ``style`` is ``"text"`` or ``"latex"``."""
    if p.is_zero():
        return "0"
    pieces = []
    for i, (exps, coeff) in enumerate(p.sorted_terms()):
        sign = "-" if coeff < 0 else "+"
        mag = abs(coeff)
        mono = _monomial_text(exps, style)
        if not mono:
            body = _latex_rational(mag) if style == "latex" else format_rational(mag)
        elif mag == 1:
            body = mono
        elif style == "latex":
            body = _latex_rational(mag) + mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if i == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)


_BINOPS = {ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow}


def parse_poly(text: str) -> Poly3:
    """Parse a literal such as ``"x^2*y - 2/3*(x*z + y)"``.

    Accepts ``+ - * / ^ **``, parentheses, integer literals and the variables
    ``x, y, z``.  Division is allowed only by nonzero constants.
    """
    source = text.replace("^", "**")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise DomainError(f"cannot parse polynomial {text!r}: {exc.msg}") from exc
    return _eval_node(tree.body, text)


def _eval_node(node, text: str) -> Poly3:
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return Poly3.constant(node.value)
    if isinstance(node, ast.Name) and node.id in VARIABLES:
        return Poly3.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _eval_node(node.operand, text)
        return -inner if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left = _eval_node(node.left, text)
        right = _eval_node(node.right, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if right.degree() != 0:
                raise DomainError(f"division by a non-constant in {text!r}")
            return left * (1 / right.coefficient(0, 0, 0))
        exponent = right.coefficient(0, 0, 0)
        if right.degree() != 0 or exponent.denominator != 1 or exponent < 0:
            raise DomainError(f"exponent must be a nonnegative integer in {text!r}")
        return left ** int(exponent)
    raise DomainError(f"unsupported syntax in polynomial {text!r}")


def poly_add(p: Poly3, q: Poly3) -> Poly3:
    return p + q


def poly_mul(p: Poly3, q: Poly3) -> Poly3:
    return p * q


def poly_eval(p: Poly3, x: Scalar, y: Scalar, z: Scalar) -> Fraction:
    return p.eval(x, y, z)


class CentralExpansion:
    """Finite linear combination of central functions, keyed by admissible triples."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Triple, Scalar] | Iterable[tuple[Triple, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Triple, Fraction] = {}
        for triple, coeff in items:
            triple = tuple(int(v) for v in triple)
            if len(triple) != 3 or not is_admissible(*triple):
                raise DomainError(f"{triple} is not an admissible triple")
            c = clean.get(triple, Fraction(0)) + as_rational(coeff)
            if c:
                clean[triple] = c
            else:
                clean.pop(triple, None)
        self._terms = clean

    @property
    def terms(self) -> dict[Triple, Fraction]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms.items())

    def __getitem__(self, triple: Triple) -> Fraction:
        return self._terms.get(tuple(triple), Fraction(0))

    def __contains__(self, triple) -> bool:
        return tuple(triple) in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, CentralExpansion):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "CentralExpansion") -> "CentralExpansion":
        out = dict(self._terms)
        for t, c in other._terms.items():
            out[t] = out.get(t, Fraction(0)) + c
        return CentralExpansion(out)

    def scale(self, factor: Scalar) -> "CentralExpansion":
        factor = as_rational(factor)
        return CentralExpansion({t: c * factor for t, c in self._terms.items()})

    def sorted_terms(self) -> list[tuple[Triple, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def __str__(self) -> str:
        return render_expansion(self)

    def __repr__(self) -> str:
        return f"CentralExpansion({render_expansion(self)!r})"

    def to_json(self) -> list[dict]:
        return [
            {"triple": list(t), "coefficient": format_rational(c)}
            for t, c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "CentralExpansion":
        return cls({tuple(item["triple"]): parse_rational(item["coefficient"]) for item in data})


def render_expansion(ce: CentralExpansion, style: str = "text") -> str:
    """E.g. ``χ112 + 1/2 χ110``; terms ordered by degree, then triple, descending."""
    if not ce:
        return "0"
    pieces = []
    for i, (t, coeff) in enumerate(ce.sorted_terms()):
        if style == "latex":
            name = "\\chi_{%d%d%d}" % t if max(t) < 10 else "\\chi_{%d,%d,%d}" % t
            mag = _latex_rational(abs(coeff))
            body = name if abs(coeff) == 1 else f"{mag}{name}"
        else:
            name = "χ%d%d%d" % t if max(t) < 10 else "χ(%d,%d,%d)" % t
            body = name if abs(coeff) == 1 else f"{format_rational(abs(coeff))} {name}"
        if i == 0:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f" {'+' if coeff > 0 else '-'} {body}")
    return "".join(pieces)
