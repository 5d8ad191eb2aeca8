"""Exact sparse Laurent polynomials with integer coefficients.

Exponents are stored doubled so that half-integer powers (``t^(1/2)``) stay
exact.  A polynomial carries the names of its variables; one-variable and
two-variable polynomials never mix.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "LaurentPoly1",
    "LaurentPoly2",
    "VariableMismatch",
    "normalize_units",
    "is_monic",
    "degree_span",
    "parse_poly",
]


class VariableMismatch(ValueError):
    """Raised when operands live in different variable sets."""


Exponent = tuple[int, ...]


class LaurentPoly:
    """Immutable sparse Laurent polynomial over the integers.

    ``terms`` maps a tuple of doubled exponents (one per variable) to a
    nonzero integer coefficient.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, variables: Iterable[str] = ("t",)):
        self.variables = tuple(variables)
        clean: dict[Exponent, int] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.variables):
                raise ValueError(f"exponent {exp} does not match variables {self.variables}")
            if coeff:
                clean[exp] = clean.get(exp, 0) + int(coeff)
                if clean[exp] == 0:
                    del clean[exp]
        self._terms = clean
        self._hash: int | None = None

    # construction helpers -------------------------------------------------

    @classmethod
    def constant(cls, c: int, variables: Iterable[str] = ("t",)) -> "LaurentPoly":
        variables = tuple(variables)
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def monomial(cls, coeff: int, exponents: Iterable[Fraction | int], variables: Iterable[str] = ("t",)) -> "LaurentPoly":
        """Monomial with ordinary (undoubled) exponents, e.g. ``monomial(1, [Fraction(1, 2)])``."""
        return cls({tuple(_double(e) for e in exponents): coeff}, variables)

    @classmethod
    def var(cls, name: str = "t", variables: Iterable[str] | None = None) -> "LaurentPoly":
        variables = tuple(variables) if variables is not None else (name,)
        exp = tuple(2 if v == name else 0 for v in variables)
        return cls({exp: 1}, variables)

    # basic accessors ------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, *exponents: Fraction | int) -> int:
        return self._terms.get(tuple(_double(e) for e in exponents), 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for ``±`` a monomial, the units of the Laurent ring."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                if other.is_constant():
                    return LaurentPoly.constant(other.coefficient(*([0] * len(other.variables))), self.variables)
                raise VariableMismatch(f"cannot combine {self.variables} with {other.variables}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.variables)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.variables)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.variables)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, self.variables)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse_unit() ** (-k)
        result = LaurentPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse_unit(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        (e, c), = self._terms.items()
        return LaurentPoly({tuple(-x for x in e): c}, self.variables)

    def shift(self, *exponents: Fraction | int) -> "LaurentPoly":
        """Multiply by the monomial with the given (undoubled) exponents."""
        d = tuple(_double(e) for e in exponents)
        return LaurentPoly({tuple(a + b for a, b in zip(e, d)): c for e, c in self._terms.items()}, self.variables)

    def exact_div(self, other: "LaurentPoly | int") -> "LaurentPoly":
        """Exact division in the one-variable Laurent ring; raises ``ArithmeticError`` on a remainder."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if other.is_unit():
            return self * other.inverse_unit()
        if len(self.variables) != 1:
            raise NotImplementedError("exact division only for one variable by non-units")
        if self.is_zero():
            return self
        num = {e[0]: c for e, c in self._terms.items()}
        den = {e[0]: c for e, c in other._terms.items()}
        dlo, dhi = min(den), max(den)
        lead = den[dhi]
        quot: dict[int, int] = {}
        while num:
            hi = max(num)
            if hi - dhi < min(num) - dlo:
                break
            c = num[hi]
            if c % lead:
                raise ArithmeticError(f"inexact division of {self} by {other}")
            q = c // lead
            shift = hi - dhi
            quot[shift] = q
            for e, dc in den.items():
                k = e + shift
                v = num.get(k, 0) - q * dc
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        if num:
            raise ArithmeticError(f"inexact division of {self} by {other}")
        return LaurentPoly({(e,): c for e, c in quot.items()}, self.variables)

    def substitute(self, values: Mapping[str, "LaurentPoly | int"], variables: Iterable[str]) -> "LaurentPoly":
        """Substitute each variable by a polynomial in ``variables``.

        Negative powers require the substituted value to be a unit.
        Half-integer exponents require a unit value as well.
        """
        variables = tuple(variables)
        one = LaurentPoly.constant(1, variables)
        cache: dict[tuple[int, int], LaurentPoly] = {}

        def power(i: int, d: int) -> LaurentPoly:
            key = (i, d)
            if key not in cache:
                val = values[self.variables[i]]
                if not isinstance(val, LaurentPoly):
                    val = LaurentPoly.constant(val, variables)
                if d % 2:
                    cache[key] = _unit_sqrt(val) ** d
                else:
                    cache[key] = val ** (d // 2)
            return cache[key]

        total = LaurentPoly({}, variables)
        for e, c in self._terms.items():
            term = one * c
            for i, d in enumerate(e):
                if d:
                    term = term * power(i, d)
            total = total + term
        return total

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.variables)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if other.variables != self.variables:
            if self.is_constant() and other.is_constant():
                return self._const() == other._const()
            return False
        return self._terms == other._terms

    def _const(self) -> int:
        return self._terms.get((0,) * len(self.variables), 0)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # degree data (one variable) -------------------------------------------

    def _exps1(self) -> list[int]:
        if len(self.variables) != 1:
            raise VariableMismatch("operation defined for one-variable polynomials")
        return [e[0] for e in self._terms]

    def min_degree(self) -> Fraction:
        return Fraction(min(self._exps1()), 2)

    def max_degree(self) -> Fraction:
        return Fraction(max(self._exps1()), 2)

    def mirror(self) -> "LaurentPoly":
        """Substitute ``t -> 1/t`` in every variable."""
        return LaurentPoly({tuple(-x for x in e): c for e, c in self._terms.items()}, self.variables)

    # text -----------------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r}, variables={self.variables!r})"


def _unit_sqrt(val: LaurentPoly) -> LaurentPoly:
    if not val.is_monomial():
        raise ArithmeticError(f"cannot take a half-integer power of {val}")
    (e, c), = val.items()
    if c != 1 or any(x % 2 for x in e):
        raise ArithmeticError(f"cannot take a half-integer power of {val}")
    return LaurentPoly({tuple(x // 2 for x in e): 1}, val.variables)


def _double(e: Fraction | int | float) -> int:
    d = Fraction(e) * 2
    if d.denominator != 1:
        raise ValueError(f"exponent {e} is not a multiple of 1/2")
    return int(d)


def LaurentPoly1(terms: Mapping[Fraction | int, int] | None = None, var: str = "t") -> LaurentPoly:
    """One-variable polynomial from ``{exponent: coefficient}`` with ordinary exponents."""
    return LaurentPoly({(_double(e),): c for e, c in (terms or {}).items()}, (var,))


def LaurentPoly2(terms: Mapping[tuple, int] | None = None, variables: tuple[str, str] = ("a", "w")) -> LaurentPoly:
    """Two-variable polynomial from ``{(e1, e2): coefficient}`` with ordinary exponents."""
    return LaurentPoly({(_double(e1), _double(e2)): c for (e1, e2), c in (terms or {}).items()}, variables)


# unit normalization ---------------------------------------------------------

def normalize_units(p: LaurentPoly) -> LaurentPoly:
    """Representative of ``{±t^k p}`` with lowest exponent 0 and positive lowest coefficient."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no unit normalization")
    exps = p._exps1()
    lo = min(exps)
    sign = 1 if p._terms[(lo,)] > 0 else -1
    return LaurentPoly({(e[0] - lo,): sign * c for e, c in p.items()}, p.variables)


def is_monic(p: LaurentPoly) -> bool:
    if p.is_zero():
        raise ValueError("is_monic is undefined for the zero polynomial")
    exps = p._exps1()
    return abs(p._terms[(min(exps),)]) == 1 and abs(p._terms[(max(exps),)]) == 1


def degree_span(p: LaurentPoly) -> Fraction:
    if p.is_zero():
        raise ValueError("degree_span is undefined for the zero polynomial")
    return p.max_degree() - p.min_degree()


# formatting and parsing -----------------------------------------------------

def _fmt_exp(d: int) -> str:
    if d % 2 == 0:
        return str(d // 2)
    return f"({d}/2)"


def _fmt_monomial(exp: Exponent, variables: tuple[str, ...]) -> str:
    parts = []
    for name, d in zip(variables, exp):
        if d == 0:
            continue
        if d == 2:
            parts.append(name)
        else:
            parts.append(f"{name}^{_fmt_exp(d)}")
    return "*".join(parts)


def format_poly(p: LaurentPoly) -> str:
    """Render as ``c0 + c1*t^e1 + ...`` in increasing exponent order."""
    if p.is_zero():
        return "0"
    out = []
    for exp in sorted(p._terms):
        c = p._terms[exp]
        mono = _fmt_monomial(exp, p.variables)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\^)|(\*)|([+-])|(\()|(\))|(/))")


def parse_poly(text: str, variables: Iterable[str] = ("t",)) -> LaurentPoly:
    """Parse the format produced by :func:`format_poly`.

    Accepts terms like ``3``, ``-t``, ``2*t^-1``, ``t^(1/2)``, ``a^2*w^(-3/2)``.
    """
    variables = tuple(variables)
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character {text[pos]!r} at position {pos} in {text!r}")
        pos = m.end()
        kinds = ("int", "name", "^", "*", "sign", "(", ")", "/")
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                tokens.append((kind, val))
                break
    i = 0

    def peek(k=0):
        return tokens[i + k] if i + k < len(tokens) else (None, None)

    def take(kind=None):
        nonlocal i
        tok = peek()
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind} but found {tok[1]!r} in {text!r}")
        i += 1
        return tok

    def exponent() -> Fraction:
        sign = 1
        if peek()[0] == "(":
            take("(")
            if peek()[0] == "sign":
                sign = -1 if take()[1] == "-" else 1
            num = int(take("int")[1])
            den = 1
            if peek()[0] == "/":
                take("/")
                den = int(take("int")[1])
            take(")")
            return Fraction(sign * num, den)
        if peek()[0] == "sign":
            sign = -1 if take()[1] == "-" else 1
        return Fraction(sign * int(take("int")[1]))

    result = LaurentPoly({}, variables)
    if not tokens:
        raise ValueError("empty polynomial text")
    if tokens == [("int", "0")]:
        return result
    first = True
    while i < len(tokens):
        sign = 1
        if peek()[0] == "sign":
            sign = -1 if take()[1] == "-" else 1
        elif not first:
            raise ValueError(f"expected '+' or '-' before {peek()[1]!r} in {text!r}")
        first = False
        coeff = 1
        exps = [0] * len(variables)
        if peek()[0] == "int":
            coeff = int(take()[1])
            if peek()[0] == "*":
                take("*")
            else:
                result = result + LaurentPoly({tuple(exps): sign * coeff}, variables)
                continue
        while True:
            kind, name = take("name")
            if name not in variables:
                raise ValueError(f"unknown variable {name!r} (expected one of {variables})")
            e = Fraction(1)
            if peek()[0] == "^":
                take("^")
                e = exponent()
            exps[variables.index(name)] += _double(e)
            if peek()[0] == "*":
                take("*")
                continue
            break
        result = result + LaurentPoly({tuple(exps): sign * coeff}, variables)
    return result
