from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from seifertkit.laurent import (
    LaurentPoly,
    LaurentPoly1,
    LaurentPoly2,
    VariableMismatch,
    degree_span,
    is_monic,
    normalize_units,
    parse_poly,
)

t = LaurentPoly.var("t")


def polys(variables=("t",), max_terms=5, half=True):
    exp = st.integers(-6, 6) if half else st.integers(-3, 3).map(lambda e: 2 * e)
    key = st.tuples(*[exp for _ in variables])
    return st.dictionaries(key, st.integers(-5, 5), max_size=max_terms).map(lambda d: LaurentPoly(d, variables))


def test_ring_examples():
    assert (t + 1) + (-1) == t
    assert (t - 1) * (t + 1) == t ** 2 - 1
    assert ((t ** 3 - 2) * 0).is_zero()


def test_no_zero_coefficients_are_stored():
    p = LaurentPoly1({0: 1, 1: 0, 2: 3})
    assert dict(p.items()) == {(0,): 1, (4,): 3}
    assert (t - t).is_zero()


def test_mixing_variable_sets_raises():
    with pytest.raises(VariableMismatch):
        _ = t + LaurentPoly.var("a", ("a", "w"))


def test_constants_cross_variable_sets():
    two = LaurentPoly.constant(2, ("a", "w"))
    assert (t * two) == 2 * t


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(polys(("a", "w")), polys(("a", "w")))
def test_two_variable_ring_axioms(a, b):
    assert a * b == b * a
    assert (a + b) * (a - b) == a * a - b * b


def test_normalize_units_examples():
    assert normalize_units(-(t ** -1) + 1 - t) == parse_poly("1 - t + t^2")
    p = parse_poly("1 - t + t^2")
    assert normalize_units(p) == p
    assert normalize_units(LaurentPoly.constant(1)) == 1
    with pytest.raises(ValueError):
        normalize_units(LaurentPoly({}))


@given(polys().filter(lambda p: not p.is_zero()), st.integers(-8, 8), st.sampled_from((1, -1)))
def test_normalize_units_is_constant_on_unit_orbit(p, k, sign):
    q = p.shift(Fraction(k, 2)) * sign
    assert normalize_units(q) == normalize_units(p)
    assert normalize_units(normalize_units(p)) == normalize_units(p)


@given(polys().filter(lambda p: not p.is_zero()), st.integers(-8, 8))
def test_degree_span_unit_invariant(p, k):
    assert degree_span(p.shift(Fraction(k, 2))) == degree_span(p)


def test_monic_and_span_examples():
    assert is_monic(parse_poly("1 - t + t^2"))
    assert not is_monic(2 * t - 1)
    assert is_monic(LaurentPoly.constant(1))
    assert degree_span(parse_poly("t^2 - t + 1")) == 2
    assert degree_span(LaurentPoly.constant(1)) == 0
    assert degree_span(t ** -1 - 3 + t) == 2
    for f in (is_monic, degree_span):
        with pytest.raises(ValueError):
            f(LaurentPoly({}))


def test_half_integer_powers_are_exact():
    root = LaurentPoly({(1,): 1})
    assert root * root == t
    assert str(root - root ** -1) == "-t^(-1/2) + t^(1/2)"


@given(polys())
def test_format_parse_round_trip(p):
    assert parse_poly(str(p)) == p


@given(polys(("a", "w")))
def test_format_parse_round_trip_two_variables(p):
    assert parse_poly(str(p), ("a", "w")) == p


def test_parse_rejects_garbage():
    with pytest.raises(ValueError, match="unknown variable"):
        parse_poly("1 + x")
    with pytest.raises(ValueError):
        parse_poly("1 + + t")


def test_exact_division():
    assert (t ** 3 - 1).exact_div(t - 1) == t ** 2 + t + 1
    with pytest.raises(ArithmeticError):
        (t ** 3 - 2).exact_div(t - 1)


def test_substitute_half_powers():
    w = LaurentPoly2({(0, 1): 1, (0, -1): 1}, ("a", "w"))
    root = LaurentPoly({(1,): 1})
    out = w.substitute({"a": 1, "w": t}, ("t",))
    assert out == t + t ** -1
    assert LaurentPoly1({Fraction(1, 2): 1}, "w").substitute({"w": t ** 2}, ("t",)) == t
    with pytest.raises(ArithmeticError):
        LaurentPoly1({Fraction(1, 2): 1}, "w").substitute({"w": root + 1}, ("t",))
