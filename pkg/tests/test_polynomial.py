from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chords.errors import LimitExceededError, MissingSymbolError
from symbolic.polynomial import (
    SYMBOL_COUNT,
    FMonomial,
    FRing,
    f,
    poly_from_json,
    poly_from_terms,
    poly_terms,
    poly_to_json,
    poly_to_str,
    rational_str,
    scale,
    substitute,
    symbols_used,
    total_degree,
)

monomials = st.lists(st.integers(min_value=0, max_value=3), max_size=3).map(FMonomial.from_indices)
polys = st.lists(
    st.tuples(monomials, st.fractions(min_value=-3, max_value=3, max_denominator=4)), max_size=4
).map(poly_from_terms)


def test_generators():
    assert f(-1) == FRing.zero
    assert f(0) != f(1)
    with pytest.raises(LimitExceededError):
        f(SYMBOL_COUNT)


def test_monomial_forms():
    m = FMonomial.from_indices([0, 1, 0])
    assert m.exponents == ((0, 2), (1, 1))
    assert m.degree == 3
    assert str(m) == "f_0^2*f_1"
    assert m.to_json() == {"0": 2, "1": 1}
    assert m.to_poly() == f(0) ** 2 * f(1)
    assert m * FMonomial.from_indices([2]) == FMonomial.from_exponents({0: 2, 1: 1, 2: 1})
    assert str(FMonomial()) == "1"
    assert FMonomial.from_exponents({3: 0}) == FMonomial()


def test_terms_are_graded():
    p = 3 * f(0) ** 2 * f(2) + f(0) * f(1) ** 2 + f(0) * f(1)
    degrees = [m.degree for m, _ in poly_terms(p)]
    assert degrees == sorted(degrees)
    assert poly_to_str(p).startswith("f_0*f_1 + ")
    assert total_degree(p) == 3
    assert symbols_used(p) == [0, 1, 2]


def test_rationals():
    assert rational_str(Fraction(1, 2)) == "1/2"
    assert rational_str(4) == "4"
    assert rational_str(Fraction(-6, 3)) == "-2"


def test_json_form():
    p = scale(f(0) * f(1), Fraction(1, 2)) - f(2)
    data = poly_to_json(p)
    assert {"m": {"0": 1, "1": 1}, "c": "1/2"} in data
    assert {"m": {"2": 1}, "c": "-1"} in data
    assert poly_from_json(data) == p


def test_substitute():
    p = 3 * f(0) ** 2 * f(2) + f(0) * f(1) ** 2
    assert substitute(p, {0: 1, 1: 2, 2: Fraction(1, 3)}) == 5
    with pytest.raises(MissingSymbolError):
        substitute(p, {0: 1, 1: 1})
    assert substitute(FRing.zero, {}) == 0


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(polys, st.dictionaries(st.integers(0, 3), st.integers(-3, 3), min_size=4, max_size=4))
def test_substitution_is_a_homomorphism(a, values):
    b = a * f(1) + f(0)
    assert substitute(a * b, values) == substitute(a, values) * substitute(b, values)
    assert substitute(a + b, values) == substitute(a, values) + substitute(b, values)


def test_substitute_constants_and_extra_values():
    assert substitute(FRing.one * Fraction(-2, 3), {}) == Fraction(-2, 3)
    value = substitute(f(0) * f(5), {0: Fraction(1, 2), 5: 4, 7: 100})
    assert value == 2 and isinstance(value, Fraction)


@given(polys, st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=3), min_size=4, max_size=4))
def test_substitute_matches_termwise_sum(p, point):
    expected = Fraction(0)
    for m, c in poly_terms(p):
        term = Fraction(c)
        for j, e in m.exponents:
            term *= point[j] ** e
        expected += term
    assert substitute(p, dict(enumerate(point))) == expected
