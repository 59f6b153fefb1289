"""Exact Laurent arithmetic: spec'd examples plus algebraic property tests."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from beltmatch.errors import DimensionMismatchError, InexactDivisionError, PoleError
from beltmatch.laurent import LaurentPolynomial as LP


def parse2(text: str) -> LP:
    return LP.parse(text, 2)


def parse3(text: str) -> LP:
    return LP.parse(text, 3)


# -- add / mul ---------------------------------------------------------------


def test_add_identity_and_inverse():
    p = parse2("x2 + 1")
    assert p + LP.zero(2) == p
    q = parse3("x1*x3")
    assert q + (-q) == LP.zero(3)
    assert (q + (-q)).is_zero


def test_add_merges_coefficients():
    assert parse3("x2 + 1") + parse3("x1*x3 + x2") == parse3("x1*x3 + 2*x2 + 1")


def test_mul_identity_and_cancellation():
    p = parse2("x2 + 1")
    assert p * LP.one(2) == p
    assert LP.parse("x1^-1", 2) * LP.parse("x1", 2) == LP.one(2)


def test_mul_square():
    assert parse2("x2 + 1") * parse2("x2 + 1") == parse2("x2^2 + 2*x2 + 1")


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        parse2("x1") + parse3("x1")
    with pytest.raises(DimensionMismatchError):
        parse2("x1") * parse3("x1")


# -- div_exact ----------------------------------------------------------------


def test_div_exact_first_exchange_binomial():
    assert parse2("x2 + 1").div_exact(parse2("x1")) == LP.parse("x1^-1*x2 + x1^-1", 2)


def test_div_exact_unit_divisor():
    p = parse3("x1*x3 + 2*x2 + 1")
    assert p.div_exact(LP.one(3)) == p


def test_div_exact_belt_quotient():
    # (x2+1)^2 + x1^2*(1+x2) = (x2+1)*((x2+1) + x1^2), from the B_2 belt.
    numerator = parse2("x2^2 + 2*x2 + 1") + parse2("x1^2") * parse2("x2 + 1")
    assert numerator.div_exact(parse2("x2 + 1")) == parse2("x1^2 + x2 + 1")


def test_div_exact_rejects_remainder():
    with pytest.raises(InexactDivisionError):
        parse2("x2 + 1").div_exact(parse2("x2 + 2"))
    with pytest.raises(InexactDivisionError):
        parse2("2*x2 + 1").div_exact(parse2("2"))
    with pytest.raises(ZeroDivisionError):
        parse2("x2").div_exact(LP.zero(2))


# -- substitute -----------------------------------------------------------------


def test_substitute_folding_map():
    # A_3 -> C_2 identification with n = 2: x1 -> x2, x2 -> x1, x3 -> x2.
    x1, x2 = LP.variable(0, 2), LP.variable(1, 2)
    image = parse3("x1*x3 + x2").substitute({0: x2, 1: x1, 2: x2})
    assert image == parse2("x2^2 + x1")


def test_substitute_empty_assignment():
    p = parse3("x1*x3 + 2*x2 + 1")
    assert p.substitute({}) == p


def test_substitute_identification_collapse():
    # Two variables identified: x1bar + x1 -> 2 x1 in a smaller ring.
    p = LP.variable(0, 2) + LP.variable(1, 2)
    folded = p.substitute({0: LP.variable(0, 1), 1: LP.variable(0, 1)})
    assert folded == LP.parse("2*x1", 1)


def test_substitute_zero_into_negative_power_is_a_pole():
    p = LP.parse("x1^-1", 2)
    with pytest.raises(PoleError):
        p.substitute({0: LP.zero(2)})
    with pytest.raises(PoleError):
        p.substitute({0: parse2("x2 + 1")})


def test_substitute_zero_into_positive_power():
    p = parse2("x1*x2 + x2 + 1")
    assert p.substitute({0: LP.zero(2)}) == parse2("x2 + 1")


# -- split -----------------------------------------------------------------------


def test_split_exchange_quotient():
    p = parse2("x2 + 1").div_exact(parse2("x1"))
    split = p.split()
    assert split.numerator == parse2("x2 + 1")
    assert split.denominator == (1, 0)
    assert split.recombine() == p


def test_split_initial_variable_has_negative_entry():
    split = parse2("x1").split()
    assert split.numerator == LP.one(2)
    assert split.denominator == (-1, 0)
    assert split.recombine() == parse2("x1")


def test_split_belt_variable():
    p = parse3("x2^2 + 2*x2 + x1*x3 + 1") * LP.parse("x1^-1*x2^-1*x3^-1", 3)
    split = p.split()
    assert split.numerator == parse3("x2^2 + 2*x2 + x1*x3 + 1")
    assert split.denominator == (1, 1, 1)


def test_split_zero_rejected():
    with pytest.raises(ValueError):
        LP.zero(2).split()


# -- text form ----------------------------------------------------------------------


def test_canonical_text_example():
    assert parse3("x1*x3 + 2*x2 + 1").to_text() == "x1*x3 + 2*x2 + 1"


def test_text_negative_coefficients_and_exponents():
    p = LP.parse("-y2 + 1", 3, names=("y0", "y1", "y2"))
    assert p.to_text(("y0", "y1", "y2")) == "-y2 + 1"
    q = LP.parse("x1^-1*x2 + x1^-1", 2)
    assert q.to_text() == "x1^-1*x2 + x1^-1"


def test_zero_text_roundtrip():
    assert LP.zero(2).to_text() == "0"
    assert LP.parse("0", 2) == LP.zero(2)


def test_factorization_text():
    p = parse3("x2^2 + 2*x2 + x1*x3 + 1") * LP.parse("x1^-1*x2^-1*x3^-1", 3)
    # Canonical order is descending lexicographic on exponent vectors, so the
    # x1-bearing term sorts first.
    assert p.split().to_text() == "(x1*x3 + x2^2 + 2*x2 + 1) / x1*x2*x3"
    assert parse2("x2 + 1").split().to_text() == "x2 + 1"


# -- property tests ----------------------------------------------------------------

coeffs = st.integers(min_value=-5, max_value=5)
exponents = st.tuples(*(st.integers(min_value=-3, max_value=3),) * 3)


@st.composite
def polys(draw) -> LP:
    terms = draw(st.dictionaries(exponents, coeffs, max_size=5))
    return LP(terms, 3)


@given(polys(), polys())
def test_commutativity(p, q):
    assert p + q == q + p
    assert p * q == q * p


@given(polys(), polys(), polys())
@settings(max_examples=60)
def test_associativity_and_distributivity(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys())
def test_split_recombines(p):
    if p.is_zero:
        return
    assert p.split().recombine() == p


@given(polys(), exponents)
def test_monomial_division_inverts_multiplication(p, exps):
    q = LP.monomial(1, exps)
    assert (p * q).div_exact(q) == p


@given(polys(), polys())
@settings(max_examples=60)
def test_general_division_inverts_multiplication(p, q):
    if q.is_zero:
        return
    assert (p * q).div_exact(q) == p


@given(polys(), polys())
@settings(max_examples=60)
def test_substitute_is_a_ring_homomorphism(p, q):
    x2, x3 = LP.variable(1, 3), LP.variable(2, 3)
    assignment = {0: x2 * x3, 1: x3}
    assert (p * q).substitute(assignment) == p.substitute(assignment) * q.substitute(assignment)
    assert (p + q).substitute(assignment) == p.substitute(assignment) + q.substitute(assignment)


@given(polys())
def test_text_roundtrip(p):
    assert LP.parse(p.to_text(), 3) == p
