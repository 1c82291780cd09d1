from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcmforge import (Grading, MonomialOrder, PolynomialRing, monomial_compare, parse_polynomial,
                      print_polynomial, weighted_degree)
from mcmforge.errors import LengthMismatch, MalformedExpression, NotPrime, UnknownVariable
from mcmforge.field import PrimeFieldElement, check_characteristic, is_prime
from mcmforge.monomial import EQUAL, GREATER, LESS

F2 = PolynomialRing(2, "xy")


# --- prime fields -----------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_field_axioms_exhaustive(p):
    els = [PrimeFieldElement(a, p) for a in range(p)]
    zero, one = els[0], els[1]
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * a.inverse() == one
    for a, b in product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
    for a, b, c in product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        PrimeFieldElement(0, 5).inverse()


def test_characteristic_checks():
    assert is_prime(2) and is_prime(7919) and not is_prime(1) and not is_prime(91)
    for bad in (4, 1, 2 ** 31 + 11):
        with pytest.raises(NotPrime):
            check_characteristic(bad)
    with pytest.raises(NotPrime):
        PolynomialRing(6, "x")


# --- monomials and orders ---------------------------------------------------

def test_weighted_degree():
    assert weighted_degree((2, 1), Grading((1, 1))) == 3
    assert weighted_degree((2, 1), Grading((2, 3))) == 7
    assert weighted_degree((), Grading(())) == 0
    with pytest.raises(LengthMismatch):
        weighted_degree((1, 2, 3), Grading((1, 1)))


def test_grading_rejects_nonpositive_weights():
    with pytest.raises(ValueError):
        Grading((1, 0))


def test_compare_examples():
    assert monomial_compare((2, 0), (1, 1)) == GREATER
    assert monomial_compare((1, 0), (0, 2)) == LESS
    assert monomial_compare((3, 4), (3, 4)) == EQUAL
    with pytest.raises(LengthMismatch):
        monomial_compare((1,), (1, 2))


ORDERS = [MonomialOrder(), MonomialOrder("weighted-lex"), MonomialOrder("elimination", 1)]
mono3 = st.tuples(*[st.integers(0, 4)] * 3)


@settings(max_examples=200, deadline=None)
@given(a=mono3, b=mono3, c=mono3, k=st.sampled_from(range(len(ORDERS))),
       w=st.tuples(*[st.integers(1, 3)] * 3))
def test_compare_is_a_monomial_order(a, b, c, k, w):
    o, g = ORDERS[k], Grading(w)
    ab = monomial_compare(a, b, o, g)
    assert monomial_compare(b, a, o, g) == -ab
    assert (ab == EQUAL) == (a == b)
    if ab == LESS and monomial_compare(b, c, o, g) == LESS:
        assert monomial_compare(a, c, o, g) == LESS
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    assert monomial_compare(ac, bc, o, g) == ab
    if o.kind != "elimination":
        if weighted_degree(a, g) < weighted_degree(b, g):
            assert ab == LESS


def test_elimination_order_eliminates():
    o = MonomialOrder("elimination", 1)
    assert monomial_compare((1, 0, 0), (0, 5, 5), o) == GREATER


# --- polynomials ------------------------------------------------------------

def test_parse_examples():
    f = parse_polynomial("x^2+y", F2)
    assert len(f) == 2
    assert parse_polynomial("x^2+x^2", F2).is_zero()
    with pytest.raises(UnknownVariable):
        parse_polynomial("z+1", F2)
    with pytest.raises(MalformedExpression):
        parse_polynomial("x+*y", F2)
    with pytest.raises(MalformedExpression):
        parse_polynomial("(x+y", F2)


def test_parse_reduces_mod_p():
    S = PolynomialRing(5, "xy")
    assert parse_polynomial("7*x - 2*x", S).is_zero()
    assert parse_polynomial("3x y^2", S) == S("3*x*y^2")
    assert parse_polynomial("(x+y)^5", S) == S("x^5+y^5")


def test_arithmetic_and_frobenius():
    S = PolynomialRing(3, "xyz")
    f, g = S("x+y"), S("y-z")
    assert (f * g) == S("x*y - x*z + y^2 - y*z")
    assert f ** 3 == f.frobenius(3) == S("x^3+y^3")
    assert (f - f).is_zero()
    assert S("x^2*y").degree() == 3
    assert S("x^2+y").is_homogeneous() is False


def test_weighted_homogeneity():
    S = PolynomialRing(5, "xy", weights=(2, 3))
    assert S("x^3 - y^2").is_homogeneous()
    assert S("x^3 - y^2").homogeneous_degree() == 6


def _poly(S, terms):
    return S({tuple(m): c for m, c in terms})


poly_terms = st.lists(st.tuples(st.tuples(*[st.integers(0, 3)] * 3), st.integers(0, 6)),
                      max_size=6)


@settings(max_examples=150, deadline=None)
@given(terms=poly_terms, p=st.sampled_from([2, 3, 5, 7]))
def test_parse_print_roundtrip(terms, p):
    S = PolynomialRing(p, "xyz")
    f = _poly(S, terms)
    assert parse_polynomial(print_polynomial(f), S) == f


@settings(max_examples=100, deadline=None)
@given(a=poly_terms, b=poly_terms, c=poly_terms)
def test_ring_axioms(a, b, c):
    S = PolynomialRing(3, "xyz")
    f, g, h = _poly(S, a), _poly(S, b), _poly(S, c)
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
