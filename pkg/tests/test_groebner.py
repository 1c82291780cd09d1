import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mcmforge import (Ideal, PolynomialRing, fedder_test, frobenius_power, groebner_basis,
                      ideal_quotient, intersection, normal_form)
from mcmforge.errors import NotHomogeneous, UnitIdeal

S2 = PolynomialRing(2, "xy")
S4 = PolynomialRing(2, "xyzw")


def ideal(S, *gens):
    return Ideal(S, [S(g) for g in gens])


def as_set(polys):
    return {str(f) for f in polys}


# --- independent division used for post-hoc checks --------------------------

def divide(f, basis):
    """Textbook multivariate division; returns the remainder."""
    S = f.ring
    rem = S.zero()
    while not f.is_zero():
        m, c = f.lead_monomial(), f.lead_coefficient()
        for g in basis:
            lm = g.lead_monomial()
            if all(a >= b for a, b in zip(m, lm)):
                q = S.monomial(tuple(a - b for a, b in zip(m, lm)),
                               c * pow(g.lead_coefficient(), S.p - 2, S.p))
                f = f - q * g
                break
        else:
            rem = rem + S.monomial(m, c)
            f = f - S.monomial(m, c)
    return rem


def s_polynomial(f, g):
    S = f.ring
    lf, lg = f.lead_monomial(), g.lead_monomial()
    l = tuple(max(a, b) for a, b in zip(lf, lg))
    a = S.monomial(tuple(x - y for x, y in zip(l, lf)), pow(f.lead_coefficient(), S.p - 2, S.p))
    b = S.monomial(tuple(x - y for x, y in zip(l, lg)), pow(g.lead_coefficient(), S.p - 2, S.p))
    return a * f - b * g


# --- examples ---------------------------------------------------------------

def test_gb_examples():
    assert as_set(groebner_basis(ideal(S2, "x"))) == {"x"}
    gens = ["x*z", "x*w", "y*z", "y*w"]
    assert as_set(groebner_basis(ideal(S4, *gens))) == as_set(S4(g) for g in gens)
    G = groebner_basis(ideal(S2, "x^2+x*y", "y^2"))
    assert as_set(G) == as_set([S2("x^2+x*y"), S2("y^2")])
    assert divide(s_polynomial(*G), G).is_zero()


def test_unit_ideal_basis():
    G = groebner_basis(ideal(S2, "x", "x+1"))
    assert [str(g) for g in G] == ["1"]
    assert ideal(S2, "x", "x+1").is_unit()


def test_normal_form_examples():
    I = ideal(S2, "x^2+x*y", "y^2")
    assert normal_form(S2("x^2+x*y"), I).is_zero()
    assert normal_form(S2("x"), ideal(S2, "x")).is_zero()
    assert normal_form(S2("y"), ideal(S2, "x")) == S2("y")


def test_quotient_examples():
    assert ideal_quotient(ideal(S2, "x^2"), ideal(S2, "x")) == ideal(S2, "x")
    I = ideal(S4, "x*z", "x*w", "y*z", "y*w")
    assert ideal_quotient(I, ideal(S4, "x")) == ideal(S4, "z", "w")
    assert ideal_quotient(I, ideal(S4, "1")) == I


def test_quotient_requires_homogeneous():
    with pytest.raises(NotHomogeneous):
        ideal_quotient(ideal(S2, "x^2+y"), ideal(S2, "x"))


def test_intersection():
    I = intersection(ideal(S4, "x", "y"), ideal(S4, "z", "w"))
    assert I == ideal(S4, "x*z", "x*w", "y*z", "y*w")


def test_frobenius_power_examples():
    assert frobenius_power(ideal(S2, "x+y"), 1) == ideal(S2, "x^2+y^2")
    assert as_set(frobenius_power(ideal(S2, "x", "y"), 2).generators) == {"x^4", "y^4"}
    assert as_set(frobenius_power(ideal(S2, "x*y"), 1).generators) == {"x^2*y^2"}


def test_fedder_examples():
    assert fedder_test(Ideal(S2, [])) is True
    assert fedder_test(ideal(S2, "x*y")) is True
    assert fedder_test(ideal(S2, "x^2")) is False
    with pytest.raises(UnitIdeal):
        fedder_test(ideal(S2, "1"))


def test_fedder_cusp_char_5():
    # x^3 - y^2 with weights (2,3): the cusp is not F-pure in any characteristic
    S = PolynomialRing(5, "xy", weights=(2, 3))
    assert fedder_test(Ideal(S, [S("x^3-y^2")])) is False
    # a smooth conic is F-split
    T = PolynomialRing(3, "xyz")
    assert fedder_test(Ideal(T, [T("x^2+y^2+z^2")])) is True


# --- properties -------------------------------------------------------------

def random_poly(draw, S, homogeneous_degree=None):
    n = S.ngens
    if homogeneous_degree is None:
        monos = st.tuples(*[st.integers(0, 3)] * n)
    else:
        monos = st.sampled_from(S.monomials_of_degree(homogeneous_degree))
    terms = draw(st.lists(st.tuples(monos, st.integers(1, S.p - 1)), min_size=1, max_size=4))
    return S({m: c for m, c in terms})


@st.composite
def small_ideal(draw, homogeneous=False):
    p = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(1, 3))
    S = PolynomialRing(p, "xyz"[:n])
    gens = []
    for _ in range(draw(st.integers(1, 3))):
        d = draw(st.integers(1, 3)) if homogeneous else None
        f = random_poly(draw, S, d)
        if homogeneous or f.degree() <= 3:
            gens.append(f)
    assume(gens and not all(g.is_zero() for g in gens))
    return Ideal(S, [g for g in gens if not g.is_zero()])


@settings(max_examples=60, deadline=None)
@given(I=small_ideal())
def test_spairs_reduce_to_zero(I):
    G = groebner_basis(I)
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            assert divide(s_polynomial(G[a], G[b]), G).is_zero()
    for g in I.generators:
        assert divide(g, G).is_zero()
    leads = [g.lead_monomial() for g in G]
    for a, la in enumerate(leads):
        for b, lb in enumerate(leads):
            if a != b:
                assert not all(x >= y for x, y in zip(lb, la))


@settings(max_examples=60, deadline=None)
@given(data=st.data(), I=small_ideal())
def test_normal_form_linear(data, I):
    S = I.ring
    f = random_poly(data.draw, S)
    g = random_poly(data.draw, S)
    nf = lambda h: normal_form(h, I)
    assert nf(f + g) == nf(nf(f) + nf(g))
    assert nf(f - nf(f)).is_zero()


@settings(max_examples=30, deadline=None)
@given(I=small_ideal(homogeneous=True), data=st.data())
def test_colon_times_J_in_I(I, data):
    S = I.ring
    J = Ideal(S, [random_poly(data.draw, S, data.draw(st.integers(1, 2)))
                  for _ in range(data.draw(st.integers(1, 2)))])
    assume(not J.is_zero())
    Q = ideal_quotient(I, J)
    for q in Q.generators:
        for j in J.generators:
            assert q * j in I
    for i in I.generators:
        assert i in Q


@settings(max_examples=30, deadline=None)
@given(I=small_ideal(homogeneous=True), data=st.data())
def test_fedder_invariant_under_permutation_and_units(I, data):
    assume(not I.is_unit())
    gens = list(I.generators)
    perm = data.draw(st.permutations(gens))
    unit = data.draw(st.integers(1, I.ring.p - 1))
    scaled = [perm[0] * unit] + list(perm[1:])
    expected = fedder_test(I)
    assert fedder_test(Ideal(I.ring, perm)) == expected
    assert fedder_test(Ideal(I.ring, scaled)) == expected
