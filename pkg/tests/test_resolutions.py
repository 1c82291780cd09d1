from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcmforge import (GradedRing, HilbertSeries, Ideal, PolynomialRing, canonical_module, depth,
                      ext_module, ext_self_canonical, hom_module, is_regular_sequence,
                      krull_dimension, minimal_free_resolution,
                      syzygies)
from mcmforge.corpus import (hypersurface, node, oracle_corpus, polynomial_ring, r3, r4, r6,
                             rp2, three_planes)
from mcmforge.errors import CapExceeded, ZeroModule
from mcmforge.modules import col_from_polys, cyclic_module, free_module
from mcmforge.oracle import brute_hilbert_function
from mcmforge.resolutions import depth_auslander_buchsbaum, projective_dimension

F2xy = PolynomialRing(2, "xy")


def ring(gens, names="xy", p=2, weights=None):
    return GradedRing.from_strings(p, names, gens, weights)


# --- syzygies ---------------------------------------------------------------

def test_koszul_syzygy_two_variables():
    K = syzygies(F2xy, [col_from_polys([F2xy(v)]) for v in "xy"], [0])
    assert K.embedding == [col_from_polys([F2xy("y"), F2xy("x")])]
    assert K.twists == (2,) and K.relations == []


def test_syzygy_of_nonzerodivisor_is_zero():
    K = syzygies(F2xy, [col_from_polys([F2xy("x+y")])], [0])
    assert K.is_zero() and K.embedding == []


def test_koszul_three_variables():
    S = PolynomialRing(2, "xyz")
    K = syzygies(S, [col_from_polys([S(v)]) for v in "xyz"], [0])
    assert len(K.embedding) == 3 and K.twists == (2, 2, 2)


# --- resolutions ------------------------------------------------------------

def test_betti_examples():
    assert polynomial_ring().resolution.betti_numbers() == [1]
    assert ring(["x"]).resolution.betti_numbers() == [1, 1]
    F = r4().resolution
    assert F.betti_numbers() == [1, 4, 4, 1] and F.length == 3
    assert F.is_complex() and not F.has_unit_entries()


def test_betti_table_r4():
    F = r4().resolution
    assert F.twists[1] == [2, 2, 2, 2] and F.twists[3] == [4]


def test_length_cap():
    M = r4().module
    F = minimal_free_resolution(M, length_cap=1)
    assert F.betti_numbers()[:2] == [1, 4]
    with pytest.raises(CapExceeded):
        minimal_free_resolution(M, length_cap=1, require_complete=True)


@pytest.mark.parametrize("name", sorted(oracle_corpus()))
def test_resolutions_are_complexes(name):
    F = oracle_corpus()[name].resolution
    assert F.is_complex() and not F.has_unit_entries()


# --- Hilbert series ---------------------------------------------------------

def test_hilbert_examples():
    assert polynomial_ring().hilbert_series() == HilbertSeries([1], (1, 1))
    assert ring(["x^2"]).hilbert_series() == HilbertSeries([1, 1], (1,))
    H = r3().hilbert_series()
    assert H == HilbertSeries([1, 2, 2, -1], (1, 1))
    assert str(H.reduced()) == "(1+2t+2t^2-t^3)/(1-t)^2"


def test_hilbert_weighted():
    R = ring(["x^3-y^2"], p=5, weights=(2, 3))
    H = R.hilbert_series()
    assert H.coefficients(0, 8) == [1, 0, 1, 1, 1, 1, 1, 1, 1]
    assert H.dimension() == 1


def test_series_arithmetic():
    a = HilbertSeries([1], (1,))
    assert (a - a.shift(1)).length() == 1
    assert (a + a).multiplicity() == Fraction(2)
    assert HilbertSeries([1, -1], (1,)) == HilbertSeries([1], ())


@pytest.mark.parametrize("name", sorted(oracle_corpus()))
def test_hilbert_matches_oracle(name):
    R = oracle_corpus()[name]
    assert R.hilbert_series().coefficients(0, 12) == brute_hilbert_function(R, 12)


def test_oracle_agrees_on_random_quotients_of_free_modules():
    S = PolynomialRing(3, "xyz")
    M = cyclic_module(S, None)
    assert M.hilbert_series().coefficients(0, 5) == [1, 3, 6, 10, 15, 21]


# --- dimension and depth ----------------------------------------------------

def test_dimension_examples():
    assert krull_dimension(polynomial_ring(2, "xyz").module) == 3
    assert krull_dimension(ring(["x", "y"]).module) == 0
    assert r3().dimension == 2
    assert krull_dimension(free_module(F2xy, ())) == -1


def test_depth_examples():
    assert depth(polynomial_ring().module) == 2
    assert r4().depth == 1
    assert r3().depth == 1
    with pytest.raises(ZeroModule):
        depth(free_module(F2xy, ()))


CORPUS = dict(oracle_corpus(), node=node(), R6=r6(), three_planes=three_planes(),
              quadric=hypersurface(3, "xyz", "x^2+y^2+z^2"))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_depth_ext_equals_auslander_buchsbaum(name):
    M = CORPUS[name].module
    assert depth(M) == depth_auslander_buchsbaum(M)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_local_cohomology_vanishes_below_depth(name):
    R = CORPUS[name]
    table = R.lc_table
    for i in range(R.depth):
        assert table.lengths[i] == 0


# --- Ext, local cohomology, canonical module --------------------------------

def test_ext_examples():
    S = polynomial_ring()
    E0 = ext_module(S.module, 0)
    assert E0.hilbert_series() == S.hilbert_series().shift(2)
    R = ring(["x"])
    E1 = ext_module(R.module, 1)
    # Ext^1(S/(x), S(-2)) = S/(x)(1 - 2) up to the normalizing twist
    assert E1.hilbert_series() == R.hilbert_series().shift(1)
    E3 = ext_module(r4().module, 3)
    assert E3.hilbert_series().length() == 1


def test_lc_tables():
    assert r4().lc_table.as_list() == [0, 1]
    assert r6().lc_table.as_list() == [0, "inf"]
    assert node().lc_table.as_list() == [0]
    assert three_planes().lc_table.as_list() == [0, 1, 0]
    assert r4().lc_table.degrees[1] == [0]


def test_canonical_examples():
    w = canonical_module(hypersurface(2, "xy", "x^2+y^2"))
    assert w.rank == 1 and w.twists == (0,)
    S = polynomial_ring()
    wS = canonical_module(S)
    assert wS.rank == 1 and wS.twists == (2,) and wS.relations == []
    assert r4().canonical.rank == 2 and r4().canonical.twists == (2, 2)
    with pytest.raises(ZeroModule):
        canonical_module(ring(["1"]))


GORENSTEIN = [polynomial_ring(), polynomial_ring(3, "xyz"), node(),
              hypersurface(3, "xyz", "x^2+y^2+z^2"), hypersurface(2, "xy", "x^3+y^3"),
              ring(["x^2", "y^2"])]


@pytest.mark.parametrize("R", GORENSTEIN, ids=lambda R: R.name)
def test_gorenstein_canonical_is_free(R):
    w = R.canonical
    assert w.rank == 1
    assert w.hilbert_series() == R.hilbert_series().shift(w.twists[0])
    assert R.is_gorenstein()


def test_hom_examples():
    R = r4()
    H = hom_module(R.module, R.module)
    assert H.hilbert_series() == R.hilbert_series()
    Rx = cyclic_module(F2xy, None)
    M = cyclic_module(F2xy, Ideal(F2xy, [F2xy("x")]))
    assert hom_module(M, Rx).is_zero()
    w = R.canonical
    E = hom_module(w, w)
    assert E.hilbert_series().coefficients(0, 5) == [2, 4, 6, 8, 10, 12]
    assert R.hilbert_series().coefficients(0, 5) == [1, 4, 6, 8, 10, 12]


@pytest.mark.parametrize("R", [r3(), r4(), node(), rp2(), r6(), polynomial_ring(),
                               hypersurface(3, "xyz", "x^2+y^2+z^2")], ids=lambda R: R.name)
def test_ext_self_canonical(R):
    assert ext_self_canonical(R) is True


def test_regular_sequences():
    S = polynomial_ring()
    assert is_regular_sequence([S("x"), S("y")], S.module)
    N = node()
    assert not is_regular_sequence([N("x")], N.module)
    R = r4()
    assert is_regular_sequence([R("x+z")], R.module)
    assert not is_regular_sequence([R("x")], R.module)


# --- random monomial ideals: invariants -------------------------------------

@st.composite
def monomial_quotient(draw):
    n = draw(st.integers(2, 3))
    names = "xyz"[:n]
    gens = draw(st.lists(st.tuples(*[st.integers(0, 2)] * n).filter(any), min_size=1,
                         max_size=4))
    text = ["*".join(f"{v}^{a}" for v, a in zip(names, m) if a) for m in gens]
    return ring(text, names)


@settings(max_examples=25, deadline=None)
@given(R=monomial_quotient())
def test_random_quotients(R):
    F = R.resolution
    assert F.is_complex()
    M = R.module
    assert R.hilbert_series().coefficients(0, 6) == brute_hilbert_function(R, 6)
    assert depth(M) == depth_auslander_buchsbaum(M) == R.ngens - projective_dimension(M)
    for i in range(R.depth):
        assert R.lc_table.lengths[i] == 0
