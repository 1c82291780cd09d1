"""Ideals of a polynomial ring: Groebner bases, normal forms, colon ideals and Fedder's test."""
from .encoding import TermEncoder
from .engine import Reducer, buchberger, kernel
from .errors import NotHomogeneous, UnitIdeal
from .polynomial import Polynomial


def _encoder(ring, order=None):
    # rank one: the order's own first part already ranks by degree when it should
    return TermEncoder(ring.weights, order or ring.order, degree_top=False)


def poly_to_vec(enc, f):
    return {enc.encode(0, m): c for m, c in f.terms.items()}


def vec_to_poly(enc, ring, vec):
    return Polynomial(ring, {enc.exps(k): c for k, c in vec.items()})


class Ideal:
    """Ideal of a :class:`PolynomialRing` with a lazily cached reduced Groebner basis."""

    def __init__(self, ring, generators=()):
        self.ring = ring
        gens = []
        for g in generators:
            g = ring(g) if not isinstance(g, Polynomial) else g
            if g.ring != ring:
                g = Polynomial(ring, g.terms)
            if g:
                gens.append(g)
        self.generators = tuple(gens)
        self._gb = {}

    @property
    def homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators)) or '0'})"

    def _compute(self, order):
        order = order or self.ring.order
        if order not in self._gb:
            enc = _encoder(self.ring, order)
            res = buchberger([poly_to_vec(enc, g) for g in self.generators], enc, self.ring.p,
                             coprime=True)
            red = Reducer(enc, self.ring.p)
            for v in res.basis:
                red.add(v)
            self._gb[order] = (enc, res, red)
        return self._gb[order]

    def groebner_basis(self, order=None):
        enc, res, _ = self._compute(order)
        ring = self.ring if order is None else self.ring.with_order(order)
        return [vec_to_poly(enc, ring, v) for v in res.basis]

    def minimal_generators(self):
        """Minimal homogeneous generating set (a subset of the given generators)."""
        if not self.homogeneous:
            raise NotHomogeneous("minimal generators need a homogeneous ideal")
        _, res, _ = self._compute(None)
        return [self.generators[i] for i in res.min_gens]

    def lead_monomials(self, order=None):
        enc, res, _ = self._compute(order)
        return [enc.exps(max(v)) for v in res.basis]

    def normal_form(self, f, order=None):
        enc, _, red = self._compute(order)
        f = self.ring(f) if not isinstance(f, Polynomial) else f
        return vec_to_poly(enc, self.ring, red.reduce(poly_to_vec(enc, f)))

    def contains(self, f):
        return not self.normal_form(f)

    def __contains__(self, f):
        return self.contains(f)

    def is_unit(self):
        return any(not any(m) for m in self.lead_monomials())

    def is_zero(self):
        return not self.generators

    def is_subset(self, other):
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.is_subset(other) and other.is_subset(self)

    __hash__ = None

    def __add__(self, other):
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other):
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def reduced(self):
        """Same ideal, generated by its reduced Groebner basis."""
        return Ideal(self.ring, self.groebner_basis())


def groebner_basis(I, o=None):
    return I.groebner_basis(o)


def normal_form(f, I, o=None):
    return I.normal_form(f, o)


def _sparse(f, row=0):
    return {(row, m): c for m, c in f.terms.items()}


def _require_homogeneous(*ideals):
    for I in ideals:
        if not I.homogeneous:
            raise NotHomogeneous("colon and intersection are implemented for homogeneous ideals")


def ideal_quotient(I, J):
    """(I : J) = {f : f J in I}, intersected over the generators of J."""
    if isinstance(J, Polynomial):
        J = Ideal(I.ring, [J])
    _require_homogeneous(I, J)
    ring = I.ring
    result = None
    for g in J.generators:
        Q = _quotient_by_element(I, g)
        result = Q if result is None else intersection(result, Q)
    if result is None:          # J = 0
        return Ideal(ring, [ring.one()])
    return result


def _quotient_by_element(I, g):
    ring = I.ring
    cols = [_sparse(g)] + [_sparse(h) for h in I.generators]
    twists = [g.homogeneous_degree()] + [h.homogeneous_degree() for h in I.generators]
    syz = kernel(cols, (0,), twists, ring.weights, ring.order, ring.p)
    gens = [Polynomial(ring, {e: c for (j, e), c in s.items() if j == 0}) for s in syz]
    return Ideal(ring, gens).reduced()


def intersection(I, J):
    _require_homogeneous(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    a = len(I.generators)
    cols = [_sparse(h) for h in I.generators] + [_sparse(-h) for h in J.generators]
    twists = [h.homogeneous_degree() for h in I.generators + J.generators]
    syz = kernel(cols, (0,), twists, ring.weights, ring.order, ring.p)
    gens = []
    for s in syz:
        f = ring.zero()
        for (j, e), c in s.items():
            if j < a:
                f = f + I.generators[j].mul_monomial(e, c)
        gens.append(f)
    return Ideal(ring, gens).reduced()


def frobenius_power(I, e):
    """I^[p^e]: generated by the p^e-th powers of the generators."""
    if e < 1:
        raise ValueError("e must be positive")
    q = I.ring.p ** e
    return Ideal(I.ring, [g.frobenius(q) for g in I.generators])


def colon_poly(I, f):
    return _quotient_by_element(I, f)


def drop_bracket_power(f, q):
    """Normal form modulo the monomial ideal m^[q] = (x_1^q, ..., x_n^q)."""
    return Polynomial(f.ring, {m: c for m, c in f.terms.items() if all(x < q for x in m)})


def fedder_test(I, e=1):
    """Fedder's criterion: is (I^[q] : I) not contained in m^[q]?"""
    ring = I.ring
    if I.is_unit():
        raise UnitIdeal("Fedder's criterion needs a proper ideal")
    q = ring.p ** e
    if I.is_zero():
        return True
    C = ideal_quotient(frobenius_power(I, e), I)
    return any(drop_bracket_power(g, q) for g in C.generators)
