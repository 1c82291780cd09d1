"""Graded modules presented by twisted free covers and homogeneous relation columns.

A column is a sparse dict ``{(row, exps): coefficient}``.  A presentation over
R = S/I stores only its R-relations; the ideal's generators times each basis
vector are added implicitly whenever the module is viewed over S.
"""
from .encoding import TermEncoder
from .engine import Reducer, buchberger, from_vec, kernel, to_vec
from .errors import NotHomogeneous
from .field import inverse
from .groebner import Ideal
from .hilbert import HilbertSeries, monomial_numerator
from .polynomial import Polynomial


# -- sparse columns --------------------------------------------------------

def col_degree(col, ring, twists):
    """Degree of a homogeneous column, None for a zero column."""
    degs = {ring.degree(e) + twists[r] for (r, e) in col}
    if len(degs) > 1:
        raise NotHomogeneous("relation column is not homogeneous")
    return degs.pop() if degs else None


def col_add(a, b, p, c=1):
    out = dict(a)
    for k, v in b.items():
        nv = (out.get(k, 0) + c * v) % p
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def col_mul_poly(col, f, p):
    """Multiply a column by a polynomial given as ``{exps: c}``."""
    out = {}
    for (r, e), v in col.items():
        for m, c in f.items():
            k = (r, tuple(a + b for a, b in zip(e, m)))
            out[k] = (out.get(k, 0) + v * c) % p
    return {k: v for k, v in out.items() if v}


def col_entry(col, row):
    return {e: v for (r, e), v in col.items() if r == row}


def col_from_polys(entries):
    """Column from a list of Polynomials (zeros allowed)."""
    out = {}
    for r, f in enumerate(entries):
        for e, c in f.terms.items():
            out[(r, e)] = c
    return out


def col_relabel(col, mapping):
    """Rename rows; rows mapped to None are dropped."""
    out = {}
    for (r, e), v in col.items():
        nr = mapping.get(r)
        if nr is not None:
            out[(nr, e)] = v
    return out


def unit_col(row, n):
    return {(row, (0,) * n): 1}


def compose(col, images, p):
    """Apply the map e_r -> images[r] (columns) to ``col``."""
    out = {}
    for (r, e), v in col.items():
        for (r2, e2), v2 in images[r].items():
            k = (r2, tuple(a + b for a, b in zip(e, e2)))
            out[k] = (out.get(k, 0) + v * v2) % p
    return {k: v for k, v in out.items() if v}


def ideal_columns(ideal, rank):
    """The columns g*e_j for every ideal generator g and basis vector e_j."""
    if ideal is None:
        return []
    out = []
    for j in range(rank):
        for g in ideal.generators:
            out.append({(j, e): c for e, c in g.terms.items()})
    return out


# -- presentations ---------------------------------------------------------

class Presentation:
    """coker(relations) over R = ring / ideal, generators in degrees ``twists``."""

    def __init__(self, ring, twists, relations=(), ideal=None, degrees=None):
        self.ring = ring
        self.twists = tuple(int(a) for a in twists)
        if ideal is not None and ideal.is_zero():
            ideal = None
        self.ideal = ideal
        rels, degs = [], []
        for k, col in enumerate(relations):
            col = {key: v % ring.p for key, v in col.items() if v % ring.p}
            if not col:
                continue
            rels.append(col)
            degs.append(col_degree(col, ring, self.twists))
        self.relations = rels
        self.rel_degrees = degs
        self._gb = None

    @property
    def rank(self):
        return len(self.twists)

    @property
    def p(self):
        return self.ring.p

    def __repr__(self):
        return (f"Presentation(rank={self.rank}, twists={list(self.twists)}, "
                f"relations={len(self.relations)}, over={'S/I' if self.ideal else 'S'})")

    def s_relations(self):
        return self.relations + ideal_columns(self.ideal, self.rank)

    def encoder(self, blocks=None):
        return TermEncoder(self.ring.weights, self.ring.order, self.twists, blocks)

    def _compute(self):
        if self._gb is None:
            enc = self.encoder()
            res = buchberger([to_vec(enc, c) for c in self.s_relations()], enc, self.p)
            red = Reducer(enc, self.p)
            for v in res.basis:
                red.add(v)
            self._gb = (enc, res, red)
        return self._gb

    def groebner_columns(self):
        enc, res, _ = self._compute()
        return [from_vec(enc, v) for v in res.basis]

    def lead_terms(self):
        enc, res, _ = self._compute()
        return [enc.decode(max(v)) for v in res.basis]

    def normal_form(self, col):
        enc, _, red = self._compute()
        return from_vec(enc, red.reduce(to_vec(enc, col)))

    def is_zero_element(self, col):
        return not self.normal_form(col)

    def hilbert_series(self):
        leads = {}
        for c, e in self.lead_terms():
            leads.setdefault(c, []).append(e)
        num = {}
        w = self.ring.weights
        for j, a in enumerate(self.twists):
            for k, v in monomial_numerator(leads.get(j, []), w).items():
                num[k + a] = num.get(k + a, 0) + v
        return HilbertSeries(num, w)

    def is_zero(self):
        zero = (0,) * self.ring.ngens
        units = {c for c, e in self.lead_terms() if e == zero}
        return len(units) == self.rank

    def shift(self, a):
        """M(-a): every degree raised by a."""
        return Presentation(self.ring, [t + a for t in self.twists], self.relations, self.ideal)

    def over(self, ideal):
        """Same module viewed over S/ideal (ideal must annihilate it)."""
        return Presentation(self.ring, self.twists, self.s_relations(), ideal)

    def as_s_module(self):
        return Presentation(self.ring, self.twists, self.s_relations(), None)

    def annihilated_by(self, f):
        """Does the polynomial f kill every generator?"""
        terms = f.terms if isinstance(f, Polynomial) else f
        n = self.ring.ngens
        return all(self.is_zero_element(col_mul_poly(unit_col(j, n), terms, self.p))
                   for j in range(self.rank))

    def minimal(self):
        return minimal_presentation(self)[0]

    def entry(self, row, k):
        return Polynomial(self.ring, col_entry(self.relations[k], row))

    def relation_matrix(self):
        return [[self.entry(r, k) for k in range(len(self.relations))] for r in range(self.rank)]


def free_module(ring, twists, ideal=None):
    return Presentation(ring, twists, (), ideal)


def cyclic_module(ring, ideal, twist=0):
    """S/ideal as an S-module."""
    return Presentation(ring, [twist], ideal_columns(ideal, 1))


def ring_module(ring, ideal):
    """R = S/ideal as a (free) module over itself."""
    return Presentation(ring, [0], (), ideal)


def direct_sum(mods):
    ring = mods[0].ring
    ideal = mods[0].ideal
    twists, rels = [], []
    for M in mods:
        off = len(twists)
        twists.extend(M.twists)
        rels.extend(col_relabel(c, {r: r + off for r in range(M.rank)}) for c in M.relations)
    return Presentation(ring, twists, rels, ideal)


class PresentationMap:
    """Bookkeeping from minimalization: where the original generators went."""

    def __init__(self, kept, images):
        self.kept = kept            # original indices of surviving generators
        self.images = images        # original generator -> column in the new generators


def minimal_presentation(M):
    """Minimal presentation of M and the induced generator map.

    Generators are removed by cancelling unit entries (first unit in a
    column-major scan); the surviving relations are then cut down to a
    minimal generating set of the relation module modulo I * F.
    """
    ring, p, n = M.ring, M.p, M.ring.ngens
    zero = (0,) * n
    rows = list(range(M.rank))
    images = {r: {(r, zero): 1} for r in rows}
    cols = [dict(c) for c in M.relations]
    while True:
        pivot = None
        for j, col in enumerate(cols):
            units = sorted(r for (r, e) in col if e == zero)
            if units:
                pivot = (j, units[0])
                break
        if pivot is None:
            break
        j, i = pivot
        piv = cols.pop(j)
        c = piv[(i, zero)]
        cinv = inverse(c, p)
        # e_i = -(1/c) * (rest of piv)
        rest = {k: v for k, v in piv.items() if k[0] != i}
        subst = {k: (-v * cinv) % p for k, v in rest.items()}
        newcols = []
        for col in cols:
            h = col_entry(col, i)
            if h:
                col = {k: v for k, v in col.items() if k[0] != i}
                col = col_add(col, col_mul_poly(subst, h, p), p)
            if col:
                newcols.append(col)
        cols = newcols
        for g, img in images.items():
            h = col_entry(img, i)
            if h:
                img = {k: v for k, v in img.items() if k[0] != i}
                images[g] = col_add(img, col_mul_poly(subst, h, p), p)
        rows.remove(i)
    relabel = {r: k for k, r in enumerate(rows)}
    twists = [M.twists[r] for r in rows]
    cols = [col_relabel(c, relabel) for c in cols]
    images = {g: col_relabel(img, relabel) for g, img in images.items()}
    if cols:
        enc = TermEncoder(ring.weights, ring.order, twists)
        base = [to_vec(enc, c) for c in ideal_columns(M.ideal, len(twists))]
        res = buchberger(base + [to_vec(enc, c) for c in cols], enc, p, preferred=len(base))
        cols = [cols[i - len(base)] for i in res.min_gens if i >= len(base)]
    out = Presentation(ring, twists, cols, M.ideal)
    return out, PresentationMap(rows, [images[g] for g in range(M.rank)])


def kernel_columns(ring, target_twists, columns, source_twists, ideal=None, minimal=True):
    """Generators of the kernel of F -> G/I*G, e_j -> columns[j].

    With ``ideal`` the kernel is taken over R; the result then contains
    I*F and, if ``minimal``, is cut down modulo I*F.
    """
    target_twists = tuple(target_twists)
    source_twists = tuple(source_twists)
    extra = ideal_columns(ideal, len(target_twists))
    extra_tw = [col_degree(c, ring, target_twists) for c in extra]
    syz = kernel(list(columns) + extra, target_twists, source_twists + tuple(extra_tw),
                 ring.weights, ring.order, ring.p, minimal=not ideal and minimal)
    m = len(source_twists)
    out = []
    for s in syz:
        c = {k: v for k, v in s.items() if k[0] < m}
        if c:
            out.append(c)
    if ideal is not None and minimal and out:
        enc = TermEncoder(ring.weights, ring.order, source_twists)
        base = [to_vec(enc, c) for c in ideal_columns(ideal, m)]
        res = buchberger(base + [to_vec(enc, c) for c in out], enc, ring.p, preferred=len(base))
        out = [out[i - len(base)] for i in res.min_gens if i >= len(base)]
    return out


def subquotient(ring, twists, A, B, ideal=None, a_degrees=None, minimal=True):
    """Presentation of (A + B) / B inside the free module with the given twists.

    Generators correspond to the columns of A; with ``ideal`` the quotient is
    also taken by I times the ambient free module, giving an R-module.
    """
    twists = tuple(twists)
    if a_degrees is None:
        a_degrees = [col_degree(c, ring, twists) for c in A]
    if any(d is None for d in a_degrees):
        raise ValueError("zero columns need explicit degrees")
    B = list(B)
    b_degrees = [col_degree(c, ring, twists) for c in B]
    keep = [k for k, d in enumerate(b_degrees) if d is not None]
    B = [B[k] for k in keep]
    b_degrees = [b_degrees[k] for k in keep]
    rels = kernel_columns(ring, twists, list(A) + B, list(a_degrees) + b_degrees, ideal,
                          minimal=True)
    m = len(A)
    rels = [{k: v for k, v in s.items() if k[0] < m} for s in rels]
    M = Presentation(ring, a_degrees, rels, ideal)
    return M.minimal() if minimal else M


def preimage_columns(ring, source_twists, images, target_twists, Q, ideal=None):
    """Generators of {x in F : phi(x) in span(Q) + I*G} with phi(e_j) = images[j]."""
    qdeg = [col_degree(c, ring, tuple(target_twists)) for c in Q]
    Q = [c for c, d in zip(Q, qdeg) if d is not None]
    qdeg = [d for d in qdeg if d is not None]
    syz = kernel_columns(ring, target_twists, list(images) + Q, list(source_twists) + qdeg, ideal)
    m = len(source_twists)
    out = []
    for s in syz:
        c = {k: v for k, v in s.items() if k[0] < m}
        if c:
            out.append(c)
    return out


def kernel_of_map(N, images, target):
    """ker(N -> target), the map sending generator j of N to column images[j] of target."""
    ring = N.ring
    A = preimage_columns(ring, N.twists, images, target.twists, target.s_relations())
    return subquotient(ring, N.twists, A, N.relations, N.ideal)


def ideal_annihilator(M):
    """ann_S(M) as an ideal of S (contains I for modules over S/I)."""
    ring = M.ring
    n = ring.ngens
    rels = M.s_relations()
    degs = [col_degree(c, ring, M.twists) for c in rels]
    result = None
    for j in range(M.rank):
        cols = [unit_col(j, n)] + rels
        syz = kernel(cols, M.twists, [M.twists[j]] + degs, ring.weights, ring.order, ring.p)
        gens = [Polynomial(ring, {e: c for (r, e), c in s.items() if r == 0}) for s in syz]
        J = Ideal(ring, gens)
        if result is None:
            result = J
        else:
            from .groebner import intersection
            result = intersection(result, J)
    if result is None:
        return Ideal(ring, [ring.one()])
    return result.reduced()
