"""Frobenius pushforwards, their Veronese summands and splitting complements.

Degrees of F^e_*(M) are stored multiplied by q = p^e: the generator
F_*(u e_j) sits in degree a_j + deg(u), and the polynomial ring acts through
weights q*w.  A relation of M times a basis monomial v expands by splitting
each exponent as E = q*A + u.
"""
from functools import cached_property
from itertools import product

from .errors import NotSplit, ParameterRange, SolverDegreeBoundExceeded
from .groebner import Ideal, fedder_test
from .hilbert import HilbertSeries
from .linalg import solve
from .modules import Presentation, col_mul_poly, unit_col
from .polynomial import Polynomial

PROBE_BOUND = 12


def _basis(n, q):
    return [u for u in product(range(q), repeat=n)]


def _scaled(ring, q):
    return ring.with_weights(tuple(q * w for w in ring.weights))


def _rescale_ideal(ideal, ring):
    if ideal is None:
        return None
    return Ideal(ring, [Polynomial(ring, g.terms) for g in ideal.generators])


class FrobeniusPushforward:
    """F^e_*(M) presented over S with weights scaled by q."""

    def __init__(self, M, e, select=None, cls=None):
        if e < 1:
            raise ParameterRange("e must be at least 1")
        self.source = M
        self.e = e
        self.q = q = M.ring.p ** e
        ring = M.ring
        n = ring.ngens
        self.ring = _scaled(ring, q)
        self.ideal = _rescale_ideal(M.ideal, self.ring)
        U = _basis(n, q)
        self.basis = U
        index = {u: k for k, u in enumerate(U)}
        W = ring.weights
        twists, labels = [], []
        keep = {}
        for j, a in enumerate(M.twists):
            for u in U:
                t = a + sum(x * w for x, w in zip(u, W))
                if select is None or select(j, u, t):
                    keep[(j, index[u])] = len(twists)
                    twists.append(t)
                    labels.append((j, u))
        self.labels = labels
        rels = []
        for col in M.s_relations():
            cdeg = None
            for (r, ex) in col:
                cdeg = M.twists[r] + sum(x * w for x, w in zip(ex, W))
                break
            for v in U:
                dv = cdeg + sum(x * w for x, w in zip(v, W))
                if cls is not None and dv % q != cls:
                    continue
                out = {}
                ok = True
                for (r, ex), c in col.items():
                    E = [a + b for a, b in zip(ex, v)]
                    u = tuple(x % q for x in E)
                    A = tuple(x // q for x in E)
                    row = keep.get((r, index[u]))
                    if row is None:
                        ok = False
                        break
                    out[(row, A)] = c
                if not ok:
                    if select is not None:
                        continue
                    raise AssertionError("missing generator")
                rels.append(out)
        self.presentation = Presentation(self.ring, twists, rels, self.ideal)

    @property
    def degree_denominator(self):
        return self.q

    def hilbert_series(self):
        return self.presentation.hilbert_series()

    def piece_dimension(self, n):
        return self.hilbert_series().coefficient(n)


def frobenius_pushforward(M, e=1):
    return FrobeniusPushforward(_module(M), e)


def _module(M):
    return getattr(M, "module", M)


class VeronesePresentation:
    """M^(q,i): the pieces of M in degrees congruent to i mod q, as an R-module."""

    def __init__(self, M, e, i, probe_bound=PROBE_BOUND):
        self.source = M
        self.e = e
        self.q = q = M.ring.p ** e
        if not 0 <= i < q:
            raise ParameterRange(f"class {i} outside [0, {q})")
        self.i = i
        self.probe_bound = probe_bound

    @cached_property
    def pushforward(self):
        q, i = self.q, self.i
        return FrobeniusPushforward(self.source, self.e, select=lambda j, u, t: t % q == i, cls=i)

    @property
    def presentation(self):
        return self.pushforward.presentation

    @cached_property
    def nonzero(self):
        """Some piece M_n with n = i mod q and n <= probe bound is nonzero."""
        H = self.source.hilbert_series()
        lo = min(self.source.twists, default=0)
        return any(H.coefficient(n) for n in range(lo, self.probe_bound + 1) if n % self.q == self.i)

    def hilbert_series(self):
        return self.presentation.hilbert_series()

    def piece_dimension(self, n):
        """dim of the piece in (scaled) degree n, read from the summand's own presentation."""
        return self.hilbert_series().coefficient(n)

    def class_dims(self, K):
        """[dim M_{kq+i} for k = 0..K], from the summand's presentation."""
        H = self.hilbert_series()
        return [H.coefficient(k * self.q + self.i) for k in range(K + 1)]

    def regraded(self):
        """The same module graded by k with kq + i = old degree; weights back to those of M."""
        P = self.presentation
        ring = self.source.ring
        q, i = self.q, self.i
        twists = [(t - i) // q for t in P.twists]
        rels = [dict(c) for c in P.relations]
        ideal = _rescale_ideal(P.ideal, ring)
        return Presentation(ring, twists, rels, ideal)

    def minimal(self):
        return self.presentation.minimal()


def veronese_submodule(M, e, i, probe_bound=PROBE_BOUND):
    return VeronesePresentation(_module(M), e, i, probe_bound)


def decomposition_series(M, e):
    M = _module(M)
    q = M.ring.p ** e
    return [veronese_submodule(M, e, i).hilbert_series() for i in range(q)]


def verify_decomposition(M, e, probe_e=1, bound=PROBE_BOUND):
    """Series of F^e_*M equals the sum over classes, and the iterated identity holds for probe_e."""
    M = _module(M)
    total = frobenius_pushforward(M, e).hilbert_series()
    parts = HilbertSeries.zero(total.weights)
    for H in decomposition_series(M, e):
        parts = parts + H
    if not parts == total:
        return False
    return verify_iterated(M, e, probe_e, bound)


def verify_iterated(M, e, e2, bound=PROBE_BOUND, classes=None):
    """(M^(q,i))^(q2,j) and M^(q q2, j q + i) have the same pieces, k = 0..bound."""
    M = _module(M)
    p = M.ring.p
    q, q2 = p ** e, p ** e2
    for i in (classes if classes is not None else range(q)):
        V = veronese_submodule(M, e, i).regraded()
        for j in range(q2):
            left = veronese_submodule(V, e2, j).class_dims(bound)
            right = veronese_submodule(M, e + e2, j * q + i).class_dims(bound)
            if left != right:
                return False
    return True


def count_nonzero_summands(M, e, probe_bound=PROBE_BOUND):
    M = _module(M)
    q = M.ring.p ** e
    return sum(1 for i in range(q) if veronese_submodule(M, e, i, probe_bound).nonzero)


# -- polynomial extensions C[X] ---------------------------------------------

def _xnames(C, c):
    taken = set(C.S.names)
    out, k = [], 1
    while len(out) < c:
        name = f"X{k}"
        if name not in taken:
            out.append(name)
        k += 1
    return out


def polynomial_extension(C, h):
    """C[X_1..X_c] with X-weights h (all >= 1)."""
    h = tuple(h)
    if any(x < 1 for x in h):
        raise ParameterRange("X-weights must be positive")
    return C.extend(_xnames(C, len(h)), h)


class PolyExtSummand:
    """C[X]^(q,i,t): total degree = i mod q and X-exponents = t mod q."""

    def __init__(self, C, h, e, i, t):
        self.C = C
        self.h = tuple(h)
        self.e = e
        self.q = q = C.p ** e
        t = tuple(t)
        if len(t) != len(self.h):
            raise ParameterRange("one residue per X variable")
        if not 0 <= i < q or any(not 0 <= x < q for x in t):
            raise ParameterRange("class and residues must lie in [0, p^e)")
        self.i, self.t = i, t
        self.A = polynomial_extension(C, self.h)
        nc = C.ngens

        def select(j, u, deg):
            return deg % q == i and tuple(u[nc:]) == t

        self.pushforward = FrobeniusPushforward(self.A.module, e, select=select, cls=i)

    @property
    def presentation(self):
        return self.pushforward.presentation

    def hilbert_series(self):
        return self.presentation.hilbert_series()

    def piece_dimension(self, n):
        return self.hilbert_series().coefficient(n)

    def quotient_by_X(self):
        """The summand modulo X (acting as X^q on the pushforward)."""
        P = self.presentation
        S = P.ring
        nc = self.C.ngens
        rels = list(P.relations)
        for k in range(nc, S.ngens):
            x = S.gen(k).terms
            for j in range(P.rank):
                rels.append(col_mul_poly(unit_col(j, S.ngens), x, S.p))
        return Presentation(S, P.twists, rels, P.ideal)


def poly_ext_summand(C, h, e, i, t):
    return PolyExtSummand(C, h, e, i, t)


def verify_poly_ext_decomposition(C, h, e, i):
    """C[X]^(q,i) is the sum of the C[X]^(q,i,t) over all residue vectors t."""
    A = polynomial_extension(C, h)
    q = C.p ** e
    whole = veronese_submodule(A.module, e, i).hilbert_series()
    total = HilbertSeries.zero(whole.weights)
    for t in product(range(q), repeat=len(tuple(h))):
        total = total + poly_ext_summand(C, h, e, i, t).hilbert_series()
    return total == whole


def poly_ext_quotient_iso(C, e, i, j, u=1, c=1, bound=PROBE_BOUND):
    """C[X]^(q,i,t)/X C[X]^(q,i,t) has the pieces of C^(q,i-j), t = j at spot u.

    Also compares generator degrees of the two minimal presentations.
    """
    q = C.p ** e
    if not 0 <= j <= i < q:
        raise ParameterRange("need 0 <= j <= i < p^e")
    if c == 0:
        # nothing to quotient by: the summand is C^(q,i) itself
        if j != 0:
            raise ParameterRange("no X variables to carry j")
        return True
    if not 1 <= u <= c:
        raise ParameterRange("spot u must be one of the X variables")
    t = tuple(j if k == u - 1 else 0 for k in range(c))
    Z = poly_ext_summand(C, (1,) * c, e, i, t)
    Qt = Z.quotient_by_X()
    HQ = Qt.hilbert_series()
    V = veronese_submodule(C.module, e, i - j)
    HV = V.hilbert_series()
    for k in range(bound + 1):
        if HQ.coefficient(k * q + i) != HV.coefficient(k * q + i - j):
            return False
    gq = sorted(a - j for a in Qt.minimal().twists)
    gv = sorted(V.minimal().twists)
    return gq == gv


# -- splitting complement ----------------------------------------------------

def solve_splitting(R, e=1, degree_bound=None):
    """Coefficients of a degree-0 R-linear F^e_*R -> R sending F_*1 to 1, or None."""
    M = R.module
    F = FrobeniusPushforward(M, e)
    q = F.q
    ring = R.S
    ideal = R.ideal
    P = F.presentation
    # unknown values c_u in R of degree deg(u)/q, in the normal-monomial basis
    lead = ideal.lead_monomials() if not ideal.is_zero() else []

    def standard(d):
        return [m for m in ring.monomials_of_degree(d)
                if not any(all(a <= b for a, b in zip(l, m)) for l in lead)]

    need = [t // q for t in P.twists if t % q == 0]
    top = max(need, default=0)
    if degree_bound is not None and top > degree_bound:
        raise SolverDegreeBoundExceeded(f"splitting values needed up to degree {top}")
    unknowns = []       # (generator, monomial)
    for g, t in enumerate(P.twists):
        if t % q == 0:
            for m in standard(t // q):
                unknowns.append((g, m))
    col_of = {k: n for n, k in enumerate(unknowns)}
    one = F.labels.index((0, (0,) * ring.ngens))
    eqs, rhs = [], []
    # phi(F_*1) = 1
    row = [0] * len(unknowns)
    row[col_of[(one, (0,) * ring.ngens)]] = 1
    eqs.append(row)
    rhs.append(1)
    for col in P.relations:
        deg = None
        for (r, ex) in col:
            deg = P.twists[r] + P.ring.degree(ex)
            break
        if deg % q:
            continue
        # sum_u r_u * c_u, reduced mod I, must vanish: coefficient of each normal monomial
        acc = {}
        for (g, ex), v in col.items():
            if P.twists[g] % q:
                continue
            for m in standard(P.twists[g] // q):
                prod = Polynomial(ring, {tuple(a + b for a, b in zip(ex, m)): v})
                nf = ideal.normal_form(prod) if not ideal.is_zero() else prod
                for mono, c in nf.terms.items():
                    acc.setdefault(mono, {})
                    k = col_of[(g, m)]
                    acc[mono][k] = (acc[mono].get(k, 0) + c) % ring.p
        for mono in sorted(acc):
            row = [0] * len(unknowns)
            for k, c in acc[mono].items():
                row[k] = c
            if any(row):
                eqs.append(row)
                rhs.append(0)
    x = solve(eqs, rhs, ring.p)
    if x is None:
        return None, F
    phi = {}
    for (g, m), v in zip(unknowns, x):
        if v:
            phi.setdefault(g, {})[m] = v
    return phi, F


def frobenius_splitting_complement(R, e=1, degree_bound=None):
    """Presentation of M with F^e_*R = R + M, via F^e_*R / R*F_*1 once a splitting exists."""
    if not fedder_test(R.ideal, e):
        raise NotSplit(f"{R.name} is not F-split")
    phi, F = solve_splitting(R, e, degree_bound)
    if phi is None:
        raise NotSplit(f"no degree-0 splitting found for {R.name}")
    P = F.presentation
    one = F.labels.index((0, (0,) * R.ngens))
    rels = list(P.relations) + [unit_col(one, P.ring.ngens)]
    M = Presentation(P.ring, P.twists, rels, P.ideal)
    out = M.minimal()
    out.splitting = phi
    return out


def splitting_identity(R, M, e=1):
    """H(R) in scaled degrees plus H(M) equals H(F^e_*R)."""
    q = R.p ** e
    HR = R.hilbert_series()
    scaled = HilbertSeries({q * k: v for k, v in HR.numerator.items()}, tuple(q * w for w in HR.weights))
    return scaled + M.hilbert_series() == frobenius_pushforward(R.module, e).hilbert_series()
