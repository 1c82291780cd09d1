"""Hypothesis certifiers and constructions of maximal Cohen-Macaulay modules."""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from .errors import (GCMFailure, HypothesisFailure, InvariantViolation, NotFound,
                     NotFoundWithinBound, NotRegularSequence, NotSplit, ParameterRange,
                     PreconditionError, ZeroModule)
from .frobenius import (PROBE_BOUND, frobenius_splitting_complement, poly_ext_quotient_iso,
                        poly_ext_summand, polynomial_extension, splitting_identity,
                        veronese_submodule)
from .groebner import fedder_test
from .linalg import rref
from .modules import free_module, ideal_annihilator, kernel_of_map, unit_col
from .polynomial import Polynomial
from .resolutions import (ext_module, is_nonzerodivisor, is_regular_sequence,
                          local_cohomology_lengths, minimal_free_resolution)

UNCHECKED = ["Buchsbaum beyond quasi-Buchsbaum", "equidimensional"]


@dataclass
class HypothesisReport:
    dim: int
    depth: int
    quasi_gorenstein: bool
    quasi_buchsbaum: bool
    generalized_cm: bool
    lc_table: object
    unchecked: list = field(default_factory=lambda: list(UNCHECKED))
    failures: list = field(default_factory=list)
    regular_sequence: bool = True

    @property
    def certified(self):
        return not self.failures

    def as_dict(self):
        return {
            "dim": self.dim, "depth": self.depth,
            "quasi_gorenstein": self.quasi_gorenstein,
            "quasi_buchsbaum": self.quasi_buchsbaum,
            "generalized_cm": self.generalized_cm,
            "lc_lengths": self.lc_table.as_list(),
            "regular_sequence": self.regular_sequence,
            "failures": list(self.failures),
            "unchecked": list(self.unchecked),
        }


@dataclass
class MCMCertificate:
    kind: str
    module: object
    witness: object
    depth_evidence: dict
    rank: Fraction
    success: bool
    dim: int
    depth: int
    notes: list = field(default_factory=list)

    def as_dict(self):
        w = self.witness
        if isinstance(w, dict):
            w = {k: (str(v) if isinstance(v, Polynomial) else
                     [str(x) for x in v] if isinstance(v, (list, tuple)) and v and isinstance(v[0], Polynomial)
                     else v) for k, v in w.items()}
        r = self.rank
        return {
            "kind": self.kind, "success": self.success, "dim": self.dim, "depth": self.depth,
            "witness": w,
            "rank": str(r) if r.denominator != 1 else int(r),
            "generators": list(self.module.twists),
            "relations": len(self.module.relations),
            "ext_nonzero": self.depth_evidence.get("ext_nonzero"),
            "lc_lengths": self.depth_evidence.get("lc_lengths"),
            "notes": list(self.notes),
        }


def _mod(M):
    return getattr(M, "module", M)


# -- ring-level certifiers ---------------------------------------------------

def quasi_gorenstein_evidence(R, probe_bound=PROBE_BOUND):
    """(omega cyclic, Hilbert series match, kernel Hilbert function up to the bound)."""
    w = R.canonical
    if w.rank != 1:
        return False, False, None
    a = w.twists[0]
    HR = R.hilbert_series()
    Hw = w.hilbert_series()
    match = Hw == HR.shift(a)
    kernel = (HR.shift(a) - Hw).coefficients(a, a + probe_bound)
    return True, match, kernel


def is_quasi_gorenstein(R, probe_bound=PROBE_BOUND):
    cyclic, match, kernel = quasi_gorenstein_evidence(R, probe_bound)
    return cyclic and match and not any(kernel)


def is_generalized_cm(M):
    M = _mod(M)
    if M.is_zero():
        raise ZeroModule("zero module")
    return local_cohomology_lengths(M).is_finite()


def is_quasi_buchsbaum(R):
    """m kills Ext^{n-i}_S(R, S) for every i < dim R."""
    M = _mod(R)
    n = M.ring.ngens
    F = minimal_free_resolution(M)
    d = M.hilbert_series().dimension()
    gens = M.ring.gens()
    for i in range(d):
        E = ext_module(M, n - i, F)
        if E.is_zero():
            continue
        if not all(E.annihilated_by(x) for x in gens):
            return False
    return True


def theorem_A_hypotheses(R, y=()):
    """Certify what can be certified about R / yR for the rank-two construction."""
    y = [R(f) if not isinstance(f, Polynomial) else f for f in y]
    if y and not is_regular_sequence(y, R.module):
        raise NotRegularSequence("y is not a regular sequence on R")
    Rb = R.quotient(y) if y else R
    table = Rb.lc_table
    qg = is_quasi_gorenstein(Rb)
    qb = is_quasi_buchsbaum(Rb)
    failures = []
    if Rb.dimension != 3:
        failures.append("dim = 3")
    if not qg:
        failures.append("quasi-Gorenstein")
    if not qb:
        failures.append("quasi-Buchsbaum")
    if Rb.dimension < 3 or table.lengths[2] != 1:
        failures.append("length(H^2) = 1")
    unchecked = list(UNCHECKED)
    if not R.domain:
        unchecked.append("domain")
    return HypothesisReport(Rb.dimension, Rb.depth, qg, qb, table.is_finite(), table,
                            unchecked, failures, True)


# -- the deformation element -------------------------------------------------

def _degree_basis(R, J, d):
    """RREF basis of J_d modulo I_d; columns are degree-d monomials, largest first."""
    S = R.S
    monos = S.monomials_of_degree(d)
    if not monos:
        return monos, []
    idx = {m: k for k, m in enumerate(monos)}

    def span(gens):
        rows = []
        for g in gens:
            gd = g.homogeneous_degree()
            if gd is None or gd > d:
                continue
            for m in S.monomials_of_degree(d - gd):
                row = [0] * len(monos)
                for e, c in g.terms.items():
                    row[idx[tuple(a + b for a, b in zip(e, m))]] = c
                rows.append(row)
        return rows

    p = S.p
    I_rows, I_piv = rref(span(R.ideal.generators), p) if R.ideal.generators else ([], [])
    J_rows = span(J.generators)
    reduced = []
    for row in J_rows:
        row = list(row)
        for r, c in zip(I_rows, I_piv):
            if row[c]:
                f = row[c]
                row = [(x - f * y) % p for x, y in zip(row, r)]
        if any(row):
            reduced.append(row)
    basis, _ = rref(reduced, p) if reduced else ([], [])
    return monos, basis


def deformation_annihilator(R):
    """ann_S of Ext^{n-d+1}_S(R, S), i.e. of H^{d-1}_m(R); the unit ideal if that vanishes."""
    n, d = R.ngens, R.dimension
    E = ext_module(R.module, n - d + 1, R.resolution)
    if E.is_zero():
        from .groebner import Ideal
        return Ideal(R.S, [R.S.one()])
    return ideal_annihilator(E)


def find_deformation_element(R, max_degree=3):
    """First homogeneous nonzerodivisor in ann H^{d-1}_m(R), by degree, support size, then coefficients."""
    if R.module.is_zero():
        raise ZeroModule("zero ring")
    if R.dimension < 1:
        raise PreconditionError("need dim R >= 1")
    J = deformation_annihilator(R)
    p = R.p
    for d in range(1, max_degree + 1):
        monos, basis = _degree_basis(R, J, d)
        for size in range(1, len(basis) + 1):
            for support in combinations(range(len(basis)), size):
                for coeffs in product(range(1, p), repeat=size - 1):
                    cs = (1,) + coeffs
                    vec = [0] * len(monos)
                    for c, k in zip(cs, support):
                        vec = [(a + c * b) % p for a, b in zip(vec, basis[k])]
                    x = Polynomial(R.S, {m: v for m, v in zip(monos, vec) if v})
                    if x and is_nonzerodivisor(x, R.module):
                        return x
    raise NotFound(f"no nonzerodivisor in the annihilator up to degree {max_degree}")


def construct_omega_syzygy(R, x):
    """First syzygy over R of the canonical module of R/xR; returns (Omega, omega_bar, cover twists)."""
    x = R(x) if not isinstance(x, Polynomial) else x
    if not x:
        raise PreconditionError("x must be nonzero")
    if not is_nonzerodivisor(x, R.module):
        raise PreconditionError("x must be a nonzerodivisor on R")
    Rb = R.quotient([x])
    wb = Rb.canonical
    F = free_module(R.S, wb.twists, R.ideal)
    images = [unit_col(j, R.ngens) for j in range(wb.rank)]
    Omega = kernel_of_map(F, images, wb)
    return Omega, wb, list(wb.twists)


# -- certification --------------------------------------------------------

def _weight_ratio(M, R):
    return Fraction(M.ring.weights[0], R.weights[0]) if R.weights else Fraction(1)


def module_rank(M, R):
    """e(M)/e(R), adjusting for a 1/q-scaled grading on M."""
    HM, HR = M.hilbert_series(), R.hilbert_series()
    dM, dR = HM.dimension(), HR.dimension()
    if dM < dR:
        return Fraction(0)
    q = _weight_ratio(M, R)
    return HM.multiplicity() * q ** dR / HR.multiplicity()


def certify_mcm(M, R, kind="module", witness=None):
    M = _mod(M)
    if M.is_zero():
        raise ZeroModule("zero module")
    F = minimal_free_resolution(M)
    n = M.ring.ngens
    ext_nonzero = [not ext_module(M, i, F).is_zero() if i <= F.length else False
                   for i in range(n + 1)]
    dep = n - max(i for i, nz in enumerate(ext_nonzero) if nz)
    dim = R.dimension
    table = local_cohomology_lengths(M, F)
    evidence = {"ext_nonzero": ext_nonzero, "lc_lengths": table.as_list(),
                "projective_dimension": F.length}
    rank = module_rank(M, R)
    notes = ["rank via multiplicity ratio (torsion-free, equidimensional R assumed)"]
    return MCMCertificate(kind, M, witness, evidence, rank, dep == dim, dim, dep, notes)


def theorem_A_pipeline(R, y=(), max_degree=3):
    """Rank-two MCM module as the first syzygy of the canonical module of R/xR."""
    report = theorem_A_hypotheses(R, y)
    if report.certified:
        x = find_deformation_element(R, max_degree)
        Omega, wb, cover = construct_omega_syzygy(R, x)
        cert = certify_mcm(Omega, R, "theorem-A", {"x": x, "y": list(y)})
        cert.notes.append(f"mu(omega of R/xR) = {wb.rank}")
        HF = R.hilbert_series().scale(0)
        for a in cover:
            HF = HF + R.hilbert_series().shift(a)
        identity = Omega.hilbert_series() + wb.hilbert_series() == HF
        cert.report = report
        if not (cert.success and cert.rank == 2 and wb.rank == 2 and identity):
            raise InvariantViolation(
                f"certified input {R.name} gave depth {cert.depth}, rank {cert.rank}, "
                f"mu(omega) {wb.rank}; an unchecked hypothesis may fail",
                report.unchecked)
        return cert
    if R.is_gorenstein():
        x = find_deformation_element(R, max_degree)
        Omega, wb, cover = construct_omega_syzygy(R, x)
        cert = certify_mcm(Omega, R, "theorem-A", {"x": x, "y": list(y)})
        cert.notes.append("Gorenstein input: omega of R/xR is cyclic and Omega is free")
        cert.report = report
        P = Omega.minimal()
        if not (cert.success and P.rank == 1 and not P.relations):
            raise InvariantViolation("Gorenstein input did not give a free syzygy", report.unchecked)
        return cert
    raise HypothesisFailure(report.failures, report)


# -- Veronese search -------------------------------------------------------

def _witness_classes(M, table, q):
    """Classes j < q with M_j != 0 and finite local cohomology living below degree j."""
    H = M.hilbert_series()
    top = max((max(ds) for ds in table.degrees.values() if ds), default=None)
    out = []
    for j in range(q):
        if H.coefficient(j) and (top is None or top < j):
            out.append(j)
    return out


def find_cm_veronese(M, R, e_max=3, probe_bound=PROBE_BOUND, require_domain=True):
    """First (e, i) with M^(p^e, i) maximal Cohen-Macaulay over R."""
    M = _mod(M)
    if require_domain and not R.domain:
        raise PreconditionError("R must be asserted to be a domain")
    if e_max < 1:
        raise ParameterRange("e_max must be at least 1")
    table = local_cohomology_lengths(M)
    if not table.is_finite():
        raise PreconditionError("M is not generalized Cohen-Macaulay")
    if table.dim != R.dimension:
        raise PreconditionError("dim M must equal dim R")
    if table.lengths and table.lengths[0]:
        raise PreconditionError("the maximal ideal is associated to M (H^0 != 0)")
    tried = []
    for e in range(1, e_max + 1):
        q = R.p ** e
        pref = _witness_classes(M, table, q)
        order = pref + [i for i in range(q) if i not in pref]
        for i in order:
            V = veronese_submodule(M, e, i, probe_bound)
            if not V.nonzero:
                continue
            cert = certify_mcm(V.presentation, R, "veronese-search", {"e": e, "i": i})
            tried.append((e, i, cert.depth))
            if cert.success:
                cert.notes.append(f"classes tried: {tried}")
                if R.domain:
                    cert.notes.append("R asserted to be a domain")
                return cert
    raise NotFoundWithinBound(f"no MCM Veronese summand for e <= {e_max}; tried {tried}")


def corollary_trivial_deformation(R, num_X_vars=1, e_max=3, probe_bound=PROBE_BOUND):
    """Lift the Veronese witness of R to the summand R[X]^(p^e, i, 0) of F^e_* R[X]."""
    if e_max < 1:
        raise ParameterRange("e_max must be at least 1")
    base = find_cm_veronese(R.module, R, e_max, probe_bound)
    e, i = base.witness["e"], base.witness["i"]
    c = num_X_vars
    A = polynomial_extension(R, (1,) * c)
    Z = poly_ext_summand(R, (1,) * c, e, i, (0,) * c)
    P = Z.presentation
    xs = [P.ring.gen(k) for k in range(R.ngens, P.ring.ngens)]
    regular = is_regular_sequence(xs, P) if xs else True
    quotient_ok = poly_ext_quotient_iso(R, e, i, 0, 1, c, probe_bound) if c else True
    cert = certify_mcm(P, A, "poly-ext-lift", {"e": e, "i": i, "t": [0] * c})
    cert.notes.append(f"X regular on summand: {regular}; quotient matches R^({R.p ** e},{i}): {quotient_ok}")
    cert.success = cert.success and regular and quotient_ok
    cert.base = base
    return cert


def splitting_complement_mcm(R, e=1):
    """The complement of R in F_*R is MCM for F-split generalized Cohen-Macaulay R."""
    if not fedder_test(R.ideal, e):
        raise NotSplit(f"{R.name} fails Fedder's criterion")
    if not R.lc_table.is_finite():
        raise GCMFailure(f"{R.name} is not generalized Cohen-Macaulay")
    M = frobenius_splitting_complement(R, e)
    cert = certify_mcm(M, R, "splitting-complement", {"e": e})
    ok = splitting_identity(R, M, e)
    cert.notes.append(f"Hilbert complement identity: {ok}")
    if not (cert.success and ok):
        raise InvariantViolation(f"splitting complement of {R.name} is not MCM", [])
    return cert
