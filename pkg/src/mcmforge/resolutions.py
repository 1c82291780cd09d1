"""Free resolutions over S, Ext against S, depth, local cohomology lengths, canonical modules."""
import math
from dataclasses import dataclass, field

from .errors import CapExceeded, NotHomogeneous, ZeroModule
from .hilbert import HilbertSeries
from .modules import (Presentation, col_degree, col_mul_poly, compose, kernel_columns,
                      minimal_presentation, preimage_columns, ring_module, subquotient,
                      unit_col)


@dataclass
class FreeResolution:
    """F_0 <- F_1 <- ... ; ``differentials[i]`` holds the columns of F_{i+1} -> F_i."""
    ring: object
    twists: list
    differentials: list
    minimal: bool = True
    complete: bool = True

    @property
    def length(self):
        return len(self.twists) - 1

    def betti_numbers(self):
        return [len(t) for t in self.twists]

    def betti_table(self):
        """{(i, j): beta_ij} with j the degree of the generator of F_i."""
        out = {}
        for i, tw in enumerate(self.twists):
            for a in tw:
                out[(i, a)] = out.get((i, a), 0) + 1
        return out

    def is_complex(self):
        p = self.ring.p
        for i in range(1, len(self.differentials)):
            lower = self.differentials[i - 1]
            for col in self.differentials[i]:
                if compose(col, lower, p):
                    return False
        return True

    def has_unit_entries(self):
        zero = (0,) * self.ring.ngens
        return any(e == zero for d in self.differentials for col in d for (_, e) in col)

    def hilbert_series(self):
        num = {}
        for i, tw in enumerate(self.twists):
            for a in tw:
                num[a] = num.get(a, 0) + (-1) ** i
        return HilbertSeries(num, self.ring.weights)


def syzygies(ring, columns, target_twists, source_twists=None, ideal=None):
    """Kernel of the map F -> G sending e_j to columns[j], as a presented module.

    ``columns`` are sparse {(row, exps): c} vectors.  Source twists default to
    the column degrees, making the map degree preserving.  With ``ideal`` the
    map is read over R and the kernel is a submodule of R^m.  The generating
    columns are kept on the result as ``embedding``.
    """
    target_twists = tuple(target_twists)
    if source_twists is None:
        source_twists = [col_degree(c, ring, target_twists) for c in columns]
    if any(d is None for d in source_twists):
        raise ValueError("zero columns need explicit source twists")
    K = kernel_columns(ring, target_twists, columns, source_twists, ideal)
    if not K:
        out = Presentation(ring, (), (), ideal)
    else:
        out = subquotient(ring, source_twists, K, [], ideal, minimal=False)
    out.embedding = K
    return out


def minimal_free_resolution(M, length_cap=None, require_complete=False):
    """Minimal graded free resolution of M as a module over the polynomial ring."""
    ring = M.ring
    P = minimal_presentation(M.as_s_module())[0]
    twists = [list(P.twists)]
    diffs = []
    cols, degs = P.relations, P.rel_degrees
    while cols:
        if length_cap is not None and len(diffs) >= length_cap:
            if require_complete:
                raise CapExceeded(f"projective dimension exceeds {length_cap}")
            return FreeResolution(ring, twists, diffs, True, False)
        diffs.append(cols)
        twists.append(list(degs))
        nxt = kernel_columns(ring, twists[-2], cols, degs)
        cols = nxt
        degs = [col_degree(c, ring, tuple(twists[-1])) for c in nxt]
    return FreeResolution(ring, twists, diffs, True, True)


def projective_dimension(M):
    if M.is_zero():
        raise ZeroModule("zero module")
    return minimal_free_resolution(M).length


def hilbert_series(M):
    return M.hilbert_series()


def krull_dimension(M):
    """Pole order of the Hilbert series at 1; -1 for the zero module."""
    return M.hilbert_series().dimension()


def _sigma(ring):
    return sum(ring.weights)


def _dual_columns(cols, n_rows):
    """Transpose: column k of the dual map has entry col_j[k] in row j."""
    out = [dict() for _ in range(n_rows)]
    for j, col in enumerate(cols):
        for (r, e), v in col.items():
            out[r][(j, e)] = v
    return out


def ext_module(M, i, resolution=None, twist=None):
    """Ext^i_S(M, S(-sum w)) as a minimal presentation over S (killed by M's ideal)."""
    ring = M.ring
    n = ring.ngens
    if i < 0 or i > n:
        raise ValueError("Ext index out of range")
    F = resolution or minimal_free_resolution(M)
    sigma = _sigma(ring) if twist is None else twist
    if i > F.length:
        return Presentation(ring, [], ())
    tw_i = [sigma - a for a in F.twists[i]]
    # incoming: dual of d_i (F_{i-1}^* -> F_i^*), outgoing: dual of d_{i+1}
    if i < len(F.differentials):
        out_cols = _dual_columns(F.differentials[i], len(F.twists[i]))
        tw_next = [sigma - a for a in F.twists[i + 1]]
        out_deg = tw_i
        K = kernel_columns(ring, tw_next, out_cols, out_deg)
    else:
        K = [unit_col(j, n) for j in range(len(tw_i))]
    if i >= 1:
        B = _dual_columns(F.differentials[i - 1], len(F.twists[i - 1]))
    else:
        B = []
    if not K:
        return Presentation(ring, [], ())
    E = subquotient(ring, tw_i, K, B)
    return E


def ext_modules(M):
    F = minimal_free_resolution(M)
    return {i: ext_module(M, i, F) for i in range(ring_ngens(M) + 1)}


def ring_ngens(M):
    return M.ring.ngens


def depth(M, resolution=None):
    """n - max{i : Ext^i_S(M, S) != 0}."""
    if M.is_zero():
        raise ZeroModule("depth of the zero module is undefined")
    F = resolution or minimal_free_resolution(M)
    n = M.ring.ngens
    for i in range(min(n, F.length), -1, -1):
        if not ext_module(M, i, F).is_zero():
            return n - i
    raise ZeroModule("all Ext modules vanish")


def depth_auslander_buchsbaum(M):
    if M.is_zero():
        raise ZeroModule("depth of the zero module is undefined")
    return M.ring.ngens - minimal_free_resolution(M).length


@dataclass
class LocalCohomologyTable:
    """lengths[i] = length of H^i_m(M) for 0 <= i < dim; math.inf when infinite."""
    lengths: list
    dim: int
    depth: int
    degrees: dict = field(default_factory=dict)   # i -> sorted degrees of a finite H^i

    def is_finite(self):
        return all(x != math.inf for x in self.lengths)

    def __getitem__(self, i):
        return self.lengths[i]

    def as_list(self):
        return ["inf" if x == math.inf else x for x in self.lengths]


def local_cohomology_lengths(M, resolution=None):
    """Lengths of H^i_m(M), i < dim M, read off Ext^{n-i}_S(M, S) by local duality."""
    if M.is_zero():
        raise ZeroModule("zero module")
    F = resolution or minimal_free_resolution(M)
    n = M.ring.ngens
    d = krull_dimension(M)
    lengths, degrees = [], {}
    dep = None
    for i in range(d):
        E = ext_module(M, n - i, F)
        if E.is_zero():
            lengths.append(0)
            continue
        if dep is None:
            dep = i
        H = E.hilbert_series()
        ln = H.length()
        if ln is None:
            lengths.append(math.inf)
        else:
            lengths.append(ln)
            # Matlis duality flips degrees: H^i_m(M)_k is dual to Ext_{-k}
            red = H.reduced()
            degrees[i] = sorted(-k for k, v in red.numerator.items() for _ in range(v))
    if dep is None:
        dep = d
    return LocalCohomologyTable(lengths, d, dep, degrees)


def _ring_and_ideal(R, ideal):
    if ideal is None:
        return R.S, R.ideal
    return R, ideal


def canonical_module(R, ideal=None):
    """omega_R = Ext^{n-d}_S(R, S(-sum w)), minimally presented over R.

    Accepts a graded ring or a pair (polynomial ring, ideal).
    """
    ring, ideal = _ring_and_ideal(R, ideal)
    if ideal.is_unit():
        raise ZeroModule("R is the zero ring")
    R = ring_module(ring, ideal)
    d = krull_dimension(R)
    n = ring.ngens
    E = ext_module(R, n - d)
    return Presentation(ring, E.twists, E.relations, ideal).minimal()


def hom_module(M, N):
    """Hom_R(M, N) for modules over the same R (M's relations over R suffice)."""
    ring = M.ring
    ideal = M.ideal or N.ideal
    P = minimal_presentation(M)[0]
    rN, rM = N.rank, P.rank
    # index (g, j) -> g * rM + j
    tw0 = [N.twists[g] - P.twists[j] for g in range(rN) for j in range(rM)]
    tw1 = [N.twists[g] - P.rel_degrees[k] for g in range(rN) for k in range(len(P.relations))]
    Q0 = []
    for col in N.relations:
        for j in range(rM):
            Q0.append({(g * rM + j, e): v for (g, e), v in col.items()})
    nrel = len(P.relations)
    Q1 = []
    for col in N.relations:
        for k in range(nrel):
            Q1.append({(g * nrel + k, e): v for (g, e), v in col.items()})
    images = []
    for g in range(rN):
        for j in range(rM):
            img = {}
            for k, rel in enumerate(P.relations):
                for (r, e), v in rel.items():
                    if r == j:
                        img[(g * nrel + k, e)] = v
            images.append(img)
    if not tw0:
        return Presentation(ring, [], (), ideal)
    if nrel == 0:
        return Presentation(ring, tw0, Q0, ideal).minimal()
    A = preimage_columns(ring, tw0, images, tw1, Q1, ideal)
    if not A:
        return Presentation(ring, [], (), ideal)
    return subquotient(ring, tw0, A, Q0, ideal)


def r_resolution(M, steps):
    """First ``steps`` differentials of a minimal free resolution of M over R = S/I."""
    ring = M.ring
    P = minimal_presentation(M)[0]
    twists = [list(P.twists)]
    diffs = []
    cols, degs = P.relations, P.rel_degrees
    for _ in range(steps):
        if not cols:
            break
        diffs.append(cols)
        twists.append(list(degs))
        cols = kernel_columns(ring, twists[-2], cols, degs, P.ideal)
        degs = [col_degree(c, ring, tuple(twists[-1])) for c in cols]
    return FreeResolution(ring, twists, diffs, True, not cols)


def _hom_free_into(N, twists):
    """Hom(F, N) for F = sum R(-a): free cover indices (g, j), relations of N per j."""
    r = len(twists)
    tw = [N.twists[g] - a for g in range(N.rank) for a in twists]
    Q = []
    for col in N.s_relations():
        for j in range(r):
            Q.append({(g * r + j, e): v for (g, e), v in col.items()})
    return tw, Q


def _induced(N, d_cols, src_rank, tgt_rank):
    """Columns of Hom(F_src, N) -> Hom(F_tgt, N) for d: F_tgt -> F_src."""
    images = []
    for g in range(N.rank):
        for j in range(src_rank):
            img = {}
            for k, col in enumerate(d_cols):
                for (r, e), v in col.items():
                    if r == j:
                        img[(g * tgt_rank + k, e)] = v
            images.append(img)
    return images


def ext_r(M, N, i):
    """Is Ext^i_R(M, N) zero?  Returns (is_zero, number of surviving generators)."""
    F = r_resolution(M, i + 1)
    ring = M.ring
    if i >= len(F.twists):
        return True, 0
    tw_i, Q_i = _hom_free_into(N, F.twists[i])
    if i + 1 < len(F.twists):
        tw_n, Q_n = _hom_free_into(N, F.twists[i + 1])
        imgs = _induced(N, F.differentials[i], len(F.twists[i]), len(F.twists[i + 1]))
        K = preimage_columns(ring, tw_i, imgs, tw_n, Q_n)
    else:
        K = [unit_col(j, ring.ngens) for j in range(len(tw_i))]
    B = list(Q_i)
    if i >= 1:
        B += _induced(N, F.differentials[i - 1], len(F.twists[i - 1]), len(F.twists[i]))
    Bp = Presentation(ring, tw_i, B)
    survivors = [c for c in K if not Bp.is_zero_element(c)]
    return not survivors, len(survivors)


def ext_self_canonical(R, ideal=None):
    """Ext^1_R(omega_R, omega_R) == 0?"""
    w = canonical_module(R, ideal)
    return ext_r(w, w, 1)[0]


def quotient_by(M, elems):
    """M / (elems) M."""
    n = M.ring.ngens
    rels = list(M.relations)
    for f in elems:
        for j in range(M.rank):
            rels.append(col_mul_poly(unit_col(j, n), f.terms, M.p))
    return Presentation(M.ring, M.twists, rels, M.ideal)


def is_nonzerodivisor(f, M):
    """Exact test: f is M-regular iff H(M/fM) = (1 - t^deg f) H(M)."""
    d = f.homogeneous_degree()
    if d is None:
        return M.is_zero()
    H = M.hilbert_series()
    return quotient_by(M, [f]).hilbert_series() == H - H.shift(d)


def is_regular_sequence(elems, M):
    """Each element is a nonzerodivisor modulo the previous ones (and M/(elems)M may be anything)."""
    cur = M
    for f in elems:
        if not f.is_homogeneous() or f.homogeneous_degree() in (None, 0):
            raise NotHomogeneous("regular sequence elements must be homogeneous of positive degree")
        if cur.is_zero() or not is_nonzerodivisor(f, cur):
            return False
        cur = quotient_by(cur, [f])
    return True
