"""Brute-force graded-piece dimensions by dense linear algebra over F_p.

Nothing here touches Groebner bases: a degree-d piece of F/N is computed by
spanning every monomial multiple of every relation into degree d and
row-reducing.  Inputs are anything exposing ``ring``, ``twists`` and
``s_relations()`` (presentations, graded rings via their ``module``).
"""
from pathlib import Path

import numpy as np

from .errors import BoundExceeded, Mismatch, ParameterRange

MAX_DEGREE = 20


def rank_mod_p(rows, p):
    """Rank of an integer matrix over F_p (first-nonzero pivoting)."""
    A = np.array(rows, dtype=np.int64) % p
    if A.size == 0:
        return 0
    nrows, ncols = A.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        below = np.nonzero(A[r + 1:, c])[0] + r + 1
        if below.size:
            A[below] = (A[below] - np.outer(A[below, c], A[r])) % p
        r += 1
    return r


def _as_module(M):
    return getattr(M, "module", M)


def _piece(M, d):
    ring = M.ring
    basis = {}
    for j, a in enumerate(M.twists):
        for m in ring.monomials_of_degree(d - a):
            basis[(j, m)] = len(basis)
    return basis


def piece_dimension(M, d):
    M = _as_module(M)
    ring = M.ring
    basis = _piece(M, d)
    if not basis:
        return 0
    rows = []
    for col in M.s_relations():
        degs = {ring.degree(e) + M.twists[r] for (r, e) in col}
        if not degs:
            continue
        c = degs.pop()
        for m in ring.monomials_of_degree(d - c):
            row = [0] * len(basis)
            for (r, e), v in col.items():
                row[basis[(r, tuple(a + b for a, b in zip(e, m)))]] = v
            rows.append(row)
    return len(basis) - rank_mod_p(rows, ring.p)


def brute_hilbert_function(M, D, lo=0):
    """dim M_d for d = lo..D."""
    if D > MAX_DEGREE:
        raise BoundExceeded(f"degree bound {D} exceeds {MAX_DEGREE}")
    return [piece_dimension(M, d) for d in range(lo, D + 1)]


def brute_class_dims(M, e, i, D, p=None):
    """dim M_n for n = i, i + q, i + 2q, ... <= D with q = p^e."""
    M = _as_module(M)
    q = (p or M.ring.p) ** e
    if not 0 <= i < q:
        raise ParameterRange(f"class {i} outside [0, {q})")
    if D > MAX_DEGREE:
        raise BoundExceeded(f"degree bound {D} exceeds {MAX_DEGREE}")
    return [piece_dimension(M, n) for n in range(i, D + 1, q)]


def write_golden(path, values, lo=0):
    lines = [f"{lo + k}\t{v}" for k, v in enumerate(values)]
    Path(path).write_text("\n".join(lines) + "\n")


def read_golden(path):
    out = {}
    for line in Path(path).read_text().splitlines():
        if line.strip():
            d, v = line.split("\t")
            out[int(d)] = int(v)
    return out


def compare(name, engine_values, brute_values, lo=0):
    for k, (a, b) in enumerate(zip(engine_values, brute_values)):
        if a != b:
            raise Mismatch(f"{name}: engine {a} vs oracle {b}", lo + k)
    return True


def cross_check(corpus, D=12, e_values=(1,), ext=True):
    """Compare engine Hilbert functions, class dimensions and Ext lengths with brute force.

    ``corpus`` maps names to graded rings or modules.  Raises Mismatch at the
    first disagreeing degree; returns a report dict otherwise.
    """
    from .frobenius import veronese_submodule
    from .resolutions import ext_module

    report = {}
    for name, R in corpus.items():
        M = _as_module(R)
        H = M.hilbert_series()
        engine = H.coefficients(0, D)
        compare(f"{name} hilbert", engine, brute_hilbert_function(M, D))
        entry = {"hilbert": engine}
        q_rows = {}
        for e in e_values:
            q = M.ring.p ** e
            for i in range(q):
                V = veronese_submodule(M, e, i)
                eng = [V.piece_dimension(n) for n in range(i, D + 1, q)]
                compare(f"{name} class ({e},{i})", eng, brute_class_dims(M, e, i, D), 0)
                q_rows[f"{e},{i}"] = eng
        entry["classes"] = q_rows
        if ext:
            lengths = {}
            for k in range(M.ring.ngens + 1):
                E = ext_module(M, k)
                h = E.hilbert_series()
                if h.length() is not None:
                    lo = min(E.twists) if E.twists else 0
                    hi = max(h.reduced().numerator, default=lo)
                    eng = h.coefficients(lo, hi)
                    compare(f"{name} Ext^{k}", eng, brute_hilbert_function(E, hi, lo), lo)
                    lengths[k] = sum(eng)
            entry["ext_lengths"] = lengths
        report[name] = entry
    return report
