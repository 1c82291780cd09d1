"""Buchberger's algorithm on packed module vectors.

A vector is a dict ``{code: coefficient}`` where codes come from a
:class:`~mcmforge.encoding.TermEncoder`.  Ideals are the rank-one case.
"""
import heapq

from .field import inverse


def lead(vec):
    return max(vec)


def make_monic(vec, p):
    c = inverse(vec[max(vec)], p)
    if c == 1:
        return vec
    return {k: v * c % p for k, v in vec.items()}


def is_homogeneous(vec, enc):
    degs = {enc.total_degree(k) for k in vec}
    return len(degs) <= 1


class Reducer:
    """A set of monic vectors with pairwise non-dividing leads, used for division."""

    def __init__(self, enc, p):
        self.enc = enc
        self.p = p
        self.vecs = []
        self.leads = []
        self.keys = []
        self.by_comp = {}

    def add(self, vec):
        lc = max(vec)
        idx = len(self.vecs)
        key = self.enc.div_key(lc)
        self.vecs.append(vec)
        self.leads.append(lc)
        self.keys.append(key)
        self.by_comp.setdefault(key[0], []).append(idx)
        return idx

    def find(self, code, skip=None):
        enc = self.enc
        kt = enc.div_key(code)
        for idx in self.by_comp.get(kt[0], ()):
            if idx != skip and enc.divides(self.keys[idx], kt):
                return idx
        return None

    def reduce(self, vec, full=True, skip=None):
        """Remainder of ``vec`` on division; only the lead is reduced if ``full`` is False."""
        p = self.p
        f = dict(vec)
        heap = [-k for k in f]
        heapq.heapify(heap)
        out = {}
        vecs, leads = self.vecs, self.leads
        while heap:
            code = -heapq.heappop(heap)
            c = f.pop(code, 0)
            if not c:
                continue
            idx = self.find(code, skip)
            if idx is None:
                out[code] = c
                if not full:
                    out.update(f)
                    return out
                continue
            delta = code - leads[idx]
            for k, v in vecs[idx].items():
                t = k + delta
                if t == code:
                    continue
                old = f.get(t)
                if old is None:
                    f[t] = -c * v % p
                    heapq.heappush(heap, -t)
                else:
                    new = (old - c * v) % p
                    if new:
                        f[t] = new
                    else:
                        del f[t]
        return out


def _lcm_code(enc, a, b):
    ca, ea = enc.decode(a)
    eb = enc.exps(b)
    return enc.encode(ca, tuple(max(x, y) for x, y in zip(ea, eb)))


def spoly(enc, p, f, g, lf, lg, lcm):
    da, db = lcm - lf, lcm - lg
    out = {}
    for k, v in f.items():
        out[k + da] = v
    for k, v in g.items():
        t = k + db
        nv = (out.get(t, 0) - v) % p
        if nv:
            out[t] = nv
        else:
            out.pop(t, None)
    return out


class GBResult:
    def __init__(self, basis, min_gens, homogeneous):
        self.basis = basis              # reduced GB, sorted by lead descending
        self.min_gens = min_gens        # input indices forming a minimal generating set
        self.homogeneous = homogeneous


def buchberger(gens, enc, p, coprime=False, max_degree=None, preferred=0):
    """Reduced Groebner basis of the submodule spanned by ``gens``.

    Items are processed by (degree, pairs before generators, creation order).
    For homogeneous input this is the degree-by-degree algorithm and the
    generators that survive reduction form a minimal generating set.
    ``coprime`` enables Buchberger's first criterion (valid for ideals only).
    The first ``preferred`` generators are processed before the others of the
    same degree, so ``min_gens`` minus those indices minimally generates the
    quotient by the submodule they span.
    """
    homogeneous = all(is_homogeneous(g, enc) for g in gens)
    red = Reducer(enc, p)
    queue = []
    seq = 0
    for j, g in enumerate(gens):
        g = {k: v % p for k, v in g.items() if v % p}
        if not g:
            continue
        heapq.heappush(queue, (enc.total_degree(max(g)), 1 if j < preferred else 2, seq, j, g))
        seq += 1
    pairs = {}          # component key -> {(i, k): lcm code} for live pairs
    alive = {}          # component key -> basis indices still used for pairs
    min_gens = []

    def coprime_leads(i, k):
        ei, ek = enc.exps(red.leads[i]), enc.exps(red.leads[k])
        return all(a == 0 or b == 0 for a, b in zip(ei, ek))

    def add_element(h):
        nonlocal seq
        k = red.add(h)
        lk = red.leads[k]
        kk = red.keys[k]
        comp = kk[0]
        live = alive.setdefault(comp, [])
        cp = pairs.setdefault(comp, {})
        cand = []
        for i in live:
            l = _lcm_code(enc, red.leads[i], lk)
            cand.append((i, l, enc.div_key(l)))
        # Gebauer-Moeller: drop new pairs whose lcm is a multiple of another new lcm
        keep = []
        while cand:
            i, l, kl = cand.pop(0)
            cop = coprime and coprime_leads(i, k)
            if cop or not any(enc.divides(x[2], kl) for x in cand) \
                    and not any(enc.divides(x[2], kl) for x in keep):
                keep.append((i, l, kl, cop))
        # old pairs (i, j) killed by the new lead
        for (i, j), l in list(cp.items()):
            if enc.divides(kk, enc.div_key(l)) and _lcm_code(enc, red.leads[i], lk) != l \
                    and _lcm_code(enc, red.leads[j], lk) != l:
                del cp[(i, j)]
        # retire basis elements whose lead is divisible by the new lead
        for i in list(live):
            if enc.divides(kk, red.keys[i]) and red.leads[i] != lk:
                live.remove(i)
        for i, l, _, cop in keep:
            if cop:
                continue
            cp[(i, k)] = l
            heapq.heappush(queue, (enc.total_degree(l), 0, seq, (comp, i, k), None))
            seq += 1
        live.append(k)

    while queue:
        deg, kind, _, tag, g = heapq.heappop(queue)
        if max_degree is not None and deg > max_degree:
            break
        if kind == 0:
            comp, i, k = tag
            l = pairs[comp].pop((i, k), None)
            if l is None:
                continue
            s = spoly(enc, p, red.vecs[i], red.vecs[k], red.leads[i], red.leads[k], l)
            h = red.reduce(s)
            if h:
                add_element(make_monic(h, p))
        else:
            h = red.reduce(g)
            if h:
                min_gens.append(tag)
                add_element(make_monic(h, p))
    final = [i for live in alive.values() for i in live]
    # minimalize and interreduce
    mini = Reducer(enc, p)
    for i in sorted(final, key=lambda i: red.leads[i]):
        mini.add(red.vecs[i])
    basis = []
    for idx in range(len(mini.vecs)):
        v = mini.vecs[idx]
        lc = mini.leads[idx]
        tail = {k: c for k, c in v.items() if k != lc}
        tail = mini.reduce(tail, skip=idx) if tail else {}
        tail[lc] = v[lc]
        basis.append(tail)
    # replace in place so later tails see reduced elements is unnecessary: leads fixed
    basis.sort(key=max, reverse=True)
    return GBResult(basis, sorted(min_gens), homogeneous)


def to_vec(enc, column):
    """Sparse column ``{(comp, exps): c}`` to a packed vector."""
    return {enc.encode(c, e): v for (c, e), v in column.items()}


def from_vec(enc, vec, comp_offset=0):
    out = {}
    for k, v in vec.items():
        c, e = enc.decode(k)
        out[(c - comp_offset, e)] = v
    return out


def kernel(columns, target_twists, source_twists, weights, order, p, minimal=True):
    """Homogeneous kernel of the map sending e_j to ``columns[j]``.

    Columns are sparse dicts ``{(row, exps): c}``; column j must be
    homogeneous of degree ``source_twists[j]``.  Returns sparse columns in the
    source free module; with ``minimal`` they minimally generate the kernel.
    The computation adjoins an identity block and keeps the Groebner basis
    elements whose lead falls in the source block.
    """
    from .encoding import TermEncoder

    rg = len(target_twists)
    rf = len(source_twists)
    if rf == 0:
        return []
    twists = tuple(target_twists) + tuple(source_twists)
    blocks = (1,) * rg + (0,) * rf
    enc = TermEncoder(weights, order, twists, blocks)
    zero = (0,) * len(weights)
    gens = []
    for j, col in enumerate(columns):
        v = to_vec(enc, col)
        v[enc.encode(rg + j, zero)] = 1
        gens.append(v)
    for g in gens:
        if not is_homogeneous(g, enc):
            from .errors import NotHomogeneous
            raise NotHomogeneous("kernel computation needs homogeneous columns")
    res = buchberger(gens, enc, p)
    syz = [v for v in res.basis if enc.comp(max(v)) >= rg]
    if minimal and syz:
        syz = [syz[i] for i in buchberger(syz, enc, p).min_gens]
    return [from_vec(enc, v, rg) for v in syz]
