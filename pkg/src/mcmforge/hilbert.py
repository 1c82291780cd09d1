"""Hilbert series as Laurent numerators over products of (1 - t^w)."""
from fractions import Fraction
from math import prod


def _padd(a, b, s=1):
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, 0) + s * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _pmul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _one_minus(w):
    return {0: 1, w: -1}


def _divide_exact(num, w):
    """num / (1 - t^w) if exact, else None."""
    if not num:
        return {}
    num = dict(num)
    lo, hi = min(num), max(num)
    q = {}
    # (1 - t^w) * q = num: q_k = num_k + q_{k-w}
    for k in range(lo, hi - w + 1):
        c = num.get(k, 0) + q.get(k - w, 0)
        if c:
            q[k] = c
    check = _pmul(q, _one_minus(w))
    return q if check == {k: v for k, v in num.items() if v} else None


def _minimal(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def monomial_numerator(gens, weights):
    """Numerator N(J) with H(S/J) = N(J) / prod(1 - t^w) for a monomial ideal J."""
    gens = _minimal(gens)
    return _numer(tuple(gens), tuple(weights))


def _deg(m, w):
    return sum(a * b for a, b in zip(m, w))


def _numer(gens, w):
    if not gens:
        return {0: 1}
    if any(sum(g) == 0 for g in gens):
        return {}
    mixed = [g for g in gens if sum(1 for a in g if a) > 1]
    if not mixed:
        out = {0: 1}
        for g in gens:
            out = _pmul(out, _one_minus(_deg(g, w)))
        return out
    n = len(w)
    counts = [sum(1 for g in mixed if g[i]) for i in range(n)]
    i = max(range(n), key=lambda k: counts[k])
    e = min(g[i] for g in mixed if g[i])
    piv = tuple(e if k == i else 0 for k in range(n))
    added = _minimal(list(gens) + [piv])
    colon = _minimal([tuple(max(a - b, 0) for a, b in zip(g, piv)) for g in gens])
    a = _numer(tuple(added), w)
    b = _numer(tuple(colon), w)
    return _padd(a, {k + e * w[i]: v for k, v in b.items()})


class HilbertSeries:
    """numerator(t) / prod_i (1 - t^{w_i}) with an integer Laurent numerator.

    ``numerator`` is a {power: coefficient} dict or a coefficient list from t^0.
    """

    def __init__(self, numerator, weights):
        if not isinstance(numerator, dict):
            numerator = dict(enumerate(numerator))
        self.numerator = {int(k): int(v) for k, v in numerator.items() if v}
        self.weights = tuple(sorted(weights))

    @classmethod
    def zero(cls, weights=()):
        return cls({}, weights)

    def is_zero(self):
        return not self.numerator

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        a = self.numerator
        for w in other.weights:
            a = _pmul(a, _one_minus(w))
        b = other.numerator
        for w in self.weights:
            b = _pmul(b, _one_minus(w))
        return a == b

    __hash__ = None

    def _common(self, other):
        if sorted(self.weights) == sorted(other.weights):
            return self.numerator, other.numerator, self.weights
        a, b = self.numerator, other.numerator
        for w in other.weights:
            a = _pmul(a, _one_minus(w))
        for w in self.weights:
            b = _pmul(b, _one_minus(w))
        return a, b, self.weights + other.weights

    def __add__(self, other):
        a, b, w = self._common(other)
        return HilbertSeries(_padd(a, b), w)

    def __sub__(self, other):
        a, b, w = self._common(other)
        return HilbertSeries(_padd(a, b, -1), w)

    def shift(self, a):
        """Multiply by t^a."""
        return HilbertSeries({k + a: v for k, v in self.numerator.items()}, self.weights)

    def scale(self, c):
        return HilbertSeries({k: c * v for k, v in self.numerator.items()}, self.weights)

    def coefficients(self, lo, hi):
        """Expansion coefficients for degrees lo..hi inclusive."""
        if not self.numerator:
            return [0] * (hi - lo + 1)
        size = hi - min(self.numerator) + 1
        base = min(self.numerator)
        series = [0] * max(size, 0)
        for k, v in self.numerator.items():
            if k - base < size:
                series[k - base] += v
        for w in self.weights:
            for k in range(w, size):
                series[k] += series[k - w]
        return [series[d - base] if 0 <= d - base < size else 0 for d in range(lo, hi + 1)]

    def coefficient(self, d):
        return self.coefficients(d, d)[0]

    def reduced(self):
        """Cancel every denominator factor that divides the numerator."""
        num, ws = dict(self.numerator), list(self.weights)
        changed = True
        while changed and num:
            changed = False
            for w in sorted(set(ws), reverse=True):
                q = _divide_exact(num, w)
                if q is not None:
                    num = q
                    ws.remove(w)
                    changed = True
                    break
        return HilbertSeries(num, ws)

    def _at_one(self):
        """(order of vanishing of numerator at 1, value of the cofactor at 1)."""
        num = dict(self.numerator)
        k = 0
        while num:
            val = sum(num.values())
            if val:
                return k, val
            num = _divide_exact(num, 1)
            k += 1
        return None, 0

    def dimension(self):
        """Pole order at t = 1; -1 for the zero series."""
        k, _ = self._at_one()
        if k is None:
            return -1
        return len(self.weights) - k

    def multiplicity(self):
        """Leading coefficient c with H ~ c / (1-t)^dim near t = 1."""
        k, val = self._at_one()
        if k is None:
            return Fraction(0)
        return Fraction(val, prod(self.weights))

    def is_polynomial(self):
        return self.reduced().weights == ()

    def length(self):
        """Total dimension when finite, else None."""
        r = self.reduced()
        if r.weights:
            return None
        return sum(r.numerator.values())

    def numerator_list(self):
        """(lowest degree, coefficient list) of the numerator."""
        if not self.numerator:
            return 0, []
        lo, hi = min(self.numerator), max(self.numerator)
        return lo, [self.numerator.get(k, 0) for k in range(lo, hi + 1)]

    def __repr__(self):
        return f"HilbertSeries({self})"

    def __str__(self):
        num = _format_laurent(self.numerator)
        groups = {}
        for w in self.weights:
            groups[w] = groups.get(w, 0) + 1
        dens = []
        for w, c in sorted(groups.items()):
            base = "(1-t)" if w == 1 else f"(1-t^{w})"
            dens.append(base if c == 1 else f"{base}^{c}")
        if not dens:
            return num
        if len(self.numerator) > 1:
            num = f"({num})"
        return f"{num}/{'*'.join(dens)}"


def _format_laurent(num):
    if not num:
        return "0"
    parts = []
    for k in sorted(num):
        c = num[k]
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if mono and abs(c) == 1:
            s = mono
        elif mono:
            s = f"{abs(c)}{mono}"
        else:
            s = str(abs(c))
        parts.append(("-" if c < 0 else "+", s))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, s in parts[1:]:
        out += sign + s
    return out
