"""Sparse multivariate polynomials over F_p and their text format."""
import re

from .errors import LengthMismatch, MalformedExpression, NotHomogeneous, UnknownVariable
from .field import check_characteristic, inverse
from .monomial import GREVLEX, Grading, weighted_degree


class PolynomialRing:
    """S = F_p[x_1, ..., x_n] with positive variable weights and a monomial order."""

    def __init__(self, p, names, weights=None, order=GREVLEX):
        self.p = check_characteristic(p)
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        for name in self.names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"invalid variable name {name!r}")
        self.grading = Grading(weights if weights is not None else (1,) * len(self.names))
        if len(self.grading) != len(self.names):
            raise LengthMismatch("one weight per variable required")
        self.order = order
        self._index = {n: i for i, n in enumerate(self.names)}

    @property
    def ngens(self):
        return len(self.names)

    @property
    def weights(self):
        return self.grading.weights

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and self.p == other.p and self.names == other.names
                and self.weights == other.weights and self.order == other.order)

    def __hash__(self):
        return hash((self.p, self.names, self.weights, self.order))

    def __repr__(self):
        w = "" if all(x == 1 for x in self.weights) else f", weights={self.weights}"
        return f"PolynomialRing(F_{self.p}[{','.join(self.names)}]{w})"

    def with_weights(self, weights):
        return PolynomialRing(self.p, self.names, weights, self.order)

    def with_order(self, order):
        return PolynomialRing(self.p, self.names, self.weights, order)

    def extend(self, names, weights=None):
        """Polynomial ring with extra variables appended."""
        weights = tuple(weights) if weights is not None else (1,) * len(names)
        return PolynomialRing(self.p, self.names + tuple(names), self.weights + weights, self.order)

    def zero_exp(self):
        return (0,) * self.ngens

    def degree(self, exps):
        return weighted_degree(exps, self.grading)

    def sort_key(self, exps):
        return self.order.sort_key(exps, self.weights)

    def var_index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    def gen(self, i):
        if isinstance(i, str):
            i = self.var_index(i)
        e = [0] * self.ngens
        e[i] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self):
        return [self.gen(i) for i in range(self.ngens)]

    def one(self):
        return Polynomial(self, {self.zero_exp(): 1})

    def zero(self):
        return Polynomial(self, {})

    def constant(self, c):
        return Polynomial(self, {self.zero_exp(): c})

    def monomial(self, exps, c=1):
        return Polynomial(self, {tuple(exps): c})

    def __call__(self, x):
        if isinstance(x, Polynomial):
            if x.ring.names == self.names and x.ring.p == self.p:
                return Polynomial(self, x.terms)
            return x.lift_to(self)
        if isinstance(x, int):
            return self.constant(x)
        if isinstance(x, dict):
            return Polynomial(self, x)
        return parse_polynomial(x, self)

    def monomials_of_degree(self, d):
        """All exponent vectors of weighted degree d, in descending order."""
        out = []
        w = self.weights
        n = self.ngens

        def rec(i, left, cur):
            if i == n - 1:
                if left % w[i] == 0:
                    out.append(tuple(cur + [left // w[i]]))
                return
            for e in range(left // w[i], -1, -1):
                rec(i + 1, left - e * w[i], cur + [e])

        if d < 0:
            return []
        if n == 0:
            return [()] if d == 0 else []
        rec(0, d, [])
        out.sort(key=self.sort_key, reverse=True)
        return out


class Polynomial:
    """Immutable sparse polynomial: mapping exponent tuple -> residue in [1, p)."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        p = ring.p
        clean = {}
        for m, c in terms.items():
            c = int(c) % p
            if c:
                clean[tuple(m)] = c
        self.ring = ring
        self.terms = clean
        self._hash = None

    # -- basic structure -------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.sort_key(t[0]), reverse=True)

    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=self.ring.sort_key)

    def lead_coefficient(self):
        return self.terms[self.lead_monomial()]

    def monic(self):
        if not self.terms:
            return self
        inv = inverse(self.lead_coefficient(), self.ring.p)
        return Polynomial(self.ring, {m: c * inv for m, c in self.terms.items()})

    def degrees(self):
        return {self.ring.degree(m) for m in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        """Weighted degree; the maximum one if not homogeneous; -1 for zero."""
        ds = self.degrees()
        return max(ds) if ds else -1

    def homogeneous_degree(self):
        ds = self.degrees()
        if len(ds) > 1:
            raise NotHomogeneous(f"{self} is not homogeneous")
        return ds.pop() if ds else None

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    # -- arithmetic ------------------------------------------------------
    def _check(self, other):
        if isinstance(other, int):
            return self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise ValueError("polynomials from different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = (t.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def frobenius(self, q):
        """f(x)^q computed as f(x^q): valid over F_p since c^q = c."""
        return Polynomial(self.ring, {tuple(q * e for e in m): c for m, c in self.terms.items()})

    def scale(self, c):
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_monomial(self, exps, c=1):
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(m, exps)): v * c for m, v in self.terms.items()})

    def substitute_zero(self, indices):
        """Set the variables at the given indices to zero."""
        idx = set(indices)
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if not any(m[i] for i in idx)})

    def lift_to(self, ring):
        """Re-express in a ring whose variables include ours (matched by name)."""
        pos = [ring.var_index(n) for n in self.ring.names]
        t = {}
        for m, c in self.terms.items():
            e = [0] * ring.ngens
            for i, v in zip(pos, m):
                e[i] = v
            t[tuple(e)] = c
        return Polynomial(ring, t)

    # -- comparison ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return print_polynomial(self)


def _format_monomial(m, names):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def print_polynomial(f):
    """Render in the ASCII grammar accepted by :func:`parse_polynomial`."""
    if not f.terms:
        return "0"
    out = []
    for m, c in f.sorted_terms():
        mono = _format_monomial(m, f.ring.names)
        if not mono:
            s = str(c)
        elif c == 1:
            s = mono
        else:
            s = f"{c}*{mono}"
        out.append(s)
    return "+".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(src):
    tokens = []
    pos = 0
    src = src.rstrip()
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise MalformedExpression(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    # expr   := ['+'|'-'] term (('+'|'-') term)*
    # term   := factor (['*'] factor)*
    # factor := atom ('^' int)?
    # atom   := int | name | '(' expr ')'
    def __init__(self, src, ring):
        self.ring = ring
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise MalformedExpression(f"expected {kind!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise MalformedExpression("empty expression", 0)
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise MalformedExpression(f"unexpected token {tok[1]!r}", tok[2])
        return f

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        f = self.term().scale(sign)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.factor()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                f = f * self.factor()
            elif kind in ("int", "name", "("):
                f = f * self.factor()
            else:
                return f

    def factor(self):
        f = self.atom()
        if self.peek()[0] == "^":
            self.take()
            k = self.take("int")[1]
            f = f ** k
        return f

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return self.ring.constant(val)
        if kind == "name":
            self.take()
            try:
                return self.ring.gen(val)
            except UnknownVariable:
                raise UnknownVariable(f"unknown variable {val!r} at column {pos + 1}", pos) from None
        if kind == "(":
            self.take()
            f = self.expr()
            self.take(")")
            return f
        raise MalformedExpression(f"unexpected token {val!r}", pos)


def parse_polynomial(src, ring):
    """Parse ``src`` into a normalized polynomial of ``ring`` (coefficients mod p)."""
    return _Parser(src, ring).parse()
