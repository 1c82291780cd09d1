"""Weighted monomials, gradings and monomial orders.

A monomial is a tuple of non-negative exponents, one per ambient variable.
"""
from dataclasses import dataclass

from .errors import LengthMismatch, ParameterRange

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class Grading:
    weights: tuple

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if any(x < 1 for x in w):
            raise ParameterRange(f"variable weights must be positive, got {w}")
        object.__setattr__(self, "weights", w)

    def __len__(self):
        return len(self.weights)

    def scaled(self, q):
        return Grading(tuple(q * w for w in self.weights))

    @classmethod
    def standard(cls, n):
        return cls((1,) * n)


def weighted_degree(m, g):
    weights = g.weights if isinstance(g, Grading) else tuple(g)
    if len(m) != len(weights):
        raise LengthMismatch(f"monomial has {len(m)} exponents but grading has {len(weights)} weights")
    return sum(e * w for e, w in zip(m, weights))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    """True iff a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(b, a):
    return tuple(y - x for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """One of ``weighted-grevlex`` (default), ``weighted-lex`` or ``elimination``.

    ``weighted-lex`` compares weighted degree first and breaks ties
    lexicographically.  ``elimination`` with ``block=k`` is the product of
    weighted grevlex on the first ``k`` variables and weighted grevlex on
    the rest, so any term involving the first block dominates.
    """

    kind: str = "weighted-grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("weighted-grevlex", "weighted-lex", "elimination"):
            raise ParameterRange(f"unknown monomial order {self.kind!r}")
        if self.kind == "elimination" and self.block < 1:
            raise ParameterRange("elimination order needs a block size >= 1")

    def layout(self, n):
        """Describe the order as a sequence of ('lin', mask) / ('rev', vars) / ('lex', vars) parts.

        A 'lin' part is the weighted degree restricted to the vars in mask.
        Parts are listed from most to least significant.
        """
        allv = tuple(range(n))
        if self.kind == "weighted-grevlex":
            return (("lin", allv), ("rev", allv))
        if self.kind == "weighted-lex":
            return (("lin", allv), ("lex", allv))
        k = min(self.block, n)
        first, rest = tuple(range(k)), tuple(range(k, n))
        return (("lin", first), ("rev", first), ("lin", rest), ("rev", rest))

    def sort_key(self, m, weights):
        key = []
        for part, vs in self.layout(len(m)):
            if part == "lin":
                key.append(sum(m[v] * weights[v] for v in vs))
            elif part == "rev":
                key.extend(-m[v] for v in reversed(vs))
            else:
                key.extend(m[v] for v in vs)
        return tuple(key)


GREVLEX = MonomialOrder()


def monomial_compare(a, b, o=GREVLEX, g=None):
    if len(a) != len(b):
        raise LengthMismatch("monomials of different lengths")
    if g is None:
        g = Grading.standard(len(a))
    weights = g.weights if isinstance(g, Grading) else tuple(g)
    if len(weights) != len(a):
        raise LengthMismatch("grading does not match monomial length")
    ka, kb = o.sort_key(a, weights), o.sort_key(b, weights)
    if ka < kb:
        return LESS
    if ka > kb:
        return GREATER
    return EQUAL
