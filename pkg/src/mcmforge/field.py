"""Arithmetic in prime fields F_p.

Internally every engine works with plain ``int`` residues in ``[0, p)``;
:class:`PrimeFieldElement` is the user-facing value type.
"""
from functools import lru_cache

from .errors import NotPrime

MAX_CHARACTERISTIC = 2 ** 31


@lru_cache(maxsize=None)
def is_prime(p):
    """Trial division up to sqrt(p); cached so each modulus is checked once."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_characteristic(p):
    if not isinstance(p, int) or p >= MAX_CHARACTERISTIC or not is_prime(p):
        raise NotPrime(f"characteristic must be a prime below 2^31, got {p!r}")
    return p


def inverse(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in F_%d" % p)
    return pow(a, p - 2, p)


class PrimeFieldElement:
    """An element of F_p; immutable."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        check_characteristic(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", int(value) % p)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError("elements of different prime fields")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def inverse(self):
        return PrimeFieldElement(inverse(self.value, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * PrimeFieldElement(inverse(o, self.p), self.p)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return PrimeFieldElement(pow(self.value, k, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)
