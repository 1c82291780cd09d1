"""Line-oriented ring definition files.

    ring R3
    char 2
    vars a b c d
    weights 1 1 1 1
    ideal
      a*d-b*c
      b^3-a^2*c
    assert domain

Blank lines and text after '#' are ignored.
"""
import hashlib
from dataclasses import dataclass, field

from .errors import MalformedExpression, ParseError, ParameterRange, UnknownVariable
from .field import is_prime
from .polynomial import PolynomialRing, parse_polynomial
from .rings import GradedRing


@dataclass
class RingFile:
    name: str = "R"
    p: int = 0
    names: list = field(default_factory=list)
    weights: list = None
    generators: list = field(default_factory=list)     # (text, line, column)
    domain: bool = False
    notes: list = field(default_factory=list)
    digest: str = ""

    def to_ring(self):
        S = PolynomialRing(self.p, self.names, self.weights)
        gens = []
        for text, line, col in self.generators:
            try:
                f = parse_polynomial(text, S)
            except MalformedExpression as ex:
                raise ParseError(str(ex), line, col + (ex.position or 0)) from None
            except UnknownVariable as ex:
                raise ParseError(f"unknown variable in {text!r}", line, col + (ex.position or 0)) from None
            if not f.is_homogeneous():
                raise ParseError(f"generator {text!r} is not homogeneous", line, col)
            gens.append(f)
        return GradedRing(S, gens, self.name, self.domain)


def parse_ring_text(text):
    rf = RingFile(digest=hashlib.sha256(text.encode()).hexdigest())
    in_ideal = False
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        if in_ideal and indent > 0:
            rf.generators.append((line.strip(), lineno, indent + 1))
            continue
        in_ideal = False
        if indent:
            raise ParseError("unexpected indentation", lineno, 1)
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        col = len(key) + 2
        if key in seen and key not in ("assert", "note"):
            raise ParseError(f"duplicate '{key}' line", lineno, 1)
        seen.add(key)
        if key == "ring":
            if not rest:
                raise ParseError("ring needs a name", lineno, col)
            rf.name = rest
        elif key == "char":
            try:
                p = int(rest)
            except ValueError:
                raise ParseError(f"characteristic {rest!r} is not an integer", lineno, col) from None
            if not is_prime(p) or p >= 2 ** 31:
                raise ParseError(f"characteristic {p} is not a prime below 2^31", lineno, col)
            rf.p = p
        elif key == "vars":
            names = rest.split()
            if not names:
                raise ParseError("vars needs at least one name", lineno, col)
            if len(set(names)) != len(names):
                raise ParseError("variable names must be distinct", lineno, col)
            rf.names = names
        elif key == "weights":
            try:
                w = [int(x) for x in rest.split()]
            except ValueError:
                raise ParseError("weights must be integers", lineno, col) from None
            if any(x < 1 for x in w):
                raise ParseError("weights must be positive", lineno, col)
            rf.weights = w
        elif key == "ideal":
            if rest:
                rf.generators.append((rest, lineno, col))
            in_ideal = True
        elif key == "assert":
            if rest != "domain":
                raise ParseError(f"unknown assertion {rest!r}", lineno, col)
            rf.domain = True
        elif key == "note":
            rf.notes.append(rest)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, 1)
    if not rf.p:
        raise ParseError("missing 'char' line")
    if not rf.names:
        raise ParseError("missing 'vars' line")
    if rf.weights is not None and len(rf.weights) != len(rf.names):
        raise ParseError("one weight per variable required")
    return rf


def load_ring_file(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_ring_text(text)


def parse_sequence(text, ring):
    """'g1;g2;...' parsed over the ring's polynomial ring."""
    out = []
    for part in (text or "").split(";"):
        if part.strip():
            try:
                out.append(parse_polynomial(part.strip(), ring.S))
            except (MalformedExpression, UnknownVariable) as ex:
                raise ParameterRange(f"bad element {part.strip()!r}: {ex}") from None
    return out
