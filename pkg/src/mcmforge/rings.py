"""Graded quotient rings S/I with cached invariants."""
from functools import cached_property

from .groebner import Ideal
from .modules import ring_module
from .polynomial import Polynomial, PolynomialRing
from .resolutions import (canonical_module, depth, krull_dimension, local_cohomology_lengths,
                          minimal_free_resolution)
from .errors import NotHomogeneous


class GradedRing:
    """R = S / I for a weighted polynomial ring S over F_p and a homogeneous ideal I."""

    def __init__(self, ring, ideal=(), name=None, domain=False):
        self.S = ring
        if not isinstance(ideal, Ideal):
            ideal = Ideal(ring, ideal)
        if not ideal.homogeneous:
            raise NotHomogeneous("the defining ideal must be homogeneous")
        self.ideal = ideal
        self.name = name or "R"
        self.domain = domain        # user assertion, never verified

    @classmethod
    def from_strings(cls, p, names, gens=(), weights=None, name=None, domain=False):
        S = PolynomialRing(p, names, weights)
        return cls(S, [S(g) for g in gens], name, domain)

    def __repr__(self):
        gens = ", ".join(map(str, self.ideal.generators)) or "0"
        return f"GradedRing({self.name}: {self.S} / ({gens}))"

    @property
    def p(self):
        return self.S.p

    @property
    def ngens(self):
        return self.S.ngens

    @property
    def weights(self):
        return self.S.weights

    def __call__(self, f):
        return self.S(f)

    @cached_property
    def module(self):
        """R as a free module over itself."""
        return ring_module(self.S, self.ideal)

    @cached_property
    def resolution(self):
        return minimal_free_resolution(self.module)

    def hilbert_series(self):
        return self.module.hilbert_series()

    @cached_property
    def dimension(self):
        return krull_dimension(self.module)

    @cached_property
    def depth(self):
        return depth(self.module, self.resolution)

    @cached_property
    def lc_table(self):
        return local_cohomology_lengths(self.module, self.resolution)

    @cached_property
    def canonical(self):
        return canonical_module(self.S, self.ideal)

    def is_cohen_macaulay(self):
        return self.depth == self.dimension

    def is_gorenstein(self):
        w = self.canonical
        return self.is_cohen_macaulay() and w.rank == 1 and not w.relations

    def quotient(self, elems, name=None):
        elems = [self.S(f) if not isinstance(f, Polynomial) else f for f in elems]
        return GradedRing(self.S, list(self.ideal.generators) + elems,
                          name or f"{self.name}/({', '.join(map(str, elems))})", self.domain)

    def extend(self, names, weights=None, name=None):
        """R[X_1, ..., X_k]."""
        S2 = self.S.extend(names, weights)
        gens = [g.lift_to(S2) for g in self.ideal.generators]
        return GradedRing(S2, gens, name or f"{self.name}[{','.join(names)}]", self.domain)
