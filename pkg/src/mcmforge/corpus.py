"""Small rings used throughout the tests, demos and acceptance runs."""
from itertools import combinations

from .rings import GradedRing


def polynomial_ring(p=2, names="xy", weights=None):
    label = f"S_F{p}[{','.join(names)}]" + (f"w{''.join(map(str, weights))}" if weights else "")
    return GradedRing.from_strings(p, names, (), weights, label, domain=True)


def r2():
    """F_2[x,y]/(x^2)."""
    return GradedRing.from_strings(2, "xy", ["x^2"], name="R2")


def r3():
    """The semigroup ring k[s^4, s^3u, su^3, u^4] over F_2 (depth 1, dim 2)."""
    gens = ["a*d-b*c", "a*c^2-b^2*d", "b^3-a^2*c", "c^3-b*d^2"]
    return GradedRing.from_strings(2, "abcd", gens, name="R3", domain=True)


def r4():
    """Two coordinate planes meeting in a point: F_2[x,y,z,w]/(xz,xw,yz,yw)."""
    return GradedRing.from_strings(2, "xyzw", ["x*z", "x*w", "y*z", "y*w"], name="R4")


def r6():
    """A plane union a line: F_2[x,y,z]/(xy,xz), not generalized Cohen-Macaulay."""
    return GradedRing.from_strings(2, "xyz", ["x*y", "x*z"], name="R6")


def node():
    """F_2[x,y]/(xy), F-split and one-dimensional."""
    return GradedRing.from_strings(2, "xy", ["x*y"], name="node")


def double_point():
    """F_2[x]/(x^2), not reduced hence not F-split."""
    return GradedRing.from_strings(2, "x", ["x^2"], name="double_point")


def hypersurface(p=2, names="xy", f="x^2+y^2", weights=None, name=None):
    return GradedRing.from_strings(p, names, [f], weights, name or f"hypersurface({f})")


def thick_planes():
    """S/((x,y) cap (z,w)^2): H^1 is k[z,w]/(z,w)^2, not killed by m."""
    gens = ["x*z^2", "x*z*w", "x*w^2", "y*z^2", "y*z*w", "y*w^2"]
    return GradedRing.from_strings(2, "xyzw", gens, name="thick_planes")


def three_planes():
    """F_2[x1,x2,x3,y1,y2,y3]/(x_i y_j): two 3-spaces glued at a point (dim 3, depth 1)."""
    names = ["x1", "x2", "x3", "y1", "y2", "y3"]
    gens = [f"x{i}*y{j}" for i in (1, 2, 3) for j in (1, 2, 3)]
    return GradedRing.from_strings(2, names, gens, name="three_planes")


RP2_FACETS = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
              (2, 3, 5), (3, 4, 6), (2, 4, 5), (2, 4, 6), (3, 5, 6)]


def stanley_reisner(facets, nverts, p=2, name="SR"):
    """Stanley-Reisner ring of the simplicial complex with the given facets."""
    faces = set()
    for f in facets:
        for k in range(len(f) + 1):
            faces.update(combinations(f, k))
    names = [f"v{i}" for i in range(1, nverts + 1)]
    minimal = []
    for k in range(1, nverts + 1):
        for c in combinations(range(1, nverts + 1), k):
            if c in faces:
                continue
            if any(set(m) <= set(c) for m in minimal):
                continue
            minimal.append(c)
    gens = ["*".join(f"v{i}" for i in m) for m in minimal]
    return GradedRing.from_strings(p, names, gens, name=name)


def rp2():
    """Six-vertex triangulation of the real projective plane, over F_2."""
    return stanley_reisner(RP2_FACETS, 6, 2, name="RP2")


# seven-vertex torus: facets {i, i+1, i+3} and {i, i+2, i+3} mod 7, vertices 1..7
TORUS_FACETS = sorted({tuple(sorted((i + a) % 7 + 1 for a in f))
                       for i in range(7) for f in ((0, 1, 3), (0, 2, 3))})


def torus():
    """Seven-vertex torus over F_2: dim 3, depth 2, length(H^2) = 2."""
    return stanley_reisner(TORUS_FACETS, 7, 2, name="torus")


def oracle_corpus():
    """Rings compared against the brute-force oracle."""
    return {
        "S_x": polynomial_ring(2, "x"),
        "S_xy": polynomial_ring(2, "xy"),
        "S_xyz_F3": polynomial_ring(3, "xyz"),
        "S_xy_w12": polynomial_ring(2, "xy", (1, 2)),
        "R2": r2(),
        "R3": r3(),
        "R4": r4(),
        "R6": r6(),
    }
