"""A-polynomials by elimination, Newton polygons, slope sets, coprimality.

The A-polynomial of a twist-knot model is obtained by eliminating (s, t)
from the Riley polynomial and the longitude-eigenvalue relation, then
substituting M = s.  The boundary-slope criterion works on Newton polygons:
disjointness of SS(N(f1)) and SS(N(f2))^-1 certifies a monomial gcd.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .polyring import (
    MultiPoly, DegenerateInputError, EliminationError,
    divide_exact, gcd, reduce_mod, resultant, squarefree_part,
)

LM = ("L", "M")

#: slope of a vertical polygon side; inverse of slope 0 under 0*inf = 1
INFINITY = float("inf")


def a_polynomial(model):
    """Parametrized A-polynomial of J(2,2q) in (L, M).

    Returns the primitive squarefree integer polynomial containing the
    abelian factor L - 1, divisible by neither L nor M.
    """
    from .twistknot import longitude_matrix, riley_polynomial

    phi, _ = riley_polynomial(model)
    Lmat, _ = longitude_matrix(model)
    low = reduce_mod(Lmat.a21, phi, "t")
    if not low.is_zero():
        raise EliminationError(
            "longitude matrix is not upper triangular modulo the Riley polynomial")
    eig = reduce_mod(Lmat.a11, phi, "t")

    vars = ("L", "s", "t")
    phi_v = phi.embed(vars)
    rel = MultiPoly.var(vars, "L") - eig.embed(vars)
    if rel.degree("t") <= 0:
        elim = rel
    else:
        elim = resultant(phi_v, rel, "t")
        if elim.is_zero():
            raise EliminationError(
                "t-elimination collapsed; intermediate relation: %s" % rel)
    a = elim.rename({"s": "M"}).embed(("L", "M"))
    a = squarefree_part(a)
    l_minus_1 = MultiPoly(LM, {(1, 0): Fraction(1), (0, 0): Fraction(-1)})
    if divide_exact(a.clear_laurent(), l_minus_1) is None:
        a = a * l_minus_1
    a = a.strip_monomial().primitive()
    m_minus_1 = MultiPoly(LM, {(0, 1): Fraction(1), (0, 0): Fraction(-1)})
    if divide_exact(a, m_minus_1) is not None:
        raise EliminationError("A-polynomial acquired the factor M - 1")
    return a


def transpose(f):
    """f^T(L, M) = f(M, L): swap the two exponents."""
    if len(f.vars) != 2:
        raise DegenerateInputError("transpose expects a two-variable polynomial")
    return MultiPoly(f.vars, {(j, i): c for (i, j), c in f.terms.items()})


# -- lattice geometry ------------------------------------------------------

def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Counterclockwise hull of integer points, no collinear vertices kept."""
    pts = sorted(set(points))
    if len(pts) <= 1:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:  # all points collinear collapse to the two extremes
        return [pts[0], pts[-1]]
    return hull


@dataclass(frozen=True)
class NewtonPolygon:
    """Convex lattice polygon; degenerate cases (point, segment) allowed."""

    vertices: tuple

    @classmethod
    def of(cls, f):
        if f.is_zero():
            raise DegenerateInputError("zero polynomial has no Newton polygon")
        return cls(tuple(convex_hull([(e[0], e[1]) for e in f.terms])))

    @classmethod
    def from_points(cls, points):
        if not points:
            raise DegenerateInputError("empty point set")
        return cls(tuple(convex_hull(list(points))))

    def is_point(self):
        return len(self.vertices) == 1

    def sides(self):
        v = self.vertices
        if len(v) <= 1:
            return []
        if len(v) == 2:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def minkowski_sum(self, other):
        pts = [(a[0] + b[0], a[1] + b[1]) for a in self.vertices for b in other.vertices]
        return NewtonPolygon.from_points(pts)

    def __add__(self, other):
        return self.minkowski_sum(other)


def newton_polygon(f):
    return NewtonPolygon.of(f)


def minkowski_sum(p, q):
    return p.minkowski_sum(q)


def slope_set(polygon):
    """Set of side slopes; exact rationals with INFINITY for vertical sides."""
    slopes = set()
    for (x0, y0), (x1, y1) in polygon.sides():
        dx, dy = x1 - x0, y1 - y0
        slopes.add(INFINITY if dx == 0 else Fraction(dy, dx))
    return slopes


def invert_slopes(slopes):
    """Elementwise inversion with the convention 0 * inf = 1."""
    out = set()
    for s in slopes:
        if s == INFINITY:
            out.add(Fraction(0))
        elif s == 0:
            out.add(INFINITY)
        else:
            out.add(1 / Fraction(s))
    return out


# -- the finiteness criterion ---------------------------------------------

@dataclass
class CoprimalityResult:
    status: str  # certified_coprime_by_slopes | coprime_by_gcd | not_coprime
    slopes_1: set
    slopes_2_inverted: set
    gcd: MultiPoly = None

    @property
    def coprime(self):
        return self.status != "not_coprime"

    @property
    def route(self):
        return "slopes" if self.status == "certified_coprime_by_slopes" else "gcd"


def coprimality_criterion(f1, f2):
    """Decide whether gcd(f1, f2^T) is trivial.

    First tries the sufficient slope-set condition
    SS(N(f1)) & SS(N(f2))^-1 = {}; otherwise falls back to an exact gcd.
    A monomial gcd counts as coprime: the inputs are normalized to be
    divisible by neither variable.
    """
    if f1.is_zero() or f2.is_zero():
        raise DegenerateInputError("criterion inputs must be nonzero")
    f1 = f1.clear_laurent().strip_monomial()
    f2 = f2.clear_laurent().strip_monomial()
    ss1 = slope_set(NewtonPolygon.of(f1))
    ss2_inv = invert_slopes(slope_set(NewtonPolygon.of(f2)))
    if not (ss1 & ss2_inv):
        return CoprimalityResult("certified_coprime_by_slopes", ss1, ss2_inv)
    g = gcd(f1, transpose(f2))
    if g.is_monomial():
        return CoprimalityResult("coprime_by_gcd", ss1, ss2_inv, g)
    return CoprimalityResult("not_coprime", ss1, ss2_inv, g)


def slope_to_json(s):
    if s == INFINITY:
        return "inf"
    s = Fraction(s)
    return "%d/%d" % (s.numerator, s.denominator) if s.denominator != 1 else str(s.numerator)


def criterion_report(name1, name2, f1, f2):
    res = coprimality_criterion(f1, f2)
    return {
        "pair": [name1, name2],
        "route": res.route,
        "coprime": res.coprime,
        "slope_sets": {
            "first": sorted(slope_to_json(s) for s in res.slopes_1),
            "second_inverted": sorted(slope_to_json(s) for s in res.slopes_2_inverted),
        },
        "status": res.status,
    }
