"""Splice gluing of two twist-knot exteriors and Reidemeister torsion values.

The splice identifies meridian_1 = longitude_2 and longitude_1 = meridian_2.
On traces this composes the two boundary relations into one polynomial
equation for xi = tr(X_1); every solved root is then lifted back to matrices
and the gluing verified exactly at the matrix level, which is what separates
genuine splice characters from characters of the splice with a mirror image.

Torsion convention: tau(E(K)) = det rho(dr/dy) / det(rho(x) - I_2) for the
two-generator presentation <x, y | r>, which reproduces the known value 2
for the trefoil.  Non-acyclic representations get torsion 0.
"""

import cmath
from dataclasses import dataclass, field

import numpy as np

from .polyring import MultiPoly, EliminationError, resultant
from .rootfind import solve_roots
from .twistknot import build_model, riley_polynomial, riley_t_roots, xi_relation
from .words import Mat2, evaluate_group_ring, evaluate_word, fox_derivative


@dataclass
class Tolerances:
    root_cert: float = 1e-9
    dedup: float = 1e-7
    rank: float = 1e-8
    gluing: float = 1e-8


@dataclass
class SpliceSystem:
    q1: int
    q2: int
    relation1: MultiPoly  # R1(xi_lambda, xi_mu) for the K1 side
    relation2: MultiPoly
    xi_equation: MultiPoly  # univariate in xi


@dataclass
class SpliceCharacter:
    xi1: complex
    xi2: complex
    s1: complex
    t1: complex
    s2: complex
    t2: complex
    c_squared: complex
    residual: float
    mirror: bool
    acyclic_on_torus: bool = None
    homology_dims: tuple = None
    torsion_1: complex = None
    torsion_2: complex = None
    torsion_product: complex = None

    @property
    def genuine(self):
        return not self.mirror


def splice_equation(q1, q2):
    """Compose the two xi-relations through the gluing into one equation.

    tr X_1 = tr L_2 and tr L_1 = tr X_2; with a = tr X_1 and b = tr X_2 the
    system is R1(b, a) = R2(a, b) = 0 and b is eliminated by a resultant.
    """
    r1 = xi_relation(build_model(q1))
    r2 = xi_relation(build_model(q2))
    ab = ("a", "b")
    p1 = r1.rename({"xi_lambda": "b", "xi_mu": "a"}).embed(ab)
    p2 = r2.rename({"xi_lambda": "a", "xi_mu": "b"}).embed(ab)
    if p1.degree("b") <= 0 or p2.degree("b") <= 0:
        raise EliminationError(
            "gluing relations do not involve the other boundary trace: %s / %s"
            % (p1, p2))
    eq = resultant(p1, p2, "b")
    if eq.is_zero():
        raise EliminationError(
            "splice elimination collapsed; relations were %s and %s" % (p1, p2))
    eq = eq.rename({"a": "xi", "b": "xi_drop"}).embed(("xi", "xi_drop"))
    eq = eq.embed(("xi",)).strip_monomial().primitive()
    return SpliceSystem(q1, q2, r1, r2, eq)


def _det(m):
    return m.a11 * m.a22 - m.a12 * m.a21


def _upper_entries(mat):
    return np.array([[mat.a11, mat.a12], [mat.a21, mat.a22]])


def solve_characters(system, tol=None, seed=0):
    """Solve, lift and classify all characters of the splice.

    Every root of the xi-equation is lifted through each Riley t-branch on
    both sides; the matrix gluing is then verified directly.  Genuine
    characters satisfy L1 = X2 and L2 = X1; mirror characters satisfy
    L1 = X2^-1 and L2 = X1 and belong to the splice with the mirror image.
    Roots admitting no certified lift (e.g. xi = -2 for the trefoil pair)
    are dropped as spurious.
    """
    tol = tol or Tolerances()
    m1 = build_model(system.q1)
    m2 = build_model(system.q2)
    phi1, _ = riley_polynomial(m1)
    phi2, _ = riley_polynomial(m2)
    roots = solve_roots(system.xi_equation, cert_tol=tol.root_cert, seed=seed)

    chars = []
    for root in roots:
        xi1 = root.value
        s1 = (xi1 + cmath.sqrt(xi1 * xi1 - 4)) / 2
        if abs(s1) < 1e-12:
            continue
        for t1 in riley_t_roots(m1, s1, phi1):
            if abs(t1) < 1e-9:
                continue  # reducible branch
            rho1 = m1.numeric_assignment(s1, t1)
            X1 = rho1["x"]
            L1 = evaluate_word(m1.lambda_word, rho1)
            scale = max(1.0, max(abs(e) for e in L1.entries))
            for mirror in (False, True):
                X2 = L1.inverse() if mirror else L1
                if abs(X2.a21) > tol.gluing * scale:
                    continue
                s2 = X2.a11
                c2 = X2.a12
                if abs(s2) < 1e-12 or abs(c2) < 1e-12 * scale:
                    continue
                xi2 = X2.trace()
                for t2 in riley_t_roots(m2, s2, phi2):
                    if abs(t2) < 1e-9:
                        continue
                    Y2 = Mat2(s2, 0j, -t2 / c2, 1.0 / s2)
                    L2 = evaluate_word(m2.lambda_word, {"x": X2, "y": Y2})
                    res = L2.max_abs_diff(X1)
                    res = max(res,
                              abs(phi1.eval({"s": s1, "t": t1})),
                              abs(phi2.eval({"s": s2, "t": t2})))
                    if res <= tol.gluing * scale:
                        chars.append(SpliceCharacter(
                            xi1=xi1, xi2=xi2, s1=s1, t1=t1, s2=s2, t2=t2,
                            c_squared=c2, residual=float(res), mirror=mirror))

    for ch in chars:
        rho1 = m1.numeric_assignment(ch.s1, ch.t1)
        X1 = rho1["x"]
        L1 = evaluate_word(m1.lambda_word, rho1)
        ch.acyclic_on_torus, ch.homology_dims = torus_acyclicity(
            X1, L1, rank_tol=tol.rank)
        ch.torsion_1 = torsion_exterior(m1, ch.s1, ch.t1)
        ch.torsion_2 = torsion_exterior(m2, ch.s2, ch.t2)
        ch.torsion_product = ch.torsion_1 * ch.torsion_2
    chars.sort(key=lambda c: (c.xi1.real, c.xi1.imag, c.mirror))
    return chars


# -- torus homology --------------------------------------------------------

def torus_acyclicity(X, L, rank_tol=1e-8, comm_tol=1e-8):
    """Acyclicity of a torus representation from numeric boundary-map ranks.

    The chain complex is C2 -> C1 -> C0 with d2 = (-(rho(y)-I); rho(x)-I)
    and d1 = (rho(x)-I | rho(y)-I) for commuting generators x, y.  Returns
    (acyclic, (dim H0, dim H1, dim H2)) and cross-checks the verdict against
    the parabolic trace test.
    """
    Xa = _upper_entries(X)
    La = _upper_entries(L)
    scale = max(1.0, np.abs(Xa).max(), np.abs(La).max())
    if np.abs(Xa @ La - La @ Xa).max() > comm_tol * scale * scale:
        raise ValueError("matrices do not commute: not a torus representation")
    eye = np.eye(2)
    d2 = np.vstack([-(La - eye), Xa - eye])
    d1 = np.hstack([Xa - eye, La - eye])

    def rank(m):
        sv = np.linalg.svd(m, compute_uv=False)
        return int(np.sum(sv > rank_tol * max(1.0, sv.max(initial=0.0))))

    r1 = rank(d1)
    r2 = rank(d2)
    dims = (2 - r1, 4 - r1 - r2, 2 - r2)
    acyclic = dims == (0, 0, 0)
    parabolic = (abs(X.trace() - 2) < 1e-9 and abs(L.trace() - 2) < 1e-9
                 and abs((X * L).trace() - 2) < 1e-9)
    if acyclic == parabolic:
        raise ValueError(
            "rank verdict %s contradicts the parabolic trace test" % (dims,))
    return acyclic, dims


# -- Reidemeister torsion --------------------------------------------------

def torsion_exterior(model, s, t, zero_tol=1e-9):
    """Reidemeister torsion of the twist-knot exterior at a numeric character.

    Computed as det(rho(dr/dy)) / det(rho(x) - I) with a generator swap when
    the denominator vanishes; returns 0 when the twisted chain complex is
    not acyclic (both denominators vanish, e.g. tr rho(x) = 2).
    """
    phi, _ = riley_polynomial(model)
    if abs(phi.eval({"s": complex(s), "t": complex(t)})) > 1e-6:
        raise ValueError("(s, t) does not lie on the Riley curve")
    if abs(t) < zero_tol:
        raise ValueError("t = 0 is a reducible character")
    rho = model.numeric_assignment(s, t)
    eye = Mat2.identity_like(rho["x"])
    den_x = _det(rho["x"] - eye)
    den_y = _det(rho["y"] - eye)
    if abs(den_x) > zero_tol:
        num = evaluate_group_ring(fox_derivative(model.relator, "y"), rho)
        return _det(num) / den_x
    if abs(den_y) > zero_tol:
        num = evaluate_group_ring(fox_derivative(model.relator, "x"), rho)
        return _det(num) / den_y
    return 0j


def torsion_exterior_oracle(model, s, t, zero_tol=1e-9):
    """Independent torsion of the presentation 2-complex of the exterior.

    Builds the full based chain complex C2 -> C1 -> C0 of the 2-complex of
    <x, y | r>, lifts a basis of C0 through d1 by the pseudoinverse and
    takes the determinant of the resulting 4x4 change of basis.  Agrees
    with `torsion_exterior` without sharing its quotient formula.
    """
    rho = model.numeric_assignment(s, t)
    if abs(t) < zero_tol:
        raise ValueError("t = 0 is a reducible character")
    dr_dx = evaluate_group_ring(fox_derivative(model.relator, "x"), rho)
    dr_dy = evaluate_group_ring(fox_derivative(model.relator, "y"), rho)
    eye = Mat2.identity_like(rho["x"])
    # right Z[G]-module structure: blocks enter transposed so that d1 d2 = 0
    # is the Fox fundamental identity
    d2 = np.vstack([_upper_entries(dr_dx).T, _upper_entries(dr_dy).T])
    d1 = np.hstack([_upper_entries(rho["x"] - eye).T,
                    _upper_entries(rho["y"] - eye).T])
    if np.abs(d1 @ d2).max() > 1e-8 * max(1.0, np.abs(d1).max() * np.abs(d2).max()):
        raise ValueError("chain complex failed d1 d2 = 0")
    sv1 = np.linalg.svd(d1, compute_uv=False)
    sv2 = np.linalg.svd(d2, compute_uv=False)
    if sv1.min() < zero_tol * max(1.0, sv1.max()) or \
       sv2.min() < zero_tol * max(1.0, sv2.max()):
        return 0j
    lift = np.linalg.pinv(d1)
    mat = np.hstack([d2, lift])
    return complex(np.linalg.det(mat))


# -- bending ---------------------------------------------------------------

@dataclass
class BendingResult:
    a: complex
    trace: complex  # tr(A_a Y1 A_a^-1 X2); constant in a, see below
    closed_form: complex
    conjugated_y1: Mat2
    commutation_defect: float  # max |A L1 A^-1 - L1|
    witness_trace: complex = None  # tr(A_a Y1 A_a^-1 Y2), non-constant in a


def bending_matrix(s1, a):
    """A_a = (a, (a - 1/a)/(s1 - 1/s1); 0, 1/a), the commutant of X1."""
    s1 = complex(s1)
    a = complex(a)
    if abs(s1 - 1) < 1e-12 or abs(s1 + 1) < 1e-12:
        raise ValueError("s1 = +-1 has a degenerate commutant")
    if a == 0:
        raise ValueError("a must be nonzero")
    return Mat2(a, (a - 1.0 / a) / (s1 - 1.0 / s1), 0j, 1.0 / a)


def bending_family(s1, s2, t1, c_squared, a, model1=None, t2=None):
    """Bend the K1 side by A_a and report tr(A_a Y1 A_a^-1 X2).

    Verifies A_a X1 A_a^-1 = X1 and, when `model1` is supplied,
    A_a L1 A_a^-1 = L1.  The closed form is
    s1 s2 + 1/(s1 s2) + {((s2 - 1/s2)/(s1 - 1/s1))(1/a^2 - 1) - c^2/a^2} t1.

    Note that when X2 = L1 commutes with X1 the off-diagonal entry is forced
    to c^2 = (s2 - 1/s2)/(s1 - 1/s1), which kills the 1/a^2 coefficient: the
    reported trace is then constant along the family.  When `t2` is supplied
    the non-constancy of the bending is witnessed instead by
    `witness_trace` = tr(A_a Y1 A_a^-1 Y2).
    """
    s1, s2, t1, c2, a = (complex(v) for v in (s1, s2, t1, c_squared, a))
    A = bending_matrix(s1, a)
    X1 = Mat2(s1, 1.0 + 0j, 0j, 1.0 / s1)
    Y1 = Mat2(s1, 0j, -t1, 1.0 / s1)
    X2 = Mat2(s2, c2, 0j, 1.0 / s2)
    Ainv = A.inverse()
    if (A * X1 * Ainv).max_abs_diff(X1) > 1e-9 * max(1.0, abs(s1)):
        raise ValueError("A_a fails to commute with X1")
    conj = A * Y1 * Ainv
    trace = (conj * X2).trace()
    closed = (s1 * s2 + 1.0 / (s1 * s2)
              + (((s2 - 1.0 / s2) / (s1 - 1.0 / s1)) * (1.0 / a ** 2 - 1.0)
                 - c2 / a ** 2) * t1)
    defect = 0.0
    if model1 is not None:
        rho1 = model1.numeric_assignment(s1, t1)
        L1 = evaluate_word(model1.lambda_word, rho1)
        defect = (A * L1 * Ainv).max_abs_diff(L1)
    witness = None
    if t2 is not None:
        Y2 = Mat2(s2, 0j, -complex(t2) / c2, 1.0 / s2)
        witness = (conj * Y2).trace()
    return BendingResult(a, trace, closed, conj, defect, witness)


def bending_trace_identity():
    """Exact symbolic check of the bending trace formula, denominators cleared.

    Conjugation is insensitive to scaling, so A_a is replaced by
    a (s1 - 1/s1) A_a, whose entries are Laurent polynomials; both sides of
    the closed form are multiplied by det = a^2 (s1 - 1/s1)^2.
    """
    v = ("s1", "s2", "t1", "c", "a")
    s1 = MultiPoly.var(v, "s1")
    s1i = MultiPoly.var(v, "s1", -1)
    s2 = MultiPoly.var(v, "s2")
    s2i = MultiPoly.var(v, "s2", -1)
    t1 = MultiPoly.var(v, "t1")
    c2 = MultiPoly.var(v, "c", 2)
    a2 = MultiPoly.var(v, "a", 2)
    d = s1 - s1i
    At = Mat2(a2 * d, a2 - MultiPoly.one(v), MultiPoly.zero(v), d)
    At_adj = Mat2(d, -(a2 - MultiPoly.one(v)), MultiPoly.zero(v), a2 * d)
    Y1 = Mat2(s1, MultiPoly.zero(v), -t1, s1i)
    X2 = Mat2(s2, c2, MultiPoly.zero(v), s2i)
    lhs = (At * Y1 * At_adj * X2).trace()
    det = a2 * d * d
    rhs = det * (s1 * s2 + s1i * s2i) + (s2 - s2i) * d * (1 - a2) * t1 - c2 * d * d * t1
    return lhs == rhs


# -- the finite torsion set ------------------------------------------------

@dataclass
class RTReport:
    system: SpliceSystem
    criterion: object
    characters: list
    rt_values: list = field(default_factory=list)
    excluded: list = field(default_factory=list)


def rt_set(q1, q2, tol=None, seed=0):
    """The finite set of splice torsion values with full character inventory.

    The coprimality hypothesis is checked (and reported) on the computed
    A-polynomials; torsion products are collected over genuine characters
    that are acyclic on the gluing torus and deduplicated.
    """
    from .apoly import a_polynomial, coprimality_criterion

    tol = tol or Tolerances()
    crit = coprimality_criterion(a_polynomial(build_model(q1)),
                                 a_polynomial(build_model(q2)))
    system = splice_equation(q1, q2)
    chars = solve_characters(system, tol=tol, seed=seed)
    values = []
    excluded = []
    for ch in chars:
        if ch.mirror:
            continue
        if ch.residual > tol.gluing:
            excluded.append(ch)
            continue
        if not ch.acyclic_on_torus:
            continue
        v = ch.torsion_product
        if not any(abs(v - u) <= tol.dedup for u in values):
            values.append(v)
    values.sort(key=lambda z: (z.real, z.imag))
    return RTReport(system, crit, chars, values, excluded)
