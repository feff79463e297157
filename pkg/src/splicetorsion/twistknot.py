"""Character-variety data of the twist knots J(2,2q).

The knot group is <x, y | z^q x = y z^q> with z = [y, x^-1], and the
representation sends x to (s, 1; 0, 1/s) and y to (s, 0; -t, 1/s).  The
meridian is x and the longitude is lambda = ztilde^q z^q with
ztilde = [x, y^-1]; lambda has exponent sum zero in both generators.
"""

from fractions import Fraction

from .polyring import (
    MultiPoly, EliminationError, reduce_mod, resultant, squarefree_part,
    to_trace_coordinate,
)
from .words import GroupWord, Mat2, commutator, evaluate_word


class UnknotError(ValueError):
    """q = 0 gives the unknot, which has no Riley polynomial."""


ST = ("s", "t")


class TwistKnotModel:
    def __init__(self, q):
        if q == 0:
            raise UnknotError("q must be nonzero")
        self.q = q
        self.X = Mat2(
            MultiPoly.var(ST, "s"),
            MultiPoly.one(ST),
            MultiPoly.zero(ST),
            MultiPoly.var(ST, "s", -1),
        )
        self.Y = Mat2(
            MultiPoly.var(ST, "s"),
            MultiPoly.zero(ST),
            -MultiPoly.var(ST, "t"),
            MultiPoly.var(ST, "s", -1),
        )
        x = GroupWord.gen("x")
        y = GroupWord.gen("y")
        self.z_word = commutator(y, x.inverse())
        self.ztilde_word = commutator(x, y.inverse())
        self.lambda_word = self.ztilde_word ** q * self.z_word ** q
        # relator of <x, y | z^q x = y z^q>
        self.relator = self.z_word ** q * x * self.z_word ** (-q) * y.inverse()

    def assignment(self):
        return {"x": self.X, "y": self.Y}

    def numeric_assignment(self, s, t):
        values = {"s": complex(s), "t": complex(t)}
        return {"x": self.X.eval(values), "y": self.Y.eval(values)}

    def __repr__(self):
        return "TwistKnotModel(q=%d)" % self.q


def build_model(q):
    return TwistKnotModel(q)


def riley_polynomial(model):
    """Riley polynomial of J(2,2q): the pair (Laurent (s,t) form, (xi,t) form).

    The Laurent form is z11 + (1/s - s) z12 for Z^q = (z_ij), normalized to
    content 1 with positive lex-leading coefficient.  The (xi,t) form comes
    from the s <-> 1/s symmetry via s^n + s^-n = T_n(xi).
    """
    zq = evaluate_word(model.z_word ** model.q, model.assignment())
    s_inv_minus_s = MultiPoly.var(ST, "s", -1) - MultiPoly.var(ST, "s")
    phi = (zq.a11 + s_inv_minus_s * zq.a12).primitive()
    # fix the unit: positive lex-leading coefficient of the top t-power
    if phi.leading_coeff("t").lex_leading()[1] < 0:
        phi = -phi
    phi_xi = to_trace_coordinate(phi, "s", "xi")
    return phi, phi_xi


def longitude_matrix(model):
    """Symbolic longitude matrix and its trace reduced modulo the Riley polynomial.

    The reduced trace is returned in (xi, t) coordinates; for q = 1 it is
    t-free and equals -T_6(xi).
    """
    L = evaluate_word(model.lambda_word, model.assignment())
    phi, _ = riley_polynomial(model)
    tr = reduce_mod(L.trace(), phi, "t")
    tr_xi = to_trace_coordinate(tr, "s", "xi")
    return L, tr_xi


XI_VARS = ("xi_lambda", "xi_mu")


def xi_relation(model):
    """Polynomial relation R(xi_lambda, xi_mu) between the boundary traces.

    xi_mu = tr rho(x) and xi_lambda = tr rho(lambda) on the character curve;
    t is eliminated by a resultant, and the squarefree primitive part is
    returned with unit monomial factors discarded.
    """
    phi, phi_xi = riley_polynomial(model)
    _, tr_xi = longitude_matrix(model)
    vars = XI_VARS + ("t",)
    phi_v = phi_xi.rename({"xi": "xi_mu"}).embed(vars)
    tr_v = tr_xi.rename({"xi": "xi_mu"}).embed(vars)
    target = tr_v - MultiPoly.var(vars, "xi_lambda")
    if target.degree("t") <= 0:
        rel = target
    else:
        rel = resultant(phi_v, target, "t")
        if rel.is_zero():
            raise EliminationError("xi elimination collapsed for q=%d" % model.q)
    rel = squarefree_part(rel)
    return rel.embed(XI_VARS).strip_monomial().primitive()


def character_data(model):
    """Bundle riley/longitude/xi-relation for serialization."""
    phi, phi_xi = riley_polynomial(model)
    _, tr_xi = longitude_matrix(model)
    rel = xi_relation(model)
    return {
        "q": model.q,
        "riley": phi.to_json(),
        "riley_xi": phi_xi.to_json(),
        "longitude_trace": tr_xi.to_json(),
        "xi_relation": rel.to_json(),
    }


def riley_t_roots(model, s, phi=None):
    """Numeric t-branches over a fixed s: roots of phi_q(s, t) in t.

    The np.roots estimates are sharpened by a few Newton steps, which
    matters for |q| >= 3 where the companion-matrix roots lose digits.
    """
    import numpy as np
    if phi is None:
        phi, _ = riley_polynomial(model)
    coeffs = phi.coeffs_in("t")
    deg = max(coeffs)
    dense = [0j] * (deg + 1)
    for k, c in coeffs.items():
        dense[deg - k] = complex(c.eval({"s": complex(s)}))
    roots = np.roots(dense)
    dense = np.array(dense)
    deriv = np.polyder(dense)
    for _ in range(10):
        pz = np.polyval(dense, roots)
        dpz = np.polyval(deriv, roots)
        step = np.where(np.abs(dpz) > 1e-300, pz / dpz, 0.0)
        roots = roots - step
        if np.max(np.abs(step)) < 1e-14 * max(1.0, np.max(np.abs(roots))):
            break
    return [complex(z) for z in roots]
