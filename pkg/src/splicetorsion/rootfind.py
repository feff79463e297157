"""Certified complex roots of exact univariate polynomials.

Aberth-Ehrlich simultaneous iteration started on a randomly perturbed
circle, followed by Newton polishing.  Every returned root carries a
relative residual certificate; nearby roots are merged into a single
root with a multiplicity hint.
"""

from dataclasses import dataclass

import numpy as np

from .polyring import DegenerateInputError, PolyError


class SolverError(PolyError):
    """Iteration cap reached without certification."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals


@dataclass
class ComplexRoot:
    value: complex
    residual: float
    multiplicity_hint: int = 1


def _dense_coeffs(p):
    """Ascending complex coefficient list of a univariate MultiPoly."""
    live = [v for i, v in enumerate(p.vars)
            if any(e[i] != 0 for e in p.terms)]
    if len(live) > 1:
        raise DegenerateInputError("polynomial is not univariate: %s" % (live,))
    var = live[0] if live else p.vars[0]
    i = p.vars.index(var)
    shift = min(min(e[i] for e in p.terms), 0)
    coeffs = [0j] * (max(e[i] for e in p.terms) - shift + 1)
    for e, c in p.terms.items():
        coeffs[e[i] - shift] = complex(c)
    return coeffs


def _exact_coeffs(p):
    """Ascending Fraction coefficient list (Laurent shift cleared)."""
    from fractions import Fraction
    i = next((k for k, v in enumerate(p.vars)
              if any(e[k] != 0 for e in p.terms)), 0)
    shift = min(min(e[i] for e in p.terms), 0)
    coeffs = [Fraction(0)] * (max(e[i] for e in p.terms) - shift + 1)
    for e, c in p.terms.items():
        coeffs[e[i] - shift] = c
    return coeffs


def _polish_all(p, roots, steps=8):
    """Newton refinement of root estimates at 40 significant digits."""
    import mpmath as mp
    coeffs = _exact_coeffs(p)
    out = []
    with mp.workdps(40):
        cs = [mp.mpf(c.numerator) / mp.mpf(c.denominator) for c in coeffs]
        dcs = [k * c for k, c in enumerate(cs)][1:]
        for z0 in roots:
            z = mp.mpc(z0)
            for _ in range(steps):
                pz = mp.polyval(cs[::-1], z)
                dpz = mp.polyval(dcs[::-1], z)
                if dpz == 0:
                    break
                step = pz / dpz
                z = z - step
                if abs(step) < mp.mpf(10) ** -30 * max(1, abs(z)):
                    break
            out.append(complex(z))
    return out


def _relative_residual(coeffs, z):
    p = 0j
    scale = 0.0
    zp = 1.0 + 0j
    for c in coeffs:
        p += c * zp
        scale += abs(c) * abs(zp)
        zp *= z
    return abs(p) / scale if scale else 0.0


def _aberth(coeffs, max_iter, seed):
    """Simultaneous Aberth-Ehrlich iteration on a perturbed initial circle."""
    c = np.array(coeffs, dtype=complex)
    monic = c / c[-1]
    n = len(monic) - 1
    radius = 1.0 + max(abs(monic[:-1])) if n else 1.0
    rng = np.random.default_rng(seed)
    angles = (2 * np.pi * (np.arange(n) + 0.25)) / n + 0.1 * rng.random(n)
    z = radius * np.exp(1j * angles)
    dcoeffs = monic[1:] * np.arange(1, n + 1)
    best = np.inf
    stagnant = 0
    for _ in range(max_iter):
        pz = np.polyval(monic[::-1], z)
        dpz = np.polyval(dcoeffs[::-1], z)
        with np.errstate(divide="ignore", invalid="ignore"):
            w = np.where(dpz != 0, pz / dpz, pz)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = np.sum(1.0 / diff, axis=1)
            denom = 1.0 - w * s
            step = np.where(np.abs(denom) > 1e-300, w / denom, w)
        z = z - step
        worst = np.max(np.abs(step))
        if worst < 1e-10 * max(1.0, np.max(np.abs(z))):
            break
        # double-precision noise floor for ill-conditioned roots; the
        # high-precision polish finishes the job
        if worst < 0.5 * best:
            best = worst
            stagnant = 0
        else:
            stagnant += 1
            if stagnant >= 50 and best < 1e-4:
                break
    return [complex(zk) for zk in z]


def solve_roots(p, cert_tol=1e-9, merge_tol=1e-8, max_iter=10000, seed=0):
    """All complex roots of p, counted with multiplicity hints.

    Multiple roots are separated exactly beforehand by a Yun squarefree
    decomposition, so each Aberth run only ever sees simple roots.  Raises
    DegenerateInputError for the zero polynomial and SolverError if the
    residual certificate cannot be met within the iteration cap.
    """
    from .polyring import squarefree_decomposition

    if p.is_zero():
        raise DegenerateInputError("cannot solve the zero polynomial")
    coeffs = _dense_coeffs(p)
    full_exact = _exact_coeffs(p)
    degree = len(coeffs) - 1
    zero_mult = 0
    while abs(coeffs[zero_mult]) == 0.0:
        zero_mult += 1
    if degree < 1:
        raise DegenerateInputError("degree must be at least 1")

    i = next((k for k, v in enumerate(p.vars)
              if any(e[k] != 0 for e in p.terms)), 0)
    name = p.vars[i]

    merged = []
    if zero_mult:
        merged.append(ComplexRoot(0j, 0.0, zero_mult))
    for factor, mult in squarefree_decomposition(p, name):
        fc = _dense_coeffs(factor)
        approx = _aberth(fc, max_iter, seed)
        roots = _polish_all(factor, approx)
        used = [False] * len(roots)
        order = sorted(range(len(roots)), key=lambda k: (roots[k].real, roots[k].imag))
        for a in order:
            if used[a]:
                continue
            cluster = [a]
            used[a] = True
            for b in order:
                if not used[b] and abs(roots[a] - roots[b]) <= merge_tol:
                    cluster.append(b)
                    used[b] = True
            value = sum(roots[k] for k in cluster) / len(cluster)
            res = _relative_residual(coeffs, value)
            merged.append(ComplexRoot(complex(value), res, mult * len(cluster)))

    total = sum(r.multiplicity_hint for r in merged)
    if total != degree:
        raise SolverError("found %d roots of a degree-%d polynomial" % (total, degree))
    bad = [r for r in merged if r.residual > cert_tol]
    if bad:
        raise SolverError(
            "root certification failed for %d roots (best residuals %s)"
            % (len(bad), sorted(r.residual for r in bad)[:3]),
            residuals=[r.residual for r in merged])
    merged.sort(key=lambda r: (r.value.real, r.value.imag))
    return merged
