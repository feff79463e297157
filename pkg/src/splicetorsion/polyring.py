"""Sparse multivariate Laurent polynomials with exact rational coefficients.

Polynomials are stored as a map from integer exponent vectors (negative
exponents allowed) to nonzero Fractions, over a fixed ordered variable list.
Everything in the symbolic layer is exact; floating point only enters through
numeric evaluation and the root solver in `rootfind`.
"""

from fractions import Fraction
from math import gcd as int_gcd


class PolyError(Exception):
    pass


class AlignmentError(PolyError):
    """Operands live over different variable lists."""


class SubstitutionError(PolyError):
    """Substitution into a negative exponent with a non-unit value."""


class SymmetryError(PolyError):
    """Input is not invariant under s -> 1/s."""


class EliminationError(PolyError):
    """Resultant/elimination input is degenerate."""


class DegenerateInputError(PolyError):
    pass


class SizeError(PolyError):
    """Exponent overflow guard."""


_MAX_EXPONENT = 10 ** 6


def _coerce_coeff(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("coefficient must be int or Fraction, got %r" % (c,))


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for exps, c in terms.items():
            if len(exps) != n:
                raise AlignmentError("exponent vector %r does not match %r" % (exps, self.vars))
            c = _coerce_coeff(c)
            if c != 0:
                clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, c):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): _coerce_coeff(c)})

    @classmethod
    def one(cls, vars):
        return cls.const(vars, 1)

    @classmethod
    def var(cls, vars, name, power=1):
        vars = tuple(vars)
        exps = [0] * len(vars)
        exps[vars.index(name)] = power
        return cls(vars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, vars, exps, coeff=1):
        return cls(vars, {tuple(exps): _coerce_coeff(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_value(self):
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise PolyError("not a constant: %s" % self)
        return next(iter(self.terms.values()))

    def degree(self, name):
        """Maximum exponent of `name`; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def min_degree(self, name):
        if not self.terms:
            return 0
        i = self.vars.index(name)
        return min(e[i] for e in self.terms)

    def is_laurent(self):
        return any(e < 0 for exps in self.terms for e in exps)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(self.vars, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.vars, other)
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise AlignmentError("variable lists differ: %r vs %r" % (self.vars, other.vars))
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, Fraction(0)) + c
            if s == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = s
        return MultiPoly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        for e in terms:
            if any(abs(x) > _MAX_EXPONENT for x in e):
                raise SizeError("exponent overflow in product")
        return MultiPoly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise PolyError("pow expects a nonnegative integer exponent")
        result = MultiPoly.one(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def coeffs_in(self, name):
        """Map exponent-of-name -> coefficient polynomial (name stripped to 0)."""
        i = self.vars.index(name)
        out = {}
        for exps, c in self.terms.items():
            k = exps[i]
            rest = exps[:i] + (0,) + exps[i + 1:]
            d = out.setdefault(k, {})
            d[rest] = d.get(rest, Fraction(0)) + c
        return {k: MultiPoly(self.vars, d) for k, d in out.items()}

    def coeff_of(self, name, k):
        i = self.vars.index(name)
        d = {}
        for exps, c in self.terms.items():
            if exps[i] == k:
                d[exps[:i] + (0,) + exps[i + 1:]] = c
        return MultiPoly(self.vars, d)

    def leading_coeff(self, name):
        return self.coeff_of(name, self.degree(name))

    def lex_leading(self):
        """(exponents, coefficient) of the lex-largest term."""
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def embed(self, newvars):
        """Re-express over `newvars` (must contain every variable that occurs)."""
        newvars = tuple(newvars)
        pos = []
        for i, v in enumerate(self.vars):
            if v in newvars:
                pos.append(newvars.index(v))
            else:
                if any(e[i] != 0 for e in self.terms):
                    raise AlignmentError("variable %r occurs but is absent from %r" % (v, newvars))
                pos.append(None)
        terms = {}
        for exps, c in self.terms.items():
            e = [0] * len(newvars)
            for i, x in enumerate(exps):
                if x:
                    e[pos[i]] = x
            e = tuple(e)
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(newvars, terms)

    def rename(self, mapping):
        """Rename variables via {old: new}."""
        return MultiPoly(tuple(mapping.get(v, v) for v in self.vars), self.terms)

    def substitute(self, name, value):
        """Exact substitution of `value` for variable `name`.

        `value` is a MultiPoly over the same variable list (not involving
        `name` itself) or an int/Fraction.  If `name` occurs with a negative
        exponent, `value` must be a unit (a single term).
        """
        if isinstance(value, (int, Fraction)):
            value = MultiPoly.const(self.vars, value)
        if value.vars != self.vars:
            value = value.embed(self.vars)
        i = self.vars.index(name)
        has_negative = any(e[i] < 0 for e in self.terms)
        inv = None
        if has_negative:
            if len(value.terms) != 1:
                raise SubstitutionError(
                    "%r occurs with negative exponent; value must be a unit monomial" % name)
            (exps, c), = value.terms.items()
            inv = MultiPoly(self.vars, {tuple(-x for x in exps): 1 / c})
        result = MultiPoly.zero(self.vars)
        powers = {0: MultiPoly.one(self.vars)}
        for exps, c in self.terms.items():
            k = exps[i]
            if k not in powers:
                powers[k] = value ** k if k > 0 else inv ** (-k)
            rest = exps[:i] + (0,) + exps[i + 1:]
            result = result + MultiPoly.monomial(self.vars, rest, c) * powers[k]
        return result

    def eval(self, values):
        """Numeric (or exact) evaluation; `values` maps every occurring variable."""
        total = 0
        for exps, c in self.terms.items():
            term = Fraction(c) if all(isinstance(values.get(v, 0), Fraction) for v in self.vars) else complex(c)
            for v, e in zip(self.vars, exps):
                if e:
                    term = term * values[v] ** e
            total = total + term
        return total

    def derivative(self, name):
        i = self.vars.index(name)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = exps[:i] + (e - 1,) + exps[i + 1:]
            terms[new] = terms.get(new, Fraction(0)) + c * e
        return MultiPoly(self.vars, terms)

    # -- normalization -----------------------------------------------------

    def clear_laurent(self):
        """Multiply by the minimal monomial making all exponents nonnegative."""
        if not self.terms:
            return self
        mins = [min(e[i] for e in self.terms) for i in range(len(self.vars))]
        shift = tuple(-m if m < 0 else 0 for m in mins)
        if not any(shift):
            return self
        return MultiPoly(self.vars, {tuple(a + b for a, b in zip(e, shift)): c
                                     for e, c in self.terms.items()})

    def strip_monomial(self):
        """Divide out the gcd monomial of the support (unit in the Laurent ring)."""
        if not self.terms:
            return self
        mins = [min(e[i] for e in self.terms) for i in range(len(self.vars))]
        if not any(mins):
            return self
        return MultiPoly(self.vars, {tuple(a - b for a, b in zip(e, mins)): c
                                     for e, c in self.terms.items()})

    def primitive(self):
        """Integer-primitive form with positive lex-leading coefficient."""
        if not self.terms:
            return self
        denom = 1
        for c in self.terms.values():
            denom = denom * c.denominator // int_gcd(denom, c.denominator)
        nums = [int(c * denom) for c in self.terms.values()]
        g = 0
        for n in nums:
            g = int_gcd(g, abs(n))
        scale = Fraction(denom, g)
        p = MultiPoly(self.vars, {e: c * scale for e, c in self.terms.items()})
        if p.lex_leading()[1] < 0:
            p = -p
        return p

    # -- serialization / display ------------------------------------------

    def to_json(self):
        terms = [[list(e), str(self.terms[e])] for e in sorted(self.terms)]
        return {"vars": list(self.vars), "terms": terms}

    @classmethod
    def from_json(cls, obj):
        vars = tuple(obj["vars"])
        terms = {}
        for exps, c in obj["terms"]:
            terms[tuple(int(e) for e in exps)] = Fraction(c)
        return cls(vars, terms)

    def __repr__(self):
        return "MultiPoly(%r, %s)" % (self.vars, self)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        # descending lex so the leading term is printed first
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e != 0:
                    factors.append("%s^%d" % (v, e))
            body = "*".join(factors)
            if not body:
                chunk = str(c)
            elif c == 1:
                chunk = body
            elif c == -1:
                chunk = "-" + body
            else:
                chunk = "%s*%s" % (c, body)
            parts.append(chunk)
        out = parts[0]
        for chunk in parts[1:]:
            out += " - " + chunk[1:] if chunk.startswith("-") else " + " + chunk
        return out


def arith(p, q, op):
    """Spec-level dispatcher for the four ring operations."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "pow":
        return p ** q
    raise PolyError("unknown operation %r" % (op,))


# -- exact division and gcd ------------------------------------------------

def divide_exact(p, d):
    """Return q with p = d*q, or None if d does not divide p.

    Requires nonnegative exponents (clear Laurent units first).
    """
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return MultiPoly.zero(p.vars)
    if p.vars != d.vars:
        raise AlignmentError("variable lists differ")
    lead_e, lead_c = d.lex_leading()
    q = {}
    rem = p
    while not rem.is_zero():
        e, c = rem.lex_leading()
        diff = tuple(a - b for a, b in zip(e, lead_e))
        if any(x < 0 for x in diff):
            return None
        coeff = c / lead_c
        q[diff] = coeff
        rem = rem - MultiPoly.monomial(p.vars, diff, coeff) * d
    return MultiPoly(p.vars, q)


def _prem(a, b, name):
    """Classical pseudo-remainder of a by b with respect to `name`."""
    db = b.degree(name)
    lb = b.leading_coeff(name)
    r = a
    while not r.is_zero() and r.degree(name) >= db:
        dr = r.degree(name)
        lr = r.leading_coeff(name)
        shift = MultiPoly.var(r.vars, name, dr - db) if dr > db else MultiPoly.one(r.vars)
        r = lb * r - lr * shift * b
    return r


def _content_wrt(p, name):
    """gcd of the coefficients of p viewed as a polynomial in `name`."""
    g = MultiPoly.zero(p.vars)
    for c in p.coeffs_in(name).values():
        g = gcd(g, c)
        if g.is_constant() and not g.is_zero():
            break
    return g


def gcd(p, q):
    """Primitive gcd over the integers, unique up to sign.

    Laurent input is normalized by multiplying out the minimal monomial, so
    unit monomial factors are discarded.  Uses a primitive polynomial
    remainder sequence, recursing on variables.
    """
    if p.vars != q.vars:
        raise AlignmentError("variable lists differ")
    if p.is_zero():
        return q.clear_laurent().strip_monomial().primitive() if not q.is_zero() else q
    if q.is_zero():
        return p.clear_laurent().strip_monomial().primitive()
    p = p.clear_laurent().strip_monomial().primitive()
    q = q.clear_laurent().strip_monomial().primitive()
    name = None
    for v in p.vars:
        if p.degree(v) > 0 or q.degree(v) > 0:
            name = v
            break
    if name is None:
        return MultiPoly.one(p.vars)
    cont_p = _content_wrt(p, name)
    cont_q = _content_wrt(q, name)
    cont = gcd(cont_p, cont_q)
    a = divide_exact(p, cont_p)
    b = divide_exact(q, cont_q)
    if a.degree(name) < b.degree(name):
        a, b = b, a
    while True:
        if b.is_zero():
            g = a
            break
        if b.degree(name) == 0:
            g = MultiPoly.one(p.vars)
            break
        r = _prem(a, b, name)
        if r.is_zero():
            g = b
            break
        a, b = b, divide_exact(r, _content_wrt(r, name)).primitive()
    g = divide_exact(g, _content_wrt(g, name)).primitive() if g.degree(name) > 0 else g
    return (cont * g).primitive()


def squarefree_part(p):
    """Product of the distinct irreducible factors of p (primitive, up to sign)."""
    p = p.clear_laurent().strip_monomial().primitive()
    if p.is_zero() or p.is_constant():
        return p
    for v in p.vars:
        if p.degree(v) <= 0:
            continue
        g = gcd(p, p.derivative(v))
        if g.is_constant():
            continue
        p = divide_exact(p, g).primitive()
    return p


def squarefree_decomposition(p, name):
    """Yun decomposition [(p1, 1), (p2, 2), ...] with p = c * prod pk^k.

    The factors are primitive and pairwise coprime; constant factors are
    dropped.  Univariate in `name` over the rationals.
    """
    p = p.clear_laurent().strip_monomial().primitive()
    if p.is_constant():
        return []
    g = gcd(p, p.derivative(name))
    if g.is_constant():
        return [(p, 1)]
    b = divide_exact(p, g)
    c = divide_exact(p.derivative(name), g)
    d = c - b.derivative(name)
    out = []
    k = 1
    while not b.is_constant():
        a = gcd(b, d)
        if not a.is_constant():
            out.append((a.primitive(), k))
        b = divide_exact(b, a)
        c = divide_exact(d, a)
        d = c - b.derivative(name)
        k += 1
    return out


# -- resultants ------------------------------------------------------------

def _bareiss_det(m):
    """Fraction-free determinant of a square matrix of MultiPoly values."""
    n = len(m)
    if n == 0:
        raise EliminationError("empty matrix")
    m = [row[:] for row in m]
    vars = m[0][0].vars
    sign = 1
    prev = MultiPoly.one(vars)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(vars)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = divide_exact(num, prev)
        for i in range(k + 1, n):
            m[i][k] = MultiPoly.zero(vars)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(p, q, name):
    """Exact resultant eliminating `name` (Sylvester determinant, Bareiss).

    Laurent units in the remaining variables are tolerated; the inputs are
    first shifted so every exponent is nonnegative.
    """
    if p.vars != q.vars:
        raise AlignmentError("variable lists differ")
    p = p.clear_laurent()
    q = q.clear_laurent()
    dp = p.degree(name)
    dq = q.degree(name)
    if dp <= 0 or dq <= 0:
        raise EliminationError("resultant requires positive degree in %r" % name)
    pc = p.coeffs_in(name)
    qc = q.coeffs_in(name)
    zero = MultiPoly.zero(p.vars)
    n = dp + dq
    rows = []
    for i in range(dq):
        row = [zero] * n
        for k in range(dp + 1):
            row[i + dp - k] = pc.get(k, zero)
        rows.append(row)
    for i in range(dp):
        row = [zero] * n
        for k in range(dq + 1):
            row[i + dq - k] = qc.get(k, zero)
        rows.append(row)
    return _bareiss_det(rows)


def reduce_mod(p, m, name):
    """Reduce p modulo m with respect to `name`.

    Requires the leading coefficient of m in `name` to be a single term, so
    each elimination step divides by a unit of the Laurent ring.
    """
    dm = m.degree(name)
    if dm <= 0:
        raise EliminationError("modulus must have positive degree in %r" % name)
    lc = m.leading_coeff(name)
    if len(lc.terms) != 1:
        raise EliminationError("leading coefficient of modulus is not a monomial")
    (lc_e, lc_c), = lc.terms.items()
    inv_lc = MultiPoly(m.vars, {tuple(-x for x in lc_e): 1 / lc_c})
    r = p
    while not r.is_zero() and r.degree(name) >= dm:
        dr = r.degree(name)
        lr = r.leading_coeff(name)
        shift = MultiPoly.var(r.vars, name, dr - dm) if dr > dm else MultiPoly.one(r.vars)
        r = r - lr * inv_lc * shift * m
    return r


# -- Chebyshev and trace coordinates --------------------------------------

def chebyshev(n, var="x"):
    """Normalized Chebyshev polynomial T_n with T_n(2cos a) = 2cos(na)."""
    if n < 0:
        raise PolyError("chebyshev expects n >= 0")
    vars = (var,)
    t0 = MultiPoly.const(vars, 2)
    t1 = MultiPoly.var(vars, var)
    if n == 0:
        return t0
    if n == 1:
        return t1
    for _ in range(n - 1):
        t0, t1 = t1, t1 * MultiPoly.var(vars, var) - t0
    return t1


def to_trace_coordinate(p, s_var="s", xi_var="xi"):
    """Rewrite an s <-> 1/s symmetric Laurent polynomial via s^n + s^-n = T_n(xi).

    The output lives over the same variable list with `s_var` replaced by
    `xi_var` in place.
    """
    i = p.vars.index(s_var)
    newvars = tuple(xi_var if v == s_var else v for v in p.vars)
    # bucket by the exponents of the remaining variables
    buckets = {}
    for exps, c in p.terms.items():
        rest = exps[:i] + (0,) + exps[i + 1:]
        buckets.setdefault(rest, {})[exps[i]] = c
    result = MultiPoly.zero(newvars)
    cheb_cache = {}
    for rest, coeffs in buckets.items():
        for n, c in coeffs.items():
            if coeffs.get(-n) != c:
                raise SymmetryError("input is not symmetric under %s -> 1/%s" % (s_var, s_var))
        mono = MultiPoly.monomial(newvars, rest, 1)
        acc = MultiPoly.zero(newvars)
        for n, c in coeffs.items():
            if n < 0:
                continue
            if n == 0:
                acc = acc + MultiPoly.const(newvars, c)
            else:
                if n not in cheb_cache:
                    cheb_cache[n] = chebyshev(n, xi_var).embed(newvars)
                acc = acc + c * cheb_cache[n]
        result = result + mono * acc
    return result
