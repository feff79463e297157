"""Free-group words, 2x2 matrix evaluation, and Fox derivatives.

Words are stored freely reduced, so equality of group-ring elements is
syntactic.  Matrices are generic over their scalar kind: entries are either
MultiPoly values (exact mode) or Python complex numbers (numeric mode).
"""

from .polyring import MultiPoly, PolyError


class WordError(Exception):
    pass


class BindingError(WordError):
    """A generator of the word has no assigned matrix."""


def _reduce(letters):
    out = []
    for gen, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


class GroupWord:
    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = _reduce(letters)

    @classmethod
    def gen(cls, name, exp=1):
        return cls(((name, exp),))

    @classmethod
    def identity(cls):
        return cls(())

    @classmethod
    def parse(cls, text, q=None):
        """Parse a word literal like "z^q x y^-1 z^-q".

        Letters are whitespace separated with caret exponents; the symbol q
        (or -q) in an exponent is expanded using the keyword argument.
        """
        letters = []
        for chunk in text.split():
            if "^" in chunk:
                name, _, etext = chunk.partition("^")
                etext = etext.strip()
                if etext in ("q", "+q"):
                    if q is None:
                        raise WordError("word uses q but no q was supplied")
                    exp = q
                elif etext == "-q":
                    if q is None:
                        raise WordError("word uses q but no q was supplied")
                    exp = -q
                else:
                    exp = int(etext)
            else:
                name, exp = chunk, 1
            if not name.isidentifier():
                raise WordError("bad generator name %r" % name)
            letters.append((name, exp))
        return cls(letters)

    def __mul__(self, other):
        return GroupWord(self.letters + other.letters)

    def inverse(self):
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n):
        if n == 0:
            return GroupWord.identity()
        base = self if n > 0 else self.inverse()
        return GroupWord(base.letters * abs(n))

    def __eq__(self, other):
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def is_identity(self):
        return not self.letters

    def length(self):
        return sum(abs(e) for _, e in self.letters)

    def exponent_sum(self, name):
        return sum(e for g, e in self.letters if g == name)

    def generators(self):
        return sorted({g for g, _ in self.letters})

    def syllables(self):
        """Expand into single letters with exponent +-1."""
        out = []
        for g, e in self.letters:
            step = 1 if e > 0 else -1
            out.extend([(g, step)] * abs(e))
        return out

    def __repr__(self):
        if not self.letters:
            return "GroupWord(1)"
        return "GroupWord(%s)" % " ".join(
            g if e == 1 else "%s^%d" % (g, e) for g, e in self.letters)


def commutator(u, v):
    return u * v * u.inverse() * v.inverse()


class Mat2:
    """2x2 matrix over MultiPoly or complex scalars (one kind per matrix)."""

    __slots__ = ("a11", "a12", "a21", "a22")

    def __init__(self, a11, a12, a21, a22):
        self.a11 = a11
        self.a12 = a12
        self.a21 = a21
        self.a22 = a22

    @property
    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    def _one(self):
        e = self.a11
        if isinstance(e, MultiPoly):
            return MultiPoly.one(e.vars)
        return 1.0 + 0.0j

    def _zero(self):
        e = self.a11
        if isinstance(e, MultiPoly):
            return MultiPoly.zero(e.vars)
        return 0.0 + 0.0j

    @classmethod
    def identity_like(cls, m):
        return cls(m._one(), m._zero(), m._zero(), m._one())

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a11 * other.a11 + self.a12 * other.a21,
                self.a11 * other.a12 + self.a12 * other.a22,
                self.a21 * other.a11 + self.a22 * other.a21,
                self.a21 * other.a12 + self.a22 * other.a22,
            )
        return Mat2(self.a11 * other, self.a12 * other,
                    self.a21 * other, self.a22 * other)

    def __add__(self, other):
        return Mat2(self.a11 + other.a11, self.a12 + other.a12,
                    self.a21 + other.a21, self.a22 + other.a22)

    def __sub__(self, other):
        return Mat2(self.a11 - other.a11, self.a12 - other.a12,
                    self.a21 - other.a21, self.a22 - other.a22)

    def __neg__(self):
        return Mat2(-self.a11, -self.a12, -self.a21, -self.a22)

    def scale(self, c):
        return Mat2(self.a11 * c, self.a12 * c, self.a21 * c, self.a22 * c)

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self):
        return self.a11 + self.a22

    def inverse(self):
        """Inverse via the adjugate; exact when det = 1."""
        d = self.det()
        adj = Mat2(self.a22, -self.a12, -self.a21, self.a11)
        if isinstance(self.a11, MultiPoly):
            if d != MultiPoly.one(self.a11.vars):
                raise PolyError("symbolic inverse requires det = 1, got %s" % d)
            return adj
        return adj.scale(1.0 / d)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = Mat2.identity_like(self)
        for _ in range(n):
            result = result * self
        return result

    def subs(self, name, value):
        return Mat2(*(e.substitute(name, value) for e in self.entries))

    def eval(self, values):
        return Mat2(*(complex(e.eval(values)) for e in self.entries))

    def max_abs_diff(self, other):
        return max(abs(a - b) for a, b in zip(self.entries, other.entries))

    def __repr__(self):
        return "Mat2([[%s, %s], [%s, %s]])" % self.entries


def evaluate_word(w, assignment):
    """Product of assigned matrices along a word; exact in symbolic mode."""
    first = next(iter(assignment.values()), None)
    if first is None:
        raise BindingError("empty assignment")
    result = Mat2.identity_like(first)
    cache = {}
    for g, e in w.letters:
        if g not in assignment:
            raise BindingError("generator %r is unassigned" % g)
        if (g, e) not in cache:
            cache[(g, e)] = assignment[g] ** e
        result = result * cache[(g, e)]
    return result


class GroupRingElem:
    """Formal Z-linear combination of reduced words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if c:
                    clean[w] = clean.get(w, 0) + c
                    if clean[w] == 0:
                        del clean[w]
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def word(cls, w, c=1):
        return cls({w: c})

    @classmethod
    def one(cls):
        return cls({GroupWord.identity(): 1})

    def __add__(self, other):
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return GroupRingElem(terms)

    def __neg__(self):
        return GroupRingElem({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                terms[w] = terms.get(w, 0) + c1 * c2
        return GroupRingElem(terms)

    def left_mul(self, w):
        return GroupRingElem({w * u: c for u, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, GroupRingElem) and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "GroupRingElem(0)"
        return "GroupRingElem(%s)" % " + ".join(
            "%d*%r" % (c, w) for w, c in self.terms.items())


def fox_derivative(w, name):
    """Fox derivative of a reduced word with respect to a generator.

    Satisfies d(g)/dg = 1, d(g^-1)/dg = -g^-1 and the product rule
    d(uv)/dg = du/dg + u dv/dg.
    """
    result = GroupRingElem.zero()
    prefix = GroupWord.identity()
    for g, e in w.syllables():
        if g == name:
            if e == 1:
                result = result + GroupRingElem.word(prefix)
            else:
                result = result - GroupRingElem.word(prefix * GroupWord.gen(g, -1))
        prefix = prefix * GroupWord.gen(g, e)
    return result


def evaluate_group_ring(elem, assignment):
    """Z-linear combination of evaluated words."""
    first = next(iter(assignment.values()), None)
    if first is None:
        raise BindingError("empty assignment")
    zero = first._zero()
    result = Mat2(zero, zero, zero, zero)
    for w, c in elem.terms.items():
        result = result + evaluate_word(w, assignment).scale(c)
    return result
