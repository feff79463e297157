"""Free-group words, matrix evaluation, Fox calculus."""

import numpy as np
import pytest

from splicetorsion.polyring import MultiPoly
from splicetorsion.words import (
    BindingError, GroupRingElem, GroupWord, Mat2, WordError, commutator,
    evaluate_group_ring, evaluate_word, fox_derivative,
)


def test_free_reduction():
    x, y = GroupWord.gen("x"), GroupWord.gen("y")
    w = x * y * y.inverse() * x.inverse()
    assert w.is_identity()
    assert (x * x * x).letters == (("x", 3),)
    assert (w * y) == y


def test_parse_with_q():
    w = GroupWord.parse("z^q x z^-q y^-1", q=3)
    assert w.letters == (("z", 3), ("x", 1), ("z", -3), ("y", -1))
    w2 = GroupWord.parse("x^2 y^-2")
    assert w2.letters == (("x", 2), ("y", -2))
    with pytest.raises(WordError):
        GroupWord.parse("z^q", q=None)


def test_inverse_and_power():
    x, y = GroupWord.gen("x"), GroupWord.gen("y")
    w = x * y.inverse() * x
    assert (w * w.inverse()).is_identity()
    assert w ** 0 == GroupWord.identity()
    assert w ** -2 == (w.inverse()) ** 2
    assert w.exponent_sum("x") == 2
    assert w.length() == 3


def test_commutator_exponent_sums():
    x, y = GroupWord.gen("x"), GroupWord.gen("y")
    z = commutator(y, x.inverse())
    assert z.exponent_sum("x") == 0
    assert z.exponent_sum("y") == 0


def _random_sl2(rng):
    while True:
        m = Mat2(*(complex(rng.normal(), rng.normal()) for _ in range(4)))
        d = m.det()
        if abs(d) > 1e-3:
            return m.scale(1.0 / np.sqrt(complex(d)))


def _random_word(rng, max_len=12):
    gens = ("x", "y")
    w = GroupWord.identity()
    for _ in range(int(rng.integers(1, max_len + 1))):
        w = w * GroupWord.gen(gens[rng.integers(0, 2)], int(rng.choice([-1, 1])))
    return w


def test_matrix_word_evaluation():
    x = Mat2(2.0 + 0j, 1.0 + 0j, 0j, 0.5 + 0j)
    w = GroupWord.parse("x^3 x^-3")
    assert evaluate_word(w, {"x": x}).max_abs_diff(Mat2.identity_like(x)) < 1e-12
    with pytest.raises(BindingError):
        evaluate_word(GroupWord.gen("z"), {"x": x})


def test_fox_rules():
    x, y = GroupWord.gen("x"), GroupWord.gen("y")
    assert fox_derivative(x, "x") == GroupRingElem.one()
    assert fox_derivative(x.inverse(), "x") == -GroupRingElem.word(x.inverse())
    assert fox_derivative(y, "x").is_zero()
    # product rule on x y x^-1
    d = fox_derivative(x * y * x.inverse(), "x")
    assert d == GroupRingElem.one() - GroupRingElem.word(x * y * x.inverse())


def test_fox_fundamental_identity():
    """sum_g rho(dw/dg)(rho(g) - I) = rho(w) - I on 100 random words."""
    rng = np.random.default_rng(11)
    X, Y = _random_sl2(rng), _random_sl2(rng)
    rho = {"x": X, "y": Y}
    eye = Mat2.identity_like(X)
    for _ in range(100):
        w = _random_word(rng)
        total = Mat2(0j, 0j, 0j, 0j)
        for g in ("x", "y"):
            dg = evaluate_group_ring(fox_derivative(w, g), rho)
            total = total + dg * (rho[g] - eye)
        target = evaluate_word(w, rho) - eye
        assert total.max_abs_diff(target) < 1e-8


def test_symbolic_inverse_requires_unit_det():
    from splicetorsion.polyring import PolyError
    st = ("s", "t")
    s = MultiPoly.var(st, "s")
    m = Mat2(s, MultiPoly.zero(st), MultiPoly.zero(st), s)
    with pytest.raises(PolyError):
        m.inverse()
    u = Mat2(s, MultiPoly.one(st), MultiPoly.zero(st), MultiPoly.var(st, "s", -1))
    prod = u * u.inverse()
    assert prod.a11 == MultiPoly.one(st) and prod.a12.is_zero()


def test_group_ring_arithmetic():
    x = GroupWord.gen("x")
    a = GroupRingElem.one() + GroupRingElem.word(x, 2)
    b = GroupRingElem.word(x.inverse())
    prod = a * b
    assert prod.terms == {x.inverse(): 1, GroupWord.identity(): 2}
    assert (a - a).is_zero()
