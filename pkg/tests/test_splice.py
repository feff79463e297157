"""Splice gluing, character solving, torsion, bending."""

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from splicetorsion.polyring import MultiPoly, chebyshev
from splicetorsion.splice import (
    bending_family, bending_matrix, bending_trace_identity, rt_set,
    solve_characters, splice_equation, torsion_exterior,
    torsion_exterior_oracle, torus_acyclicity,
)
from splicetorsion.twistknot import build_model, riley_t_roots
from splicetorsion.words import Mat2


@pytest.fixture(scope="module")
def trefoil_pair():
    system = splice_equation(1, 1)
    return system, solve_characters(system)


def test_equation_trefoil_exact():
    system = splice_equation(1, 1)
    t6 = chebyshev(6, "xi")
    target = MultiPoly.var(("xi",), "xi") + t6.substitute("xi", t6)
    assert system.xi_equation == target
    assert system.xi_equation.degree("xi") == 36


def test_equation_figure_eight_exact():
    system = splice_equation(-1, -1)
    coeffs = {16: 1, 14: -20, 12: 158, 10: -620, 8: 1244, 6: -1190,
              4: 487, 2: -60, 1: -1, 0: -2}
    target = MultiPoly(("xi",), {(k,): Fraction(c) for k, c in coeffs.items()})
    assert system.xi_equation == target


def test_equation_symmetric_pair():
    a = splice_equation(1, -1)
    b = splice_equation(-1, 1)
    # the xi1-equation of one ordering is the xi2-equation of the other:
    # for the swapped pair the equation in xi = tr X1 has the same root set
    # as the first ordering's xi2 values
    chars_a = solve_characters(a)
    chars_b = solve_characters(b)
    assert len(chars_a) == len(chars_b)
    xi1_b = [c.xi1 for c in chars_b]
    for c in chars_a:
        assert min(abs(c.xi2 - z) for z in xi1_b) < 1e-6


def test_character_classification(trefoil_pair):
    _, chars = trefoil_pair
    genuine = [c for c in chars if not c.mirror]
    mirror = [c for c in chars if c.mirror]
    assert len(genuine) == 17 and len(mirror) == 18
    fam35 = [2 * math.cos(k * math.pi / 35) for k in range(1, 34, 2)]
    for c in genuine:
        assert min(abs(c.xi1 - f) for f in fam35) < 1e-8
        assert abs(c.t1) > 1e-6 and abs(c.t2) > 1e-6  # irreducible sides
        assert c.residual <= 1e-8


def test_spurious_root_dropped(trefoil_pair):
    _, chars = trefoil_pair
    assert all(abs(c.xi1 + 2) > 1e-6 for c in chars)


def test_characters_sorted(trefoil_pair):
    _, chars = trefoil_pair
    keys = [(c.xi1.real, c.xi1.imag, c.mirror) for c in chars]
    assert keys == sorted(keys)


def test_torsion_trefoil_value():
    model = build_model(1)
    for s in (0.7 + 0.2j, 1.1 - 0.6j):
        t = s ** 2 + 1 / s ** 2 - 1
        assert torsion_exterior(model, s, t) == pytest.approx(2, abs=1e-9)


def test_torsion_nonacyclic_is_zero():
    # s = 1 forces tr rho(x) = 2: the complex is not acyclic
    model = build_model(1)
    assert torsion_exterior(model, 1.0, 1.0) == 0


def test_torsion_rejects_off_curve():
    with pytest.raises(ValueError):
        torsion_exterior(build_model(1), 0.7 + 0.2j, 123.0)


def test_torsion_oracle_agreement():
    rng = np.random.default_rng(2)
    for q in (-2, -1, 1, 3):
        model = build_model(q)
        s = complex(rng.normal(0, 0.6), rng.normal(0, 0.6)) + 0.8
        for t in riley_t_roots(model, s):
            if abs(t) < 1e-9:
                continue
            a = torsion_exterior(model, s, t)
            b = torsion_exterior_oracle(model, s, t)
            assert abs(a - b) < 1e-7 * max(1.0, abs(a))


def test_torus_acyclicity_cases():
    eye = Mat2(1 + 0j, 0j, 0j, 1 + 0j)
    para = Mat2(1 + 0j, 1 + 0j, 0j, 1 + 0j)
    diag = Mat2(2 + 0j, 0j, 0j, 0.5 + 0j)
    acyclic, dims = torus_acyclicity(para, para)
    assert not acyclic and dims == (1, 2, 1)
    acyclic, dims = torus_acyclicity(eye, eye)
    assert not acyclic and dims == (2, 4, 2)
    acyclic, dims = torus_acyclicity(diag, diag * diag)
    assert acyclic and dims == (0, 0, 0)
    with pytest.raises(ValueError):
        torus_acyclicity(para, diag)  # does not commute


def test_rt_set_trefoil():
    report = rt_set(1, 1)
    assert report.criterion.coprime
    assert len(report.rt_values) == 1
    assert report.rt_values[0] == pytest.approx(4, abs=1e-7)
    assert not report.excluded


def test_rt_set_figure_eight_finite():
    report = rt_set(-1, -1)
    assert report.criterion.coprime
    assert 1 <= len(report.rt_values) <= 15
    assert not report.excluded


def test_bending_matrix_commutes():
    s1 = 0.6 + 0.3j
    A = bending_matrix(s1, 1.7 - 0.4j)
    X1 = Mat2(s1, 1 + 0j, 0j, 1 / s1)
    assert (A * X1).max_abs_diff(X1 * A) < 1e-12
    with pytest.raises(ValueError):
        bending_matrix(1.0, 2.0)
    with pytest.raises(ValueError):
        bending_matrix(s1, 0.0)


def test_bending_identity_symbolic():
    assert bending_trace_identity()


def test_bending_at_character(trefoil_pair):
    _, chars = trefoil_pair
    ch = next(c for c in chars if not c.mirror)
    model1 = build_model(1)
    rng = np.random.default_rng(4)
    witness = set()
    for _ in range(6):
        a = cmath.exp(complex(rng.normal(), rng.normal()))
        res = bending_family(ch.s1, ch.s2, ch.t1, ch.c_squared, a,
                             model1=model1, t2=ch.t2)
        assert abs(res.trace - res.closed_form) < 1e-8
        assert res.commutation_defect < 1e-8
        witness.add(round(res.witness_trace.real, 6))
    # tr(y1 x2) is constant (c^2 is commutant-forced), the y1 y2 witness moves
    assert len(witness) >= 2


def test_acyclicity_recorded_on_characters(trefoil_pair):
    _, chars = trefoil_pair
    for c in chars:
        assert c.acyclic_on_torus is True
        assert c.homology_dims == (0, 0, 0)
        if not c.mirror:
            assert c.torsion_product == pytest.approx(4, abs=1e-7)
