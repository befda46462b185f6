from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from jlcert import bounds as B
from jlcert.exactnum import EQ, LT, DomainError, QuadSurd, surd_compare
from jlcert.triangle import build_table

n_, k_ = sp.symbols("n k")


def sym(P):
    """BiPoly -> sympy expression, for independent expansion checks."""
    return sum(sp.Rational(c.numerator, c.denominator) * n_**i * k_**j for (i, j), c in P.terms.items())


# --- L ---------------------------------------------------------------------


def test_eval_L_examples():
    assert B.eval_L(6, 3) == Fraction(7, 2)
    assert B.eval_L(10, 2) == Fraction(44, 35)
    assert B.eval_L(4, 2) == Fraction(5, 2)
    with pytest.raises(DomainError):
        B.eval_L(3, 2)


# --- window ------------------------------------------------------------------


def test_window_at_19_is_rational():
    assert B.window_radicand(19) == Fraction(2304, 324)
    k1, k2 = B.eval_window(19)
    assert k1.is_rational and k1.a == 7
    assert k2.is_rational and k2.a == Fraction(25, 3)
    assert [k for k in range(1, 10) if B.in_window(19, k)] == [8]


def test_window_endpoint_belongs_to_L_branch():
    assert not B.in_window(19, 7)


def test_window_negative_radicand():
    with pytest.raises(DomainError):
        B.eval_window(10)
    with pytest.raises(DomainError):
        B.eval_window(1)


# --- l -----------------------------------------------------------------------


def test_l_undefined_where_radicand_negative():
    # H1(4,2) = -2200 and H1(10,2) = -126808: these l values are not real
    assert B.eval_H1(4, 2) == -2200
    assert B.eval_H1(10, 2) == -126808
    for n, k in ((4, 2), (10, 2)):
        with pytest.raises(DomainError) as exc:
            B.eval_l(n, k)
        assert exc.value.what == f"H1({n},{k})"
    with pytest.raises(DomainError):
        B.eval_l_2k(2)


def test_l_2k_specialization_matches_general_form():
    for k in range(5, 60):
        assert B.surd_equal(B.eval_l(2 * k, k), B.eval_l_2k(k))


def test_l2k_radicand_sign_change():
    # negative for k <= 4, positive from k = 5 on (sympy real roots of the quintic)
    vals = [B.L2K_RADICAND(k) for k in range(1, 6)]
    assert vals == [-639, -2200, -4165, -4536, 605]
    k = sp.Symbol("k")
    quintic = 4 * k**5 + 20 * k**4 - 127 * k**3 - 300 * k**2 - 196 * k - 40
    assert max(r for r in sp.real_roots(quintic)) < 5


def test_l_examples():
    assert B.eval_l(10, 5) == QuadSurd(Fraction(11, 5))
    assert surd_compare(B.eval_l(10, 5), Fraction(11, 2)) == LT
    assert surd_compare(B.eval_l(20, 10), Fraction(21, 2)) == LT
    assert surd_compare(B.eval_l(10, 5), Fraction(11, 5)) == EQ


def test_l_19_8_against_sympy():
    # sympy: l(19,8) = 2.92483638885828328322474720634...
    l = B.eval_l(19, 8)
    iv = l.enclosure(100)
    assert abs(iv.lo - Fraction("2.92483638885828328322474720634")) < Fraction(1, 10**28)
    t = build_table(20)
    assert surd_compare(l, t.ratio(19, 8)) == LT


# --- h -----------------------------------------------------------------------


def test_h_collapses_at_boundary():
    for k in range(1, 101):
        iv = B.eval_h(2 * k, k)
        assert iv.is_point and iv.lo == Fraction(2 * k + 1, 2) == B.eval_L(2 * k, k)


def test_h_19_8_against_sympy():
    # sympy: h(19,8) = 4.35960709372834536470068958378...
    iv = B.eval_h(19, 8, 64)
    assert iv.width <= Fraction(1, 2**64)
    target = Fraction("4.359607093728345364700689584")
    assert abs((iv.lo + iv.hi) / 2 - target) < Fraction(1, 10**18)
    assert build_table(20).ratio(19, 8) < iv.lo


def test_h_needs_nonnegative_radicand():
    assert B.eval_H2(6, 1) < 0
    with pytest.raises(DomainError):
        B.eval_h(6, 1)


# --- quadratic and discriminant ---------------------------------------------------


def test_delt_examples():
    assert B.eval_delt(10, 5) == 302500
    assert B.root_cubic(10)(5) == 5
    assert B.eval_delt(10, 5) == 5 * 10**2 * 11**2 * B.root_cubic(10)(5)


def test_keystone_identities_symbolic():
    assert B.keystone_residual().is_zero()
    assert B.h1_residual().is_zero()
    # the same identity, expanded independently in sympy
    delt = sym(B.DELT)
    assert sp.expand(delt - k_ * n_**2 * (1 + n_) ** 2 * sym(B.ROOT_CUBIC)) == 0


def test_g_vanishes_at_its_larger_root():
    for n, k in ((19, 8), (10, 5), (40, 12), (100, 30)):
        g, l = B.quadratic_g(n, k), B.eval_l(n, k)
        assert g(l).sign() == 0
        assert g.derivative(l).sign() >= 0


def test_g_identity_at_10_2():
    t = build_table(11)
    lhs = t(10, 2) ** 2 - t(10, 3) * t(10, 1)
    assert lhs == 355**2 - 340 * 170 == 68225
    g = B.quadratic_g(10, 2)
    r = t.ratio(10, 2)
    assert r == Fraction(143, 71)
    assert B.log_concavity_prefactor(10, 2) * lhs == g(r) * t(10, 2) ** 2


@given(st.integers(min_value=2, max_value=200), st.data())
def test_quadratic_positive_leading_coefficient(n, data):
    k = data.draw(st.integers(min_value=1, max_value=n // 2))
    assert B.quadratic_g(n, k).a > 0


@given(st.integers(min_value=1, max_value=30), st.integers(min_value=-30, max_value=30),
       st.integers(min_value=-30, max_value=30),
       st.fractions(min_value=-20, max_value=20, max_denominator=100), st.data())
def test_parabola_criterion_sound(a, b, c, x0, data):
    q = B.QuadraticForm(Fraction(a), Fraction(b), Fraction(c))
    if not q.nonneg_from(x0):
        return
    for _ in range(100):
        x = x0 + data.draw(st.fractions(min_value=0, max_value=1000, max_denominator=1000))
        assert q(x) >= 0


def test_R1_isolation():
    iv = B.isolate_R1(10)
    assert 4 < iv.lo and iv.hi < 5
    assert B.r1_threshold(10) == 5
    assert B.eval_delt(10, 4) < 0 < B.eval_delt(10, 5)
    # sympy: R1(50) = 4.2442670632...
    assert abs(B.isolate_R1(50, 60).lo - Fraction("4.2442670632202244836")) < Fraction(1, 10**17)


@given(st.integers(min_value=10, max_value=200), st.data())
def test_delt_sign_follows_R1(n, data):
    k = data.draw(st.integers(min_value=1, max_value=n // 2))
    assert (B.eval_delt(n, k) > 0) == B.exceeds_R1(n, k)
