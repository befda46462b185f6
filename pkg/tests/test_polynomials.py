from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from jlcert.exactnum import DomainError
from jlcert.polynomials import (
    BiPoly,
    K,
    N,
    RatFunc,
    UniPoly,
    cauchy_bound,
    count_real_roots,
    isolate_smallest_root,
    shift_expand_nonneg,
    squarefree_part,
    sturm_count,
    univariate_positive_on_ray,
)

X = sp.Symbol("x")
coeff = st.integers(min_value=-20, max_value=20)
polys = st.lists(coeff, min_size=2, max_size=7).filter(lambda c: c[-1] != 0).map(UniPoly)
points = st.fractions(min_value=-30, max_value=30, max_denominator=50)


def to_sympy(p: UniPoly):
    return sum(sp.Rational(c.numerator, c.denominator) * X**i for i, c in enumerate(p.coeffs))


def p10() -> UniPoly:
    # X^3 - 96 X^2 + 984 X - 2640
    return UniPoly([-2640, 984, -96, 1])


def test_unipoly_arithmetic():
    x = UniPoly.x()
    p = (x - 1) * (x + 2)
    assert p == UniPoly([-2, 1, 1])
    q, r = divmod(p * p + 3, x - 1)
    assert r == UniPoly([3])
    assert p(Fraction(1, 2)) == Fraction(-5, 4)
    assert p.derivative() == UniPoly([1, 2])
    assert UniPoly.from_roots([1, 2, 3]) == (x - 1) * (x - 2) * (x - 3)


def test_squarefree_part_removes_repeats():
    x = UniPoly.x()
    assert squarefree_part((x - 1) ** 3 * (x + 2)).monic() == ((x - 1) * (x + 2)).monic()


def test_p10_root_structure():
    p = p10()
    assert p(4) == -176 and p(5) == 5
    assert count_real_roots(p) == 3
    assert sturm_count(p, 4, 5) == 1
    assert sturm_count(p, 5, 12) == 1
    assert sturm_count(p, 80, 90) == 1
    iv = isolate_smallest_root(p, 40)
    assert 4 < iv.lo and iv.hi < 5
    assert iv.width <= Fraction(1, 2**40)


def test_isolate_rational_roots():
    x = UniPoly.x()
    # the first bisection midpoint of the symmetric Cauchy interval is 0
    iv = isolate_smallest_root(x * (x - 1) * (x - 2), 30)
    assert iv.is_point and iv.lo == 0
    iv = isolate_smallest_root((x + 3) * (x * x - 2), 30)
    assert iv.lo < -3 <= iv.hi and iv.width <= Fraction(1, 2**30)


def test_isolate_without_real_roots():
    with pytest.raises(DomainError):
        isolate_smallest_root(UniPoly([1, 0, 1]), 10)


@given(polys)
def test_root_count_matches_sympy(p):
    assert count_real_roots(p) == len(set(sp.real_roots(to_sympy(p))))


@given(polys, points, points, points)
def test_sturm_count_is_additive(p, a, b, c):
    lo, mid, hi = sorted((a, b, c))
    assert sturm_count(p, lo, hi) == sturm_count(p, lo, mid) + sturm_count(p, mid, hi)


@given(polys)
def test_cauchy_bound_encloses_all_roots(p):
    b = cauchy_bound(p)
    assert all(abs(r) < b for r in sp.real_roots(to_sympy(p)))


@given(polys, st.integers(min_value=4, max_value=40))
def test_isolated_root_is_smallest(p, w):
    roots = sorted(set(sp.real_roots(to_sympy(p))))
    if not roots:
        return
    iv = isolate_smallest_root(p, w)
    r = sp.Rational(roots[0]) if roots[0].is_Rational else roots[0]
    lo, hi = sp.Rational(iv.lo.numerator, iv.lo.denominator), sp.Rational(iv.hi.numerator, iv.hi.denominator)
    assert bool(lo <= r) and bool(r <= hi)
    assert all(not (bool(lo <= s) and bool(s <= hi)) for s in roots[1:])


def test_bipoly_expansion_matches_sympy():
    n, k = sp.symbols("n k")
    P = (N - 2 * K + 1) * (N + 1) ** 2 - K**3
    ours = P.substitute(N + 2, K - 1)
    theirs = sp.expand(((n + 2) - 2 * (k - 1) + 1) * ((n + 2) + 1) ** 2 - (k - 1) ** 3)
    assert all(ours.terms.get((i, j), 0) == theirs.coeff(n, i).coeff(k, j)
               for i in range(4) for j in range(4))
    assert P(3, 2) == (3 - 4 + 1) * 16 - 8
    assert P.eval_int(3, 2) == P(3, 2)


def test_ratfunc_equality_and_shift():
    L = RatFunc((N - K) * (N + 1), N * (N - 2 * K + 1))
    assert L.shift(1, 0) == RatFunc((N - K + 1) * (N + 2), (N + 1) * (N - 2 * K + 2))
    assert L(10, 2) == Fraction(44, 35)
    with pytest.raises(DomainError):
        L(3, 2)


# --- certificates -----------------------------------------------------------


def test_shift_expand_certifies_positive_factor():
    # -(d2) / (1+n) restricted to n = 6k+4+t: every factor is positive there
    P = (N - 6 * K - 3) * (N - 3 * K - 1) * (N - 2 * K + 2)
    res = shift_expand_nonneg(P, 6, 4, strict=True)
    assert res.certified
    assert res.detail["expansion"].terms[(0, 0)] == 1 * 3 * 6


def test_shift_expand_is_incomplete_not_wrong():
    res = shift_expand_nonneg(K - N, 1, 0)
    assert not res.certified and "-1" in res.witness


@given(st.lists(st.integers(0, 5), min_size=1, max_size=4), st.integers(0, 6),
       st.integers(0, 30), st.integers(0, 30))
def test_shift_expand_certificate_is_sound(roots, beta, k, t):
    # products of (n - alpha*k - r) with r <= beta are nonnegative on n >= 2k + beta
    P = BiPoly.const(1)
    for r in roots:
        P = P * (N - 2 * K - min(r, beta))
    res = shift_expand_nonneg(P, 2, beta)
    assert res.certified
    assert P(2 * k + beta + t, k) >= 0


def test_positive_on_ray():
    x = UniPoly.x()
    assert univariate_positive_on_ray((x - 1) * (x - 2) + 5, 0).certified
    res = univariate_positive_on_ray((x - 1) * (x - 2), 0)
    assert not res.certified and "2 real root" in res.witness
    assert univariate_positive_on_ray(-(x + 1), 0, sign_=-1).certified
    assert not univariate_positive_on_ray(x, 0).certified
    assert univariate_positive_on_ray(x, 0, strict=False).certified


@given(polys, st.integers(-5, 5))
def test_positive_on_ray_is_sound(p, start):
    res = univariate_positive_on_ray(p, start)
    if res.certified:
        for x in range(start + 1, start + 60):
            assert p(x) > 0
        assert p(start) > 0
