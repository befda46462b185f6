"""Closed-form ratio bounds and the quadratic behind log-concavity.

For the ratio ``r = JL(n+1,k)/JL(n,k)``:

* ``eval_L`` is the rational lower bound valid for all ``n >= 2k``;
* ``eval_l`` (one radical, exact ``QuadSurd``) and ``eval_h`` (two radicals,
  rational interval) bound ``r`` inside the window ``k1(n) < k < k2(n)``;
* ``g_{n,k}(x)`` is the quadratic with
  ``JL(n,k)^2 - JL(n,k+1)JL(n,k-1) = JL(n,k)^2 g(r) / (5(k+1)(n+1)^2(n-2k+2))``.

``l`` is the larger root of ``g``; its radicand ``H1`` equals
``(1+n)^2 p_n(k)`` where ``p_n`` is the cubic whose smallest root ``R1(n)``
marks where the discriminant of ``g`` turns positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import (
    MAX_WIDTH_EXPONENT,
    DomainError,
    QuadSurd,
    RatInterval,
    UndecidedError,
    sqrt_enclosure,
)
from .polynomials import BiPoly, K, N, RatFunc, UniPoly, isolate_smallest_root

H1 = (-40 + 84 * K + 4 * K**2 + K**3 - 140 * N + 208 * K * N - 2 * K**2 * N + 2 * K**3 * N
      - 180 * N**2 + 169 * K * N**2 - 16 * K**2 * N**2 + K**3 * N**2 - 100 * N**3
      + 50 * K * N**3 - 10 * K**2 * N**3 - 20 * N**4 + 5 * K * N**4)
H2 = (49 * K + 14 * K**2 + K**3 - 20 * N + 30 * K * N - 10 * K**2 * N - 20 * N**2 + 5 * K * N**2)

#: ``n = 2k`` specialization of the ``l`` radicand numerator (times ``k^3``)
L2K_RADICAND = UniPoly([-40, -196, -300, -127, 20, 4])

#: the cubic ``p_n(X)`` with ``n`` in the first slot and ``X`` in the second
ROOT_CUBIC = K**3 + (4 - 10 * N) * K**2 + (84 + 40 * N + 5 * N**2) * K - (40 + 60 * N + 20 * N**2)

DELT = ((K * (N - K - 2) * N * (1 + N))**2
        + 4 * K * N**2 * (N - 2 * K + 1) * (1 + N)**2 * (-10 + (-5 + K) * N))

L_BOUND = RatFunc((N - K) * (N + 1), N * (N - 2 * K + 1))

WINDOW_QUARTIC = UniPoly([480, 400, 41, -22, 1])

# radicands inside the single-expression form G(n, k)
G_INNER = K**3 - 20 * (2 + N) * (3 + N) - 2 * K**2 * (3 + 5 * N) + K * (129 + 5 * N * (10 + N))
G_INNER2 = K * (7 + K)**2 - 10 * (-2 + K) * (-1 + K) * N + 5 * (-4 + K) * N**2


def _f(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def eval_L(n: int, k: int) -> Fraction:
    den = n * (n - 2 * k + 1)
    if den == 0:
        raise DomainError(f"L({n},{k}): denominator n(n-2k+1) vanishes")
    return Fraction((n - k) * (n + 1), den)


def eval_H1(n: int, k: int) -> int:
    return int(H1.eval_int(n, k))


def eval_H2(n: int, k: int) -> int:
    return int(H2.eval_int(n, k))


def eval_window(n: int) -> tuple[QuadSurd, QuadSurd]:
    """``(k1, k2) = c -/+ sqrt(Q(n)/(n-1)^2) / 4`` with ``c = (20+9n+n^2)/(4(n-1))``."""
    if n < 2:
        raise DomainError(f"window needs n >= 2, got {n}")
    center = Fraction(20 + 9 * n + n * n, 4 * (n - 1))
    rad = Fraction(WINDOW_QUARTIC(n)) / (n - 1) ** 2
    if rad < 0:
        raise DomainError(f"window radicand negative at n = {n}: {rad}", what=f"window({n})")
    return QuadSurd(center, Fraction(-1, 4), rad), QuadSurd(center, Fraction(1, 4), rad)


def window_radicand(n: int) -> Fraction:
    return Fraction(WINDOW_QUARTIC(n)) / (n - 1) ** 2


def in_window(n: int, k: int, window: tuple[QuadSurd, QuadSurd] | None = None) -> bool:
    """``k1(n) < k < k2(n)``, decided exactly; an integer equal to ``k1`` is outside."""
    k1, k2 = window or eval_window(n)
    return (k1 - k).sign() < 0 and (k2 - k).sign() > 0


def eval_l(n: int, k: int) -> QuadSurd:
    """Larger root of ``g_{n,k}``: ``-(2+k+n+kn-n^2)/(2n(1-2k+n)) + sqrt(H1/(k(2k-n-1)^2 n^2))/2``."""
    if k < 1 or n < 2 * k:
        raise DomainError(f"l({n},{k}) needs n >= 2k >= 2")
    a = Fraction(-(2 + k + n + k * n - n * n), 2 * n * (1 - 2 * k + n))
    h1 = eval_H1(n, k)
    if h1 < 0:
        raise DomainError(f"H1({n},{k}) = {h1} < 0", what=f"H1({n},{k})")
    return QuadSurd(a, Fraction(1, 2), Fraction(h1, k * (-1 + 2 * k - n) ** 2 * n * n))


def eval_l_2k(k: int) -> QuadSurd:
    """The ``n = 2k`` specialization written directly in ``k``."""
    if k < 1:
        raise DomainError("l(2k,k) needs k >= 1")
    rad = Fraction(L2K_RADICAND(k), k**3)
    if rad < 0:
        raise DomainError(f"l(2k,k) radicand negative at k = {k}", what=f"l2k({k})")
    return QuadSurd(Fraction(-(2 + 3 * k - 2 * k * k), 4 * k), Fraction(1, 4), rad)


def surd_equal(s: QuadSurd, t: QuadSurd) -> bool:
    """Exact equality of two surds that may carry different radicands."""
    if s.a != t.a:
        return False
    if s.is_rational or t.is_rational:
        return s.is_rational and t.is_rational
    return (s.b > 0) == (t.b > 0) and s.b * s.b * s.d == t.b * t.b * t.d


def _h_enclosure(n: int, k: int, w: int) -> RatInterval:
    h2 = eval_H2(n, k)
    sk = sqrt_enclosure(k, w)
    sh = sqrt_enclosure(h2, w, what=f"H2({n},{k})")
    outer = Fraction(1 + n, n * (1 - 2 * k + n))
    coef = 2 * (2 * k - n) * (n - 1)
    if coef == 0:
        return RatInterval.point((n - k) * outer)
    den = sk * k - sh - sk * (n - 3)
    if den.contains_zero():
        raise UndecidedError(f"h({n},{k}) inner denominator not separated from 0 at 2^-{w}")
    return ((sk * coef) / den + (n - k)) * outer


def h_enclosure(n: int, k: int, width_exponent: int) -> RatInterval:
    """One-shot enclosure of ``h(n,k)`` with radicals at ``2**-width_exponent``
    (result may be wider)."""
    if k < 1 or n < 2 * k:
        raise DomainError(f"h({n},{k}) needs n >= 2k >= 2")
    return _h_enclosure(n, k, width_exponent)


def eval_h(n: int, k: int, width_exponent: int = 64) -> RatInterval:
    """Enclosure of ``h(n,k)`` of width at most ``2**-width_exponent``."""
    if k < 1 or n < 2 * k:
        raise DomainError(f"h({n},{k}) needs n >= 2k >= 2")
    target = Fraction(1, 1 << width_exponent)
    w = width_exponent + 16
    limit = max(2 * MAX_WIDTH_EXPONENT, 2 * w)
    while True:
        try:
            iv = _h_enclosure(n, k, w)
            if iv.width <= target:
                return iv
        except UndecidedError:
            pass
        if w >= limit:
            raise UndecidedError(f"h({n},{k}) not resolved to 2^-{width_exponent}")
        w *= 2


def eval_G(n: int, k: int, w: int) -> RatInterval:
    """Interval value of the single-expression form ``G(n,k)``."""
    sk = sqrt_enclosure(k, w)
    s1 = sqrt_enclosure(G_INNER.eval_int(n, k), w, what=f"G-inner({n},{k})")
    s2 = sqrt_enclosure(G_INNER2.eval_int(n, k), w, what=f"G-inner2({n},{k})")
    t = 4 - 4 * k + 2 * n
    out = RatInterval.point(Fraction(1 + k - n, t) + Fraction(1 - k + n, 2 - 2 * k + n))
    out = out - s1 / (sk * t)
    coef = 2 * (2 * k - n) * (n - 1)
    if coef == 0:
        inner = RatInterval.point(n - k)
    else:
        den = sk * (3 + k - n) - s2
        if den.contains_zero():
            raise UndecidedError(f"G({n},{k}) inner denominator not separated at 2^-{w}")
        inner = (sk * coef) / den + (n - k)
    if inner.contains_zero():
        raise UndecidedError(f"G({n},{k}) outer denominator not separated at 2^-{w}")
    return out + RatInterval.point(n * (1 - 2 * k + n)) / inner


def induction_step_enclosure(n: int, k: int, w: int) -> RatInterval:
    """``(2+n)/(n-2k+2) / h(n,k) + L(n+1,k) - l(n+1,k)``, built from ``h`` and ``l``."""
    h = _h_enclosure(n, k, w)
    l_next = eval_l(n + 1, k).enclosure(w)
    return RatInterval.point(Fraction(2 + n, n - 2 * k + 2)) / h + eval_L(n + 1, k) - l_next


@dataclass(frozen=True)
class QuadraticForm:
    """``g(x) = a x^2 + b x + c``."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __call__(self, x):
        return self.a * x * x + self.b * x + self.c

    def derivative(self, x):
        return 2 * self.a * x + self.b

    @property
    def discriminant(self) -> Fraction:
        return self.b * self.b - 4 * self.a * self.c

    def nonneg_from(self, x0) -> bool:
        """``g(x) >= 0`` for every ``x >= x0`` (upward parabola): value and slope
        at ``x0`` both nonnegative. Works for rational and ``QuadSurd`` ``x0``."""
        if self.a <= 0:
            raise DomainError("criterion needs a positive leading coefficient")
        v, s = self(x0), self.derivative(x0)
        sv = v.sign() if isinstance(v, QuadSurd) else (v > 0) - (v < 0)
        ss = s.sign() if isinstance(s, QuadSurd) else (s > 0) - (s < 0)
        return sv >= 0 and ss >= 0


def quadratic_g(n: int, k: int) -> QuadraticForm:
    return QuadraticForm(
        Fraction(k * n * n * (n - 2 * k + 1)),
        Fraction(-k * (n - k - 2) * n * (1 + n)),
        Fraction(-(1 + n) ** 2 * (-10 + (-5 + k) * n)),
    )


def eval_g(n: int, k: int, x):
    return quadratic_g(n, k)(x)


def eval_delt(n: int, k: int) -> Fraction:
    return quadratic_g(n, k).discriminant


def log_concavity_prefactor(n: int, k: int) -> int:
    """``5(k+1)(n+1)^2(n-2k+2)``, the denominator tying ``g`` to the row."""
    return 5 * (k + 1) * (n + 1) ** 2 * (n - 2 * k + 2)


def root_cubic(n: int) -> UniPoly:
    """``p_n(X) = X^3 + (4-10n)X^2 + (84+40n+5n^2)X - (40+60n+20n^2)``."""
    return UniPoly([-(40 + 60 * n + 20 * n * n), 84 + 40 * n + 5 * n * n, 4 - 10 * n, 1])


def isolate_R1(n: int, width_exponent: int = 32) -> RatInterval:
    """Isolating interval for the smallest real root of ``p_n``."""
    if n < 1:
        raise DomainError(f"R1 needs n >= 1, got {n}")
    return isolate_smallest_root(root_cubic(n), width_exponent)


def exceeds_R1(n: int, k) -> bool:
    """``k > R1(n)`` decided exactly with a Sturm count below ``k``."""
    from .polynomials import cauchy_bound, sturm_count

    p = root_cubic(n)
    k = Fraction(k)
    below = sturm_count(p, -cauchy_bound(p), k)
    if below == 0:
        return False
    return not (below == 1 and p(k) == 0)


def keystone_residual() -> BiPoly:
    """``delt(n,k) - k n^2 (1+n)^2 p_n(k)``; the zero polynomial."""
    return DELT - K * N**2 * (1 + N) ** 2 * ROOT_CUBIC


def h1_residual() -> BiPoly:
    """``H1(n,k) - (1+n)^2 p_n(k)``; the zero polynomial."""
    return H1 - (1 + N) ** 2 * ROOT_CUBIC


def r1_threshold(n: int) -> int:
    """Smallest integer strictly greater than ``R1(n)``."""
    p = root_cubic(n)
    w = 8
    while True:
        iv = isolate_R1(n, w)
        lo_f, hi_f = iv.lo.numerator // iv.lo.denominator, iv.hi.numerator // iv.hi.denominator
        for m in (lo_f, hi_f):
            if iv.lo <= m <= iv.hi and p(m) == 0:
                return m + 1
        if lo_f == hi_f or (hi_f == lo_f + 1 and iv.hi == hi_f):
            return lo_f + 1
        w *= 2
