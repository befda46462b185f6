"""Exact numeric substrate: integer square roots, rational intervals and
single-radical quadratic surds.

Python ``int`` is the arbitrary-precision integer and ``fractions.Fraction``
the normalized rational. Everything here is immutable and exact; intervals
only ever round *outward*, so an enclosure always contains the real value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from numbers import Rational as _RationalABC
from typing import Callable, Union

RationalLike = Union[int, Fraction]

#: Hard cap on refinement; comparisons still open at this width are "undecided".
MAX_WIDTH_EXPONENT = 256

LT, EQ, GT = -1, 0, 1


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain.

    ``what`` names the offending expression (e.g. ``"H2(19,8)"``) so that the
    certifier can report radicand violations as findings instead of crashing.
    """

    def __init__(self, message: str, what: str | None = None):
        super().__init__(message)
        self.what = what


class UndecidedError(ArithmeticError):
    """A comparison could not be decided before the precision cap."""


def as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def sign(x) -> int:
    return (x > 0) - (x < 0)


def isqrt_floor(x: int) -> int:
    """Largest ``r`` with ``r*r <= x``."""
    if x < 0:
        raise DomainError(f"isqrt of negative integer {x}")
    return isqrt(x)


def exact_sqrt(x: RationalLike) -> Fraction | None:
    """Return ``sqrt(x)`` if it is rational, else ``None``."""
    x = as_fraction(x)
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


@dataclass(frozen=True)
class RatInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: RationalLike) -> "RatInterval":
        x = as_fraction(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: RationalLike) -> bool:
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int | None:
        """Sign of every member, or ``None`` if the interval straddles/touches 0
        without being exactly ``[0, 0]``."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def round_out(self, bits: int) -> "RatInterval":
        """Widen to the nearest enclosing dyadic grid of step ``2**-bits``.

        Keeps denominators bounded across long chains of operations.
        """
        scale = 1 << bits
        lo = Fraction((self.lo.numerator * scale) // self.lo.denominator, scale)
        hi = Fraction(-((-self.hi.numerator * scale) // self.hi.denominator), scale)
        return RatInterval(lo, hi)

    def _coerce(self, other) -> "RatInterval":
        if isinstance(other, RatInterval):
            return other
        return RatInterval.point(other)

    def __add__(self, other):
        o = self._coerce(other)
        return RatInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = self._coerce(other)
        return RatInterval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o.is_point:
            c = o.lo
            return RatInterval(min(self.lo * c, self.hi * c), max(self.lo * c, self.hi * c))
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RatInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def reciprocal(self) -> "RatInterval":
        if self.contains_zero():
            raise DomainError(f"division by interval containing zero: {self}")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.reciprocal()

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


def interval_arith(op: str, a: RatInterval, b: RatInterval) -> RatInterval:
    """Apply ``op`` in ``{'+', '-', '*', '/'}`` to two intervals."""
    ops: dict[str, Callable[[RatInterval, RatInterval], RatInterval]] = {
        "+": RatInterval.__add__,
        "-": RatInterval.__sub__,
        "*": RatInterval.__mul__,
        "×": RatInterval.__mul__,
        "/": RatInterval.__truediv__,
        "÷": RatInterval.__truediv__,
    }
    try:
        fn = ops[op]
    except KeyError:
        raise ValueError(f"unknown interval operation {op!r}") from None
    return fn(a, b)


def sqrt_enclosure(x: RationalLike, width_exponent: int, what: str | None = None) -> RatInterval:
    """Enclose ``sqrt(x)`` in an interval of width at most ``2**-width_exponent``.

    Exact rational squares give a degenerate interval. ``what`` labels the
    radicand in the error raised for negative input.
    """
    x = as_fraction(x)
    if x < 0:
        label = what or str(x)
        raise DomainError(f"negative radicand {label} = {x}", what=label)
    if width_exponent < 0:
        raise ValueError("width_exponent must be >= 0")
    root = exact_sqrt(x)
    if root is not None:
        return RatInterval(root, root)
    w = width_exponent
    scale = 1 << w
    # floor(x * 4**w), then isqrt: r/2**w <= sqrt(x) < (r+1)/2**w
    m = (x.numerator << (2 * w)) // x.denominator
    r = isqrt(m)
    return RatInterval(Fraction(r, scale), Fraction(r + 1, scale))


@dataclass(frozen=True)
class QuadSurd:
    """The real number ``a + b*sqrt(d)`` with rational ``a``, ``b`` and ``d >= 0``.

    The radicand is kept as given (no square-free reduction); a rational
    square radicand is folded into ``a`` so that ``b == 0`` iff ``d == 0``.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        a, b, d = as_fraction(self.a), as_fraction(self.b), as_fraction(self.d)
        if d < 0:
            raise DomainError(f"negative radicand {d}")
        if b == 0 or d == 0:
            b, d = Fraction(0), Fraction(0)
        else:
            root = exact_sqrt(d)
            if root is not None:
                a, b, d = a + b * root, Fraction(0), Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def from_radicand(cls, a: RationalLike, b: RationalLike, d: RationalLike, what: str | None = None):
        d = as_fraction(d)
        if d < 0:
            label = what or "radicand"
            raise DomainError(f"negative radicand {label} = {d}", what=label)
        return cls(as_fraction(a), as_fraction(b), d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _same_field(self, other: "QuadSurd") -> Fraction:
        if self.is_rational:
            return other.d
        if other.is_rational or other.d == self.d:
            return self.d
        raise ValueError("QuadSurd arithmetic needs a common radicand")

    def _lift(self, other) -> "QuadSurd":
        if isinstance(other, QuadSurd):
            return other
        return QuadSurd(as_fraction(other))

    def __add__(self, other):
        o = self._lift(other)
        d = self._same_field(o)
        return QuadSurd(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        d = self._same_field(o)
        return QuadSurd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def sign(self) -> int:
        """Exact sign of ``a + b*sqrt(d)`` via a single squaring."""
        sa, sb = sign(self.a), sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        return sa * sign(self.a * self.a - self.b * self.b * self.d)

    def enclosure(self, width_exponent: int) -> RatInterval:
        if self.is_rational:
            return RatInterval.point(self.a)
        root = sqrt_enclosure(self.d, width_exponent + 1 + abs(self.b).numerator.bit_length())
        return (root * self.b + self.a).round_out(width_exponent + 2)

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.d) ** 0.5

    def __str__(self):
        if self.is_rational:
            return str(self.a)
        return f"{self.a} + ({self.b})*sqrt({self.d})"


def surd_compare(s: QuadSurd, t: RationalLike) -> int:
    """Return ``LT``, ``EQ`` or ``GT`` for ``s`` versus rational ``t``."""
    return (s - as_fraction(t)).sign()


def decide_sign(
    enclose: Callable[[int], RatInterval],
    start: int = 32,
    cap: int = MAX_WIDTH_EXPONENT,
) -> tuple[int | None, RatInterval]:
    """Refine ``enclose(w)`` for ``w = start, 2*start, ... <= cap`` until the
    sign is determined.

    Returns ``(sign, last_interval)``; ``sign`` is ``None`` when still open at
    the cap. ``enclose`` may raise ``DomainError``; that propagates.
    """
    w = min(start, cap)
    while True:
        iv = enclose(w)
        s = iv.sign()
        if s is not None:
            return s, iv
        if w >= cap:
            return None, iv
        w = min(2 * w, cap)
