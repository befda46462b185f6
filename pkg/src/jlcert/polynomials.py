"""Rational polynomial algebra.

``UniPoly`` (dense, one variable) carries Sturm chains and real-root
isolation. ``BiPoly`` (sparse, two variables) and ``RatFunc`` hold the
recurrence coefficients and the bound formulas. Two certificate builders
replace quantifier elimination on purely polynomial claims:

* ``shift_expand_nonneg`` substitutes ``n = alpha*k + beta + t`` and reads
  off coefficient signs on the orthant ``k, t >= 0``;
* ``univariate_positive_on_ray`` decides the sign of a univariate
  polynomial on ``[start, oo)`` exactly with a Sturm count.

Both are sound but incomplete: ``inconclusive`` never means "false".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactnum import DomainError, RatInterval, RationalLike, as_fraction, sign


# ---------------------------------------------------------------------------
# univariate


class UniPoly:
    """Dense polynomial with ``Fraction`` coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[RationalLike]) -> "UniPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-as_fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial -> -1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, x: RatInterval) -> RatInterval:
        acc = RatInterval.point(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def _lift(self, other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly([other])

    def __add__(self, other):
        o = self._lift(other)
        m = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (m - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (m - len(o.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if self.is_zero() or o.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = UniPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other])
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [Fraction(0)] * max(0, len(rem) - dq)
        inv = 1 / other.lead
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else [])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> "UniPoly":
        return UniPoly(c / self.lead for c in self.coeffs) if self.coeffs else self

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.degree < 1:
        return p
    g = poly_gcd(p, p.derivative())
    return p if g.degree == 0 else p // g


def cauchy_bound(p: UniPoly) -> Fraction:
    """``1 + max |c_i / c_lead|``; every real root lies strictly inside."""
    if p.is_zero():
        raise DomainError("Cauchy bound of the zero polynomial")
    lead = p.lead
    return 1 + max((abs(c / lead) for c in p.coeffs[:-1]), default=Fraction(0))


def sturm_chain(p: UniPoly) -> list[UniPoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def sign_variations(chain: Sequence[UniPoly], x: RationalLike) -> int:
    signs = [s for s in (sign(q(x)) for q in chain) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(p: UniPoly, lo: RationalLike, hi: RationalLike) -> int:
    """Number of distinct real roots of ``p`` in the half-open ``(lo, hi]``."""
    if p.is_zero():
        raise DomainError("Sturm count of the zero polynomial")
    if lo >= hi:
        return 0
    chain = sturm_chain(squarefree_part(p))
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def count_real_roots(p: UniPoly) -> int:
    b = cauchy_bound(p)
    return sturm_count(p, -b, b)


def isolate_smallest_root(p: UniPoly, width_exponent: int) -> RatInterval:
    """Interval of width ``<= 2**-width_exponent`` holding the smallest real
    root of ``p`` and no other root.

    The root lies in ``(lo, hi]`` of the returned interval; an exact rational
    root found on the way yields a degenerate interval.
    """
    if p.is_zero():
        raise DomainError("root isolation of the zero polynomial")
    q = squarefree_part(p)
    chain = sturm_chain(q)
    bound = cauchy_bound(q)
    lo, hi = -bound, bound
    v_lo = sign_variations(chain, lo)
    if v_lo - sign_variations(chain, hi) == 0:
        raise DomainError(f"polynomial has no real root: {p!r}")
    target = Fraction(1, 1 << width_exponent)
    while hi - lo > target:
        mid = (lo + hi) / 2
        v_mid = sign_variations(chain, mid)
        if v_lo - v_mid >= 1:
            if q(mid) == 0 and v_lo - v_mid == 1:
                return RatInterval(mid, mid)
            hi = mid
        else:
            lo, v_lo = mid, v_mid
    if q(hi) == 0:
        return RatInterval(hi, hi)
    return RatInterval(lo, hi)


# ---------------------------------------------------------------------------
# bivariate


class BiPoly:
    """Sparse polynomial in two variables with rational coefficients.

    Terms are ``{(i, j): c}`` for ``c * x**i * y**j``; ``names`` only affects
    printing. Zero coefficients are never stored.
    """

    __slots__ = ("terms", "names")

    def __init__(self, terms: Mapping[tuple[int, int], RationalLike] | None = None, names=("n", "k")):
        self.terms: dict[tuple[int, int], Fraction] = {
            e: as_fraction(c) for e, c in (terms or {}).items() if c != 0
        }
        self.names = tuple(names)

    @classmethod
    def gens(cls, names=("n", "k")) -> tuple["BiPoly", "BiPoly"]:
        return cls({(1, 0): 1}, names), cls({(0, 1): 1}, names)

    @classmethod
    def const(cls, c: RationalLike, names=("n", "k")) -> "BiPoly":
        return cls({(0, 0): c}, names)

    def is_zero(self) -> bool:
        return not self.terms

    def _lift(self, other) -> "BiPoly":
        return other if isinstance(other, BiPoly) else BiPoly.const(other, self.names)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return BiPoly(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), a in self.terms.items():
            for (p, q), b in o.terms.items():
                key = (i + p, j + q)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = BiPoly.const(1, self.names)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.const(other)
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, x: RationalLike, y: RationalLike) -> Fraction:
        # small degrees: direct power table is fine
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * x**i * y**j
        return total

    def eval_int(self, x: int, y: int) -> Fraction:
        """Evaluate at integers with a single final normalization."""
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // _gcd(den, c.denominator)
        acc = 0
        for (i, j), c in self.terms.items():
            acc += c.numerator * (den // c.denominator) * x**i * y**j
        return Fraction(acc, den)

    def substitute(self, x: "BiPoly", y: "BiPoly") -> "BiPoly":
        """Compose: replace the first variable by ``x`` and the second by ``y``."""
        names = x.names
        xp: dict[int, BiPoly] = {0: BiPoly.const(1, names)}
        yp: dict[int, BiPoly] = {0: BiPoly.const(1, names)}

        def power(cache, base, e):
            while e not in cache:
                top = max(cache)
                cache[top + 1] = cache[top] * base
            return cache[e]

        out = BiPoly({}, names)
        for (i, j), c in self.terms.items():
            out = out + power(xp, x, i) * power(yp, y, j) * c
        return out

    def shift(self, dx: int = 0, dy: int = 0) -> "BiPoly":
        X, Y = BiPoly.gens(self.names)
        return self.substitute(X + dx, Y + dy)

    def to_unipoly(self, var: int = 1) -> UniPoly:
        """View as univariate in variable ``var`` (the other must be absent)."""
        other = 1 - var
        coeffs: dict[int, Fraction] = {}
        for e, c in self.terms.items():
            if e[other]:
                raise ValueError("polynomial depends on both variables")
            coeffs[e[var]] = c
        deg = max(coeffs, default=-1)
        return UniPoly(coeffs.get(i, 0) for i in range(deg + 1))

    def coefficients(self) -> list[Fraction]:
        return [self.terms[e] for e in sorted(self.terms)]

    def __repr__(self):
        if not self.terms:
            return "0"
        x, y = self.names
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                s for s in (
                    f"{x}^{i}" if i > 1 else (x if i == 1 else ""),
                    f"{y}^{j}" if j > 1 else (y if j == 1 else ""),
                ) if s
            )
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


N, K = BiPoly.gens(("n", "k"))


class RatFunc:
    """Quotient of two ``BiPoly`` in ``(n, k)``; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        self.num = num if isinstance(num, BiPoly) else BiPoly.const(num)
        self.den = den if isinstance(den, BiPoly) else BiPoly.const(den)
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    def _lift(self, other) -> "RatFunc":
        return other if isinstance(other, RatFunc) else RatFunc(other)

    def __add__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        o = self._lift(other)
        return (self.num * o.den - o.num * self.den).is_zero()

    __hash__ = None

    def __call__(self, n: int, k: int) -> Fraction:
        d = self.den.eval_int(n, k)
        if d == 0:
            raise DomainError(f"denominator vanishes at (n, k) = ({n}, {k})")
        return self.num.eval_int(n, k) / d

    def shift(self, dn: int = 0, dk: int = 0) -> "RatFunc":
        return RatFunc(self.num.shift(dn, dk), self.den.shift(dn, dk))

    def __repr__(self):
        return f"({self.num}) / ({self.den})"


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class CertResult:
    """Outcome of a sign certificate.

    ``certified`` is a proof of ``claim`` on the whole region; ``inconclusive``
    makes no claim either way.
    """

    status: str
    claim: str
    witness: str = ""
    detail: dict = field(default_factory=dict, compare=False)

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def shift_expand_nonneg(
    P: BiPoly,
    alpha: int,
    beta: int,
    strict: bool = False,
) -> CertResult:
    """Certify ``P(n, k) >= 0`` (``> 0`` if ``strict``) on the region
    ``n = alpha*k + beta + t`` with real ``k, t >= 0``.

    After substitution every coefficient of the ``(k, t)`` expansion must be
    nonnegative; strictness additionally needs a positive constant term.
    """
    k, t = BiPoly.gens(("k", "t"))
    expanded = P.substitute(k * alpha + beta + t, k)
    rel = ">" if strict else ">="
    claim = f"P {rel} 0 on n = {alpha}k + {beta} + t, k >= 0, t >= 0"
    detail = {"expansion": expanded}
    negative = sorted(e for e, c in expanded.terms.items() if c < 0)
    if negative:
        e = negative[0]
        return CertResult(
            "inconclusive", claim,
            f"coefficient {expanded.terms[e]} on k^{e[0]} t^{e[1]} is negative", detail,
        )
    const = expanded.terms.get((0, 0), Fraction(0))
    if strict and const <= 0:
        return CertResult("inconclusive", claim, f"constant term {const} is not positive", detail)
    return CertResult(
        "certified", claim,
        f"{len(expanded.terms)} nonnegative coefficients, constant term {const}", detail,
    )


def univariate_positive_on_ray(
    p: UniPoly,
    start: RationalLike,
    sign_: int = 1,
    strict: bool = True,
) -> CertResult:
    """Decide whether ``sign_ * p(x) > 0`` (or ``>= 0``) for all ``x >= start``.

    Exact: with no root in ``(start, oo)`` the sign there is the sign of the
    leading coefficient, and ``p(start)`` is checked directly.
    """
    if p.is_zero():
        raise DomainError("sign certificate for the zero polynomial")
    start = as_fraction(start)
    rel = (">" if strict else ">=") if sign_ > 0 else ("<" if strict else "<=")
    claim = f"p(x) {rel} 0 for all x >= {start}"
    bound = max(cauchy_bound(p), start + 1)
    roots = sturm_count(p, start, bound)
    at_start = p(start)
    if roots:
        return CertResult("inconclusive", claim, f"{roots} real root(s) in ({start}, {bound}]",
                          {"roots": roots})
    if sign(p.lead) != sign_:
        return CertResult("inconclusive", claim, f"leading coefficient {p.lead} has the wrong sign")
    if at_start == 0 and strict:
        return CertResult("inconclusive", claim, f"p({start}) = 0")
    return CertResult("certified", claim,
                      f"no roots in ({start}, {bound}], p({start}) = {at_start}",
                      {"p_start": at_start})
