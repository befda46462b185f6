"""The Jaco-Lucas triangle ``JL(n, k)``, its differences, and row scans.

Three independent engines build the triangle: the defining binomial sum,
the three-term recurrence in ``n`` (column fill) and the two-term mixed
recurrence that walks along rows from the Lucas column. Outside
``0 <= k <= n // 2`` every accessor returns 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .exactnum import DomainError
from .report import VerificationReport, stopwatch

ENGINES = ("closed_form", "rec_2_3_columns", "rec_2_2_rows")


class InternalInconsistency(ArithmeticError):
    """A quantity that must be an integer came out fractional."""


def _integral(x: Fraction, where: str) -> int:
    if x.denominator != 1:
        raise InternalInconsistency(f"non-integer value {x} at {where}")
    return x.numerator


def _closed_form_terms(n: int) -> list[int]:
    """``n/(n-i) * C(n-i, i)`` for ``i = 0..n//2``, each checked integral."""
    terms = []
    for i in range(n // 2 + 1):
        num, den = n * comb(n - i, i), n - i
        if num % den:
            raise InternalInconsistency(f"summand n/(n-i)C(n-i,i) not integral at n={n}, i={i}")
        terms.append(num // den)
    return terms


def jl_closed_form(n: int, k: int) -> int:
    """``sum_{i=k}^{n//2} n/(n-i) * C(n-i, i) * C(i, k)``."""
    if n <= 0:
        raise DomainError(f"JL(n, k) needs n >= 1, got n = {n}")
    if k < 0 or k > n // 2:
        return 0
    total = Fraction(0)
    for i in range(k, n // 2 + 1):
        total += Fraction(n, n - i) * comb(n - i, i) * comb(i, k)
    return _integral(total, f"JL({n},{k})")


def delta_direct(n: int, k: int) -> int:
    """``JL(n, k+1) - JL(n, k)`` from its own binomial sum, with summand
    weight ``(i - 2k - 1)/(k + 1)``."""
    if n <= 0:
        raise DomainError(f"delta needs n >= 1, got n = {n}")
    if k < 0:
        return jl_closed_form(n, k + 1) - jl_closed_form(n, k)
    total = Fraction(0)
    for i in range(k, n // 2 + 1):
        total += Fraction(n * comb(n - i, i) * comb(i, k) * (i - 2 * k - 1), (n - i) * (k + 1))
    return _integral(total, f"delta({n},{k})")


def mode_formula(n: int) -> int:
    """``floor((n - 4) / 6) + 1`` with floor toward minus infinity."""
    if n < 1:
        raise DomainError(f"mode formula needs n >= 1, got {n}")
    return (n - 4) // 6 + 1


@dataclass(frozen=True)
class JLTable:
    """Rows ``n = 1..n_max``; ``rows[n-1][k] = JL(n, k)`` for ``k <= n//2``."""

    n_max: int
    rows: tuple[tuple[int, ...], ...]
    engine: str = "closed_form"

    def __post_init__(self):
        if len(self.rows) != self.n_max:
            raise ValueError("row count does not match n_max")
        for n, row in enumerate(self.rows, start=1):
            if len(row) != n // 2 + 1:
                raise ValueError(f"row {n} has length {len(row)}, expected {n // 2 + 1}")

    def __call__(self, n: int, k: int) -> int:
        if n < 1 or n > self.n_max:
            raise IndexError(f"row {n} outside table 1..{self.n_max}")
        if k < 0 or k > n // 2:
            return 0
        return self.rows[n - 1][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n - 1]

    def entries(self) -> Iterator[tuple[int, int, int]]:
        for n, row in enumerate(self.rows, start=1):
            for k, v in enumerate(row):
                yield n, k, v

    def delta(self, n: int, k: int) -> int:
        return self(n, k + 1) - self(n, k)

    def phi(self, n: int, k: int) -> int:
        return self.delta(n + 1, k) - self.delta(n, k)

    def A(self, k: int) -> int:
        return self.delta(6 * k + 4, k)

    def B(self, k: int) -> int:
        return self.delta(6 * k + 3, k)

    def ratio(self, n: int, k: int) -> Fraction:
        """``JL(n+1, k) / JL(n, k)``."""
        return Fraction(self(n + 1, k), self(n, k))

    def with_entry(self, n: int, k: int, value: int) -> "JLTable":
        """Copy with one entry replaced (fault injection)."""
        rows = [list(r) for r in self.rows]
        rows[n - 1][k] = value
        return JLTable(self.n_max, tuple(tuple(r) for r in rows), self.engine + "+patched")

    def flatten(self) -> list[int]:
        return [v for _, _, v in self.entries()]


def _build_closed_form(n_max: int) -> list[list[int]]:
    # sum_i t_i C(i, k) is the x^k coefficient of sum_i t_i (1+x)^i; Horner in (1+x)
    rows = []
    for n in range(1, n_max + 1):
        terms = _closed_form_terms(n)
        acc = [terms[-1]]
        for t in reversed(terms[:-1]):
            acc = [t + acc[0]] + [a + b for a, b in zip(acc[1:], acc)] + [acc[-1]]
        rows.append(acc)
    return rows


def _build_columns(n_max: int) -> list[list[int]]:
    """Column fill in ``n`` from the boundary values JL(2k,k), JL(2k+1,k)."""
    rows = [[0] * (n // 2 + 1) for n in range(1, n_max + 1)]
    for k in range(n_max // 2 + 1):
        # boundary: only i = k contributes, giving 2 and 2k+1 (Lucas 1, 3 at k = 0)
        if k == 0:
            lo, a, b = 1, 1, 3
        else:
            lo, a, b = 2 * k, 2, 2 * k + 1
        col = {lo: a, lo + 1: b}
        for n in range(lo, n_max - 1):
            nxt = (Fraction((n - k + 1) * (n + 2), (n + 1) * (n - 2 * k + 2)) * col[n + 1]
                   + Fraction(n + 2, n - 2 * k + 2) * col[n])
            col[n + 2] = _integral(nxt, f"column recurrence JL({n + 2},{k})")
        for n, v in col.items():
            if n <= n_max:
                rows[n - 1][k] = v
    return rows


def _build_rows(n_max: int) -> list[list[int]]:
    """Walk along rows: JL(n, k+1) from JL(n+1, k) and JL(n, k)."""
    top = n_max + n_max // 2 + 2
    col = {1: 1, 2: 3}
    for n in range(3, top + 1):
        col[n] = col[n - 1] + col[n - 2]
    cols = [col]
    for k in range(n_max // 2):
        prev, nxt = cols[-1], {}
        for n in range(2 * k + 2, max(prev)):
            v = (-Fraction(n * (n - 2 * k + 1), 5 * (n + 1) * (k + 1)) * prev[n + 1]
                 + Fraction(3 * n - 5 * k, 5 * (k + 1)) * prev[n])
            nxt[n] = _integral(v, f"row recurrence JL({n},{k + 1})")
        cols.append(nxt)
    return [[cols[k][n] for k in range(n // 2 + 1)] for n in range(1, n_max + 1)]


_BUILDERS = {
    "closed_form": _build_closed_form,
    "rec_2_3_columns": _build_columns,
    "rec_2_2_rows": _build_rows,
}


def build_table(n_max: int, engine: str = "closed_form") -> JLTable:
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    try:
        builder = _BUILDERS[engine]
    except KeyError:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}") from None
    rows = builder(n_max)
    return JLTable(n_max, tuple(tuple(r) for r in rows), engine)


def table_from_rows(rows: Sequence[Sequence[int]], engine: str = "external") -> JLTable:
    return JLTable(len(rows), tuple(tuple(int(v) for v in r) for r in rows), engine)


# ---------------------------------------------------------------------------
# row analysis


@dataclass(frozen=True)
class ModeReport:
    n: int
    k_star: int
    value: int
    unique: bool
    strictly_increasing_left: bool
    formula_k_star: int

    @property
    def agrees(self) -> bool:
        return self.k_star == self.formula_k_star


def row_argmax(table: JLTable, n: int) -> ModeReport:
    row = table.row(n)
    peak = max(row)
    k_star = row.index(peak)
    unique = row.count(peak) == 1
    inc = all(row[k] < row[k + 1] for k in range(k_star))
    return ModeReport(n, k_star, peak, unique, inc, mode_formula(n))


def scan_mode(table: JLTable, n_min: int = 4, n_max: int | None = None) -> VerificationReport:
    """Unique argmax equal to the mode formula, strict increase before it."""
    n_max = table.n_max if n_max is None else n_max
    rep = VerificationReport("mode", f"{n_min} <= n <= {n_max}")
    with stopwatch(rep):
        for n in range(1, n_max + 1):
            m = row_argmax(table, n)
            if n < n_min:
                rep.info.setdefault("below_theorem_range", []).append(
                    {"n": n, "argmax": m.k_star, "formula": m.formula_k_star, "agrees": m.agrees})
                continue
            rep.points_checked += 1
            if not (m.unique and m.agrees and m.strictly_increasing_left):
                rep.violations.append({"n": n, "argmax": m.k_star, "formula": m.formula_k_star,
                                       "unique": m.unique, "increasing": m.strictly_increasing_left})
        if n_max < n_min:
            rep.notes.append(f"the mode theorem is stated for n >= {n_min}; "
                             "rows below are reported for information only")
    return rep


def scan_log_concavity(table: JLTable, n_max: int | None = None) -> VerificationReport:
    """``JL(n,k)^2 >= JL(n,k-1) JL(n,k+1)`` for ``1 <= k < n//2``."""
    n_max = table.n_max if n_max is None else n_max
    rep = VerificationReport("log-concavity", f"1 <= k < n//2, n <= {n_max}")
    strict = True
    with stopwatch(rep):
        for n in range(1, n_max + 1):
            row = table.row(n)
            for k in range(1, n // 2):
                rep.points_checked += 1
                gap = row[k] * row[k] - row[k - 1] * row[k + 1]
                if gap < 0:
                    rep.violations.append((n, k, gap))
                elif gap == 0:
                    strict = False
        rep.info["all_strict"] = strict
    return rep


def scan_delta_signs(table: JLTable, n_max: int | None = None) -> VerificationReport:
    """Delta <= 0 on ``2k <= n <= 6k+3``, Delta >= 0 on ``n >= 6k+4``; zeros
    inside either region are recorded separately (strictness audit)."""
    n_max = table.n_max if n_max is None else n_max
    rep = VerificationReport("delta-signs", f"0 <= k <= n//2, n <= {n_max}")
    zeros_nonpos, zeros_nonneg = [], []
    with stopwatch(rep):
        for n in range(1, n_max + 1):
            for k in range(n // 2 + 1):
                rep.points_checked += 1
                d = table.delta(n, k)
                if n <= 6 * k + 3:
                    if d > 0:
                        rep.violations.append((n, k, d))
                    elif d == 0:
                        zeros_nonpos.append((n, k))
                else:
                    if d < 0:
                        rep.violations.append((n, k, d))
                    elif d == 0:
                        zeros_nonneg.append((n, k))
        rep.info["zeros_in_nonpositive_region"] = zeros_nonpos
        rep.info["zeros_in_nonnegative_region"] = zeros_nonneg
        rep.info["strict_everywhere"] = not (zeros_nonpos or zeros_nonneg)
    return rep


def scan_diagonals(table: JLTable, k_max: int) -> VerificationReport:
    """``A(k) = Delta(6k+4, k)`` strictly increasing from 1, ``B(k) = Delta(6k+3, k)``
    strictly decreasing from -1, for ``k <= k_max``."""
    rep = VerificationReport("diagonals-A-B", f"0 <= k <= {k_max}")
    with stopwatch(rep):
        if table.n_max < 6 * k_max + 5:
            raise DomainError(f"table too small for k_max={k_max}: need n_max >= {6 * k_max + 5}")
        if table.A(0) != 1:
            rep.violations.append(("A(0)", table.A(0)))
        if table.B(0) != -1:
            rep.violations.append(("B(0)", table.B(0)))
        for k in range(k_max):
            rep.points_checked += 1
            if not table.A(k + 1) > table.A(k):
                rep.violations.append(("A", k))
            if not table.B(k + 1) < table.B(k):
                rep.violations.append(("B", k))
        rep.info["A(0)"], rep.info["B(0)"] = table.A(0), table.B(0)
    return rep


def scan_phi_base(table: JLTable, n_max: int | None = None) -> VerificationReport:
    """Empirical audit of ``Phi(6k+4, k) > 0`` (base case not proved in the source)."""
    n_max = table.n_max if n_max is None else n_max
    rep = VerificationReport("phi-base-audit", f"6k+5 <= {n_max}", method="exact-pointwise (empirical)")
    with stopwatch(rep):
        k = 0
        while 6 * k + 5 <= n_max:
            rep.points_checked += 1
            if table.phi(6 * k + 4, k) <= 0:
                rep.violations.append((k, table.phi(6 * k + 4, k)))
            k += 1
        rep.notes.append("induction base Phi(6k+4,k) > 0 is audited, not proved")
    return rep


def cross_check_engines(n_max: int, reference: JLTable | None = None) -> VerificationReport:
    """All engines (and an optional supplied table) agree entry by entry."""
    rep = VerificationReport("engine-equivalence", f"n <= {n_max}")
    with stopwatch(rep):
        tables = {e: build_table(n_max, e) for e in ENGINES}
        if reference is not None:
            tables["supplied"] = reference
        base = tables["closed_form"]
        for name, tab in tables.items():
            for n in range(1, n_max + 1):
                for k in range(n // 2 + 1):
                    if name == "closed_form":
                        rep.points_checked += 1
                    elif tab(n, k) != base(n, k):
                        rep.violations.append((name, n, k, tab(n, k), base(n, k)))
        rep.info["engines"] = list(tables)
    return rep


def scan_delta_identity(table: JLTable, n_max: int) -> VerificationReport:
    """Table subtraction agrees with the direct difference sum."""
    rep = VerificationReport("delta-direct-sum", f"0 <= k <= n//2, n <= {n_max}")
    with stopwatch(rep):
        for n in range(1, n_max + 1):
            for k in range(n // 2 + 1):
                rep.points_checked += 1
                if table.delta(n, k) != delta_direct(n, k):
                    rep.violations.append((n, k))
    return rep


def scan_boundary(table: JLTable) -> VerificationReport:
    """Lucas column and ``JL(2k+1,k)/JL(2k,k) = (2k+1)/2``."""
    rep = VerificationReport("boundary-values", f"n <= {table.n_max}")
    with stopwatch(rep):
        a, b = 2, 1  # Lucas L0, L1
        for n in range(1, table.n_max + 1):
            rep.points_checked += 1
            if table(n, 0) != b:
                rep.violations.append(("lucas", n))
            a, b = b, a + b
        for k in range(1, (table.n_max - 1) // 2 + 1):
            rep.points_checked += 1
            if table.ratio(2 * k, k) != Fraction(2 * k + 1, 2):
                rep.violations.append(("ratio", k))
    return rep
