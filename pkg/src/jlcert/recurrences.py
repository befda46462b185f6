"""Linear recurrences of the triangle, stored as data and checked exactly.

An identity is a linear relation ``sum_j c_j(n, k) * X(n + dn_j, k + dk_j) = 0``
where ``X`` is the triangle, its first difference Delta, or one of the
diagonals ``A(k) = Delta(6k+4, k)``, ``B(k) = Delta(6k+3, k)``. One generic
evaluator serves all of them, so a mistyped coefficient shows up as a
nonzero residual instead of being shared silently between code paths.

The A/B relations come from a hypergeometric summation whose side
conditions are integrality facts about ``k``; they hold for every integer
``k >= 0`` and are not re-checked here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .exactnum import DomainError
from .polynomials import BiPoly, K, N, RatFunc
from .report import ResidualReport, stopwatch
from .triangle import JLTable, build_table

ONE = RatFunc(1)

# --- coefficient polynomials ------------------------------------------------

D0 = (1 + N) * (2 + N) * (-2 - 6 * K + N) * (-3 * K + N)
D1 = (2 + N) * (3 + 12 * K + 3 * K**2 - 18 * K**3 + 8 * K * N + 27 * K**2 * N
                - 2 * N**2 - 10 * K * N**2 + N**3)
D2 = -(1 + N) * (-3 - 6 * K + N) * (-1 - 3 * K + N) * (2 - 2 * K + N)

_SEXTIC = (462369600 + 2067513120 * K + 3748025842 * K**2 + 3537926637 * K**3
           + 1838345599 * K**4 + 499358523 * K**5 + 55457479 * K**6)
_Q1 = 2640 + 2681 * K + 671 * K**2
_Q2 = 630 + 1339 * K + 671 * K**2

B0 = 72 * (3 + 2 * K) * (4 + 3 * K) * (5 + 3 * K) * (7 + 3 * K) * (8 + 3 * K) * (5 + 6 * K) * (7 + 6 * K) * _Q1
B1 = -(2 + K) * (7 + 3 * K) * (8 + 3 * K) * _SEXTIC
B2 = 40 * (2 + K) * (3 + K) * (5 + 2 * K) * (4 + 3 * K) * (5 + 3 * K) * (9 + 4 * K) * (11 + 4 * K) * _Q2

C0 = 72 * (3 + 2 * K)**2 * (2 + 3 * K) * (4 + 3 * K) * (7 + 3 * K) * (5 + 6 * K) * (7 + 6 * K) * _Q1
C1 = -(2 + K) * (1 + 2 * K) * (7 + 3 * K) * _SEXTIC
C2 = 40 * (2 + K) * (3 + K) * (1 + 2 * K) * (3 + 2 * K) * (4 + 3 * K) * (9 + 4 * K) * (11 + 4 * K) * _Q2


# --- specs ------------------------------------------------------------------

Guard = tuple[str, Callable[[int, int], bool]]


@dataclass(frozen=True)
class RecurrenceSpec:
    """``terms`` maps a shift ``(dn, dk)`` to its coefficient."""

    id: str
    sequence: str  # "JL", "delta", "A" or "B"
    terms: dict[tuple[int, int], RatFunc]
    guards: tuple[Guard, ...]
    text: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def violated_guard(self, n: int, k: int) -> str | None:
        for name, pred in self.guards:
            if not pred(n, k):
                return name
        return None

    @property
    def max_dn(self) -> int:
        return max(dn for dn, _ in self.terms)

    @property
    def indexed_by_k_only(self) -> bool:
        return self.sequence in ("A", "B")


def _r(num, den=1) -> RatFunc:
    return RatFunc(num, den)


_K_GE_1: Guard = ("k >= 1", lambda n, k: k >= 1)
_K_GE_0: Guard = ("k >= 0", lambda n, k: k >= 0)
_N_GE_2K: Guard = ("n >= 2k", lambda n, k: n >= 2 * k)
_N_GE_1: Guard = ("n >= 1", lambda n, k: n >= 1)

IDENTITIES: dict[str, RecurrenceSpec] = {}


def _register(spec: RecurrenceSpec) -> RecurrenceSpec:
    IDENTITIES[spec.id] = spec
    return spec


LOWER_K_NEXT_ROW = _register(RecurrenceSpec(
    "lower-k-next-row", "JL",
    {(0, -1): ONE,
     (1, 0): -_r(K * N, (N + 1) * (N - 2 * K + 2)),
     (0, 0): -_r(2 * K, N - 2 * K + 2)},
    (_K_GE_1, _N_GE_2K),
    "JL(n,k-1) = kn/((n+1)(n-2k+2)) JL(n+1,k) + 2k/(n-2k+2) JL(n,k)",
))

UPPER_K_NEXT_ROW = _register(RecurrenceSpec(
    "upper-k-next-row", "JL",
    {(0, 1): ONE,
     (1, 0): _r(N * (N - 2 * K + 1), 5 * (N + 1) * (K + 1)),
     (0, 0): -_r(3 * N - 5 * K, 5 * (K + 1))},
    (_K_GE_0, _N_GE_2K, _N_GE_1),
    "JL(n,k+1) = -n(n-2k+1)/(5(n+1)(k+1)) JL(n+1,k) + (3n-5k)/(5(k+1)) JL(n,k)",
))

COLUMN = _register(RecurrenceSpec(
    "column", "JL",
    {(2, 0): ONE,
     (1, 0): -_r((N - K + 1) * (N + 2), (N + 1) * (N - 2 * K + 2)),
     (0, 0): -_r(N + 2, N - 2 * K + 2)},
    (_K_GE_0, _N_GE_2K, _N_GE_1),
    "JL(n+2,k) = (n-k+1)(n+2)/((n+1)(n-2k+2)) JL(n+1,k) + (n+2)/(n-2k+2) JL(n,k)",
))

DIAGONAL = _register(RecurrenceSpec(
    "diagonal", "JL",
    {(-1, -1): _r(-N * (1 + N)),
     (0, 0): _r(-K * (1 + N)),
     (1, 0): _r(2 * K * N)},
    (_K_GE_1, _N_GE_2K),
    "-n(1+n) JL(n-1,k-1) - k(1+n) JL(n,k) + 2kn JL(n+1,k) = 0",
))

LOWER_K_TWO_ROWS = _register(RecurrenceSpec(
    "lower-k-two-rows", "JL",
    {(0, -1): ONE,
     (1, 0): _r(K, N + 1),
     (2, 0): -_r(2 * K, N + 2)},
    (_K_GE_1, ("n >= 2k - 1", lambda n, k: n >= 2 * k - 1)),
    "JL(n,k-1) = -k/(n+1) JL(n+1,k) + 2k/(n+2) JL(n+2,k)",
))

WITHIN_ROW = _register(RecurrenceSpec(
    "within-row", "JL",
    {(0, -1): ONE,
     (0, 0): -_r(K * (5 * N - 9 * K + 2), (N - 2 * K + 2) * (N - 2 * K + 1)),
     (0, 1): _r(5 * K * (K + 1), (N - 2 * K + 2) * (N - 2 * K + 1))},
    (_K_GE_1, _N_GE_2K),
    "JL(n,k-1) = k(5n-9k+2)/((n-2k+2)(n-2k+1)) JL(n,k) - 5k(k+1)/((n-2k+2)(n-2k+1)) JL(n,k+1)",
))

DELTA_COLUMN = _register(RecurrenceSpec(
    "delta-column", "delta",
    {(0, 0): _r(D0), (1, 0): _r(D1), (2, 0): _r(D2)},
    (_K_GE_0, _N_GE_2K, _N_GE_1),
    "d0 Delta(n,k) + d1 Delta(n+1,k) + d2 Delta(n+2,k) = 0",
))

B_SYSTEM = _register(RecurrenceSpec(
    "b-system", "A",
    {(0, 0): _r(B0), (0, 1): _r(B1), (0, 2): _r(B2)},
    (_K_GE_0,),
    "b0(k) A(k) + b1(k) A(k+1) + b2(k) A(k+2) = 0, A(k) = Delta(6k+4,k)",
))

C_SYSTEM = _register(RecurrenceSpec(
    "c-system", "B",
    {(0, 0): _r(C0), (0, 1): _r(C1), (0, 2): _r(C2)},
    (_K_GE_0,),
    "c0(k) B(k) + c1(k) B(k+1) + c2(k) B(k+2) = 0, B(k) = Delta(6k+3,k)",
))

TABLE_IDENTITIES = ("lower-k-next-row", "upper-k-next-row", "column", "diagonal", "lower-k-two-rows", "within-row", "delta-column")
SEQUENCE_IDENTITIES = ("b-system", "c-system")


# --- evaluation ---------------------------------------------------------------


@lru_cache(maxsize=4)
def _default_table(n_max: int) -> JLTable:
    return build_table(n_max, "rec_2_3_columns")


def _table_for(n_needed: int, table: JLTable | None) -> JLTable:
    if table is not None:
        if table.n_max < n_needed:
            raise DomainError(f"table has n_max={table.n_max}, need {n_needed}")
        return table
    size = 64
    while size < n_needed:
        size *= 2
    return _default_table(size)


def _value(spec: RecurrenceSpec, table: JLTable, n: int, k: int) -> int:
    if spec.sequence == "JL":
        return table(n, k)
    if spec.sequence == "delta":
        return table.delta(n, k)
    if spec.sequence == "A":
        return table.A(k)
    return table.B(k)


def _rows_needed(spec: RecurrenceSpec, n: int, k: int) -> int:
    if spec.sequence == "A":
        return 6 * (k + 2) + 4
    if spec.sequence == "B":
        return 6 * (k + 2) + 3
    return n + spec.max_dn


def eval_residual(identity: str | RecurrenceSpec, n: int, k: int, table: JLTable | None = None) -> Fraction:
    """Exact ``LHS - RHS`` of ``identity`` at ``(n, k)``.

    For the A/B relations only ``k`` matters; pass any ``n``.
    """
    spec = IDENTITIES[identity] if isinstance(identity, str) else identity
    bad = spec.violated_guard(n, k)
    if bad is not None:
        raise DomainError(f"{spec.id} not defined at (n, k) = ({n}, {k}): requires {bad}", what=bad)
    tab = _table_for(_rows_needed(spec, n, k), table)
    total = Fraction(0)
    for (dn, dk), coeff in spec.terms.items():
        total += coeff(n, k) * _value(spec, tab, n + dn, k + dk)
    return total


def scan_identity(
    identity: str | RecurrenceSpec,
    n_max: int = 200,
    k_max: int = 50,
    table: JLTable | None = None,
) -> ResidualReport:
    """Residual must vanish at every lattice point of the domain with
    ``n <= n_max`` (``k <= k_max`` for the A/B relations)."""
    spec = IDENTITIES[identity] if isinstance(identity, str) else identity
    if spec.indexed_by_k_only:
        region = f"0 <= k <= {k_max}"
        points = [(0, k) for k in range(k_max + 1)]
        need = _rows_needed(spec, 0, k_max)
    else:
        region = f"{', '.join(g for g, _ in spec.guards)}, n <= {n_max}"
        points = [(n, k) for n in range(1, n_max + 1) for k in range(-1, n // 2 + 2)
                  if spec.violated_guard(n, k) is None]
        need = n_max + spec.max_dn
    rep = ResidualReport(spec.id, region, method="exact residual")
    with stopwatch(rep):
        tab = _table_for(need, table)
        for n, k in points:
            rep.points_checked += 1
            r = eval_residual(spec, n, k, tab)
            if r != 0:
                rep.violations.append((n, k, r) if not spec.indexed_by_k_only else (k, r))
    rep.info["identity"] = spec.text
    return rep


# --- symbolic chaining ----------------------------------------------------------

Relation = dict[tuple[int, int], RatFunc]


def _clean(rel: Relation) -> Relation:
    return {s: c for s, c in rel.items() if not c.num.is_zero()}


def shift_relation(rel: Relation, dn: int, dk: int = 0) -> Relation:
    """Replace ``(n, k)`` by ``(n + dn, k + dk)`` throughout."""
    return {(a + dn, b + dk): c.shift(dn, dk) for (a, b), c in rel.items()}


def eliminate(target: Relation, source: Relation, shift: tuple[int, int]) -> Relation:
    """Remove the ``shift`` term from ``target`` using ``source``."""
    factor = target[shift] / source[shift]
    out = dict(target)
    for s, c in source.items():
        out[s] = out.get(s, RatFunc(0)) - factor * c
    out.pop(shift, None)
    return _clean(out)


def relations_equal(a: Relation, b: Relation, pivot: tuple[int, int]) -> bool:
    """Same relation up to a rational-function multiple, normalized at ``pivot``."""
    a, b = _clean(a), _clean(b)
    if set(a) != set(b) or pivot not in a:
        return False
    return all(a[s] / a[pivot] == b[s] / b[pivot] for s in a)


def derive_lower_k_next_row() -> Relation:
    """The two-row relation with JL(n+2,k) eliminated by the column relation."""
    return eliminate(LOWER_K_TWO_ROWS.terms, COLUMN.terms, (2, 0))


def derive_upper_k_next_row() -> Relation:
    """The within-row relation with JL(n,k-1) eliminated by the next-row one."""
    return eliminate(WITHIN_ROW.terms, LOWER_K_NEXT_ROW.terms, (0, -1))


def derive_lower_k_two_rows() -> Relation:
    """The diagonal relation with n -> n+1."""
    return shift_relation(DIAGONAL.terms, 1)


def chaining_report() -> ResidualReport:
    rep = ResidualReport("recurrence-chaining", "symbolic, all (n, k)", method="rational-function identity")
    with stopwatch(rep):
        for name, derived, spec, pivot in (
            ("lower-k-two-rows from diagonal", derive_lower_k_two_rows(), LOWER_K_TWO_ROWS, (0, -1)),
            ("lower-k-next-row from lower-k-two-rows and column", derive_lower_k_next_row(), LOWER_K_NEXT_ROW, (0, -1)),
            ("upper-k-next-row from within-row and lower-k-next-row", derive_upper_k_next_row(), UPPER_K_NEXT_ROW, (0, 1)),
        ):
            rep.points_checked += 1
            if not relations_equal(derived, spec.terms, pivot):
                rep.violations.append(name)
    return rep


def scan_all(n_max: int = 200, k_max: int = 50, table: JLTable | None = None) -> list[ResidualReport]:
    reports = [scan_identity(i, n_max=n_max, table=table) for i in TABLE_IDENTITIES]
    reports += [scan_identity(i, k_max=k_max, table=table) for i in SEQUENCE_IDENTITIES]
    reports.append(chaining_report())
    return reports
