"""Mechanical re-verification of the log-concavity and mode argument.

Two kinds of evidence are produced:

* symbolic certificates (polynomial identities, Sturm-on-ray, shift-and-expand)
  that hold on a whole region;
* exact lattice scans for the statements that carry radicals, which hold at
  every integer point inside the configured bounds and nowhere else.

Each statement becomes one ``VerificationReport``; the public entry points
return a ``CertReport`` aggregating them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bounds as B
from .combinatorics import cross_check_oracle
from .exactnum import (
    MAX_WIDTH_EXPONENT,
    DomainError,
    QuadSurd,
    RatInterval,
    UndecidedError,
    surd_compare,
)
from .parallel import pmap
from .polynomials import (
    BiPoly,
    CertResult,
    K,
    N,
    UniPoly,
    shift_expand_nonneg,
    univariate_positive_on_ray,
)
from .recurrences import (
    B0,
    B1,
    B2,
    C0,
    C1,
    C2,
    D0,
    D1,
    D2,
    COLUMN,
    SEQUENCE_IDENTITIES,
    TABLE_IDENTITIES,
    chaining_report,
    scan_identity,
)
from .report import BOUNDED_NOTE, CertReport, VerificationReport, stopwatch
from .triangle import (
    JLTable,
    build_table,
    cross_check_engines,
    scan_boundary,
    scan_delta_identity,
    scan_delta_signs,
    scan_diagonals,
    scan_log_concavity,
    scan_mode,
    scan_phi_base,
)

#: first row of the radical-bound region
N_START = 19
#: rows settled by direct arithmetic on the table
SMALL_ROWS = 18

DEFAULT_N_MAX = 300
DEFAULT_TABLE_N_MAX = 500
DEFAULT_K_MAX = 50
DIAGONAL_K_MAX = 60
ORACLE_N_MAX = 14

CONE_NOTE = (
    "cone certificates establish the linear implications on their whole stated "
    "regions; radical inequalities are covered only by the bounded lattice scans"
)


def _refine_sign(enclose: Callable[[int], RatInterval], start: int = 32,
                 cap: int = MAX_WIDTH_EXPONENT) -> int | None:
    """Like ``decide_sign`` but treats an unresolved inner denominator as
    "refine further" instead of failing."""
    w = min(start, cap)
    while True:
        try:
            s = enclose(w).sign()
        except UndecidedError:
            s = None
        if s is not None:
            return s
        if w >= cap:
            return None
        w = min(2 * w, cap)


class _Tally:
    """Per-check partial results from one lattice task; merges by addition."""

    def __init__(self):
        self.points: Counter = Counter()
        self.violations: dict[str, list] = {}
        self.undecided: dict[str, list] = {}
        self.info: dict[str, Counter] = {}

    def hit(self, check: str) -> None:
        self.points[check] += 1

    def fail(self, check: str, item) -> None:
        self.violations.setdefault(check, []).append(item)

    def open(self, check: str, item) -> None:
        self.undecided.setdefault(check, []).append(item)

    def count(self, check: str, key: str, by: int = 1) -> None:
        self.info.setdefault(check, Counter())[key] += by

    def merge(self, other: "_Tally") -> None:
        self.points.update(other.points)
        for d, o in ((self.violations, other.violations), (self.undecided, other.undecided)):
            for key, items in o.items():
                d.setdefault(key, []).extend(items)
        for key, c in other.info.items():
            self.info.setdefault(key, Counter()).update(c)

    def fill(self, rep: VerificationReport) -> VerificationReport:
        rep.points_checked += self.points[rep.id]
        rep.violations.extend(self.violations.get(rep.id, []))
        rep.undecided.extend(self.undecided.get(rep.id, []))
        for key, v in self.info.get(rep.id, {}).items():
            rep.info[key] = rep.info.get(key, 0) + v
        return rep


def _table(n_needed: int, table: JLTable | None) -> JLTable:
    if table is None:
        return build_table(n_needed, "rec_2_3_columns")
    if table.n_max < n_needed:
        raise DomainError(f"table has n_max={table.n_max}, need {n_needed}")
    return table


def _ratio(row: tuple[int, ...], next_row: tuple[int, ...], k: int) -> Fraction:
    return Fraction(next_row[k], row[k])


# ---------------------------------------------------------------------------
# rational lower bound L


def verify_lemma22(n_max: int = DEFAULT_N_MAX, table: JLTable | None = None) -> CertReport:
    """``L(n,k) <= JL(n+1,k)/JL(n,k)`` for ``2k <= n <= n_max`` with equality at
    ``n = 2k``, the three-term ratio identity, and ``L(n+1,k)`` matching the
    constant term of that identity as rational functions."""
    if n_max < 2:
        raise DomainError("verify_lemma22 needs n_max >= 2")
    t = _table(n_max + 2, table)
    cert = CertReport("verify_lemma22", {"n_max": n_max})
    region = f"1 <= k, 2k <= n <= {n_max}"

    base = cert.add(VerificationReport("ratio-L-base", f"n = 2k <= {n_max}"))
    with stopwatch(base):
        for k in range(1, n_max // 2 + 1):
            base.points_checked += 1
            r, lo = t.ratio(2 * k, k), B.eval_L(2 * k, k)
            if not r == lo == Fraction(2 * k + 1, 2):
                base.violations.append((2 * k, k, r, lo))

    lower = cert.add(VerificationReport("ratio-L-bound", region))
    step = cert.add(VerificationReport("ratio-L-induction", region))
    with stopwatch(lower):
        for n in range(2, n_max + 1):
            for k in range(1, n // 2 + 1):
                lower.points_checked += 1
                r = t.ratio(n, k)
                if B.eval_L(n, k) > r:
                    lower.violations.append((n, k, B.eval_L(n, k), r))
                step.points_checked += 1
                rhs = (Fraction(2 + n, n - 2 * k + 2) / r
                       + Fraction((n - k + 1) * (n + 2), (1 + n) * (n - 2 * k + 2)))
                if t.ratio(n + 1, k) != rhs:
                    step.violations.append((n, k))
    step.duration_ms = lower.duration_ms
    lower.notes.append(BOUNDED_NOTE)

    sym = cert.add(VerificationReport("ratio-L-shift-structure", "rational functions in n, k",
                                      method="symbolic-certificate"))
    with stopwatch(sym):
        sym.points_checked = 1
        if B.L_BOUND.shift(1, 0) != -COLUMN.terms[(1, 0)]:
            sym.violations.append("L(n+1,k) differs from the constant term of the ratio identity")
    return cert


# ---------------------------------------------------------------------------
# radical bounds l and h inside the window

_WINDOW_CHECKS = ("ratio-window-radicands", "ratio-window-lower", "ratio-window-upper", "ratio-window-step",
        "ratio-window-G-agreement")


def _window_row(n: int, row: tuple[int, ...], next_row: tuple[int, ...]) -> tuple[_Tally, list[int]]:
    tally = _Tally()
    window = B.eval_window(n)
    ks = [k for k in range(1, n // 2 + 1) if B.in_window(n, k, window)]
    if not ks:
        tally.count("ratio-window-lower", "vacuous_rows")
    for k in ks:
        tally.hit("ratio-window-radicands")
        h1, h2 = B.eval_H1(n, k), B.eval_H2(n, k)
        if h1 < 0 or h2 < 0:
            tally.fail("ratio-window-radicands", (n, k, h1, h2))
            continue
        r = _ratio(row, next_row, k)

        tally.hit("ratio-window-lower")
        if surd_compare(B.eval_l(n, k), r) > 0:
            tally.fail("ratio-window-lower", (n, k))

        tally.hit("ratio-window-upper")
        s = _refine_sign(lambda w: B.h_enclosure(n, k, w) - r)
        if s is None:
            tally.open("ratio-window-upper", (n, k))
        elif s < 0:
            tally.fail("ratio-window-upper", (n, k))

        tally.hit("ratio-window-step")
        try:
            step = _refine_sign(lambda w: B.induction_step_enclosure(n, k, w))
        except DomainError as exc:
            tally.fail("ratio-window-step", (n, k, str(exc)))
            continue
        if step is None:
            tally.open("ratio-window-step", (n, k))
        elif step < 0:
            tally.fail("ratio-window-step", (n, k))

        try:
            g = _refine_sign(lambda w: B.eval_G(n, k, w))
        except DomainError:
            tally.count("ratio-window-G-agreement", "G_domain_error")
            continue
        if g is None or step is None:
            tally.count("ratio-window-G-agreement", "not_decidable")
            continue
        tally.hit("ratio-window-G-agreement")
        if g != step:
            tally.fail("ratio-window-G-agreement", (n, k, step, g))
    return tally, ks


def verify_lemma23(n_max: int = DEFAULT_N_MAX, table: JLTable | None = None) -> CertReport:
    """``l(n,k) <= ratio <= h(n,k)`` at every integer point with
    ``19 <= n <= n_max`` and ``k1(n) < k < k2(n)``, plus the base inequality,
    the induction step built from ``l`` and ``h``, and the sign agreement of
    the single-expression ``G`` with that step."""
    cert = CertReport("verify_lemma23", {"n_max": n_max, "precision_cap": f"2^-{MAX_WIDTH_EXPONENT}"})
    region = f"{N_START} <= n <= {n_max}, k1(n) < k < k2(n)"
    reps = {cid: VerificationReport(cid, region, method="interval" if cid != "ratio-window-lower"
                                    else "exact-pointwise") for cid in _WINDOW_CHECKS}
    reps["ratio-window-radicands"].method = "exact-pointwise"
    base = VerificationReport("ratio-window-base", "n = 2k for every k seen in a window",
                              method="exact-pointwise")
    if n_max < N_START:
        for rep in reps.values():
            rep.notes.append(f"vacuous: the window region starts at n = {N_START}")
            cert.add(rep)
        cert.add(base)
        return cert
    t = _table(n_max + 1, table)
    total = _Tally()
    window_ks: set[int] = set()
    with stopwatch(reps["ratio-window-lower"]):
        results = pmap(_window_row, [(n, t.row(n), t.row(n + 1)) for n in range(N_START, n_max + 1)])
        for tally, ks in results:
            total.merge(tally)
            window_ks.update(ks)
    for rep in reps.values():
        total.fill(rep)
        rep.duration_ms = reps["ratio-window-lower"].duration_ms
        rep.notes.append(BOUNDED_NOTE)
        cert.add(rep)

    with stopwatch(base):
        for k in sorted(window_ks):
            base.points_checked += 1
            try:
                l2k = B.eval_l(2 * k, k)
            except DomainError as exc:
                base.violations.append((k, str(exc)))
                continue
            if surd_compare(l2k, Fraction(2 * k + 1, 2)) > 0:
                base.violations.append((k, "l(2k,k) > (2k+1)/2"))
            if not B.surd_equal(l2k, B.eval_l_2k(k)):
                base.violations.append((k, "specialized form differs"))
        base.info["k_values"] = len(window_ks)
    cert.add(base)
    return cert


# ---------------------------------------------------------------------------
# log-concavity through the quadratic g

_QUADRATIC_CHECKS = ("quadratic-identity", "quadratic-small-rows", "quadratic-branches", "quadratic-L-above-l",
        "quadratic-discriminant-root")


def _quadratic_row(n: int, row: tuple[int, ...], next_row: tuple[int, ...]) -> _Tally:
    tally = _Tally()
    for k in range(1, n // 2):
        a, b, c = row[k], row[k - 1], row[k + 1]
        tally.hit("quadratic-identity")
        g = B.quadratic_g(n, k)
        x1, x0 = next_row[k], a
        lhs = B.log_concavity_prefactor(n, k) * (a * a - b * c)
        if lhs != g.a * x1 * x1 + g.b * x1 * x0 + g.c * x0 * x0:
            tally.fail("quadratic-identity", (n, k))
        if n <= SMALL_ROWS:
            tally.hit("quadratic-small-rows")
            if a * a < b * c:
                tally.fail("quadratic-small-rows", (n, k))
    if n < N_START:
        return tally

    window = B.eval_window(n)
    threshold = B.r1_threshold(n)
    for k in range(1, n // 2 + 1):
        inside = B.in_window(n, k, window)
        delt = B.eval_delt(n, k)
        tally.hit("quadratic-discriminant-root")
        if (delt > 0) != (k >= threshold):
            tally.fail("quadratic-discriminant-root", (n, k, delt))
        if not inside:
            if B.eval_H1(n, k) < 0:
                tally.count("quadratic-L-above-l", "skipped_negative_H1")
            else:
                tally.hit("quadratic-L-above-l")
                if surd_compare(B.eval_l(n, k), B.eval_L(n, k)) > 0:
                    tally.fail("quadratic-L-above-l", (n, k))
        if k >= n // 2:
            continue
        tally.hit("quadratic-branches")
        if delt <= 0:
            tally.count("quadratic-branches", "discriminant_nonpositive")
            continue
        g = B.quadratic_g(n, k)
        x_lb: Fraction | QuadSurd
        if inside:
            x_lb = B.eval_l(n, k)
            tally.count("quadratic-branches", "l_bound")
        else:
            x_lb = B.eval_L(n, k)
            tally.count("quadratic-branches", "L_bound")
        if not g.nonneg_from(x_lb):
            tally.fail("quadratic-branches", (n, k, "g or g' negative at lower bound"))
        r = _ratio(row, next_row, k)
        below = surd_compare(x_lb, r) > 0 if isinstance(x_lb, QuadSurd) else x_lb > r
        if below:
            tally.fail("quadratic-branches", (n, k, "ratio below its lower bound"))
    return tally


def verify_theorem24(n_max: int = DEFAULT_N_MAX, table: JLTable | None = None) -> CertReport:
    """Identity tying the row to ``g``, the discriminant branch, the
    value-and-slope criterion at the applicable lower bound, the region
    split between ``L`` and ``l``, and direct products for rows ``n <= 18``."""
    t = _table(n_max + 1, table)
    cert = CertReport("verify_theorem24", {"n_max": n_max})
    regions = {
        "quadratic-identity": f"1 <= n <= {n_max}, 1 <= k < n//2",
        "quadratic-small-rows": f"n <= {min(n_max, SMALL_ROWS)}, 1 <= k < n//2",
        "quadratic-branches": f"{N_START} <= n <= {n_max}, 1 <= k < n//2",
        "quadratic-L-above-l": f"{N_START} <= n <= {n_max}, k <= k1 or k >= k2, H1 >= 0",
        "quadratic-discriminant-root": f"{N_START} <= n <= {n_max}, 1 <= k <= n//2",
    }
    reps = {cid: VerificationReport(cid, regions[cid]) for cid in _QUADRATIC_CHECKS}
    total = _Tally()
    with stopwatch(reps["quadratic-identity"]):
        for tally in pmap(_quadratic_row, [(n, t.row(n), t.row(n + 1)) for n in range(1, n_max + 1)]):
            total.merge(tally)
    for cid, rep in reps.items():
        total.fill(rep)
        rep.duration_ms = reps["quadratic-identity"].duration_ms
        if cid != "quadratic-small-rows":
            rep.notes.append(BOUNDED_NOTE)
        cert.add(rep)
    if n_max < N_START:
        cert.notes.append(f"n_max < {N_START}: only the direct small-row arithmetic applies")
    return cert


# ---------------------------------------------------------------------------
# keystone factorization


def verify_keystone() -> CertReport:
    """``delt = k n^2 (1+n)^2 p_n(k)`` and ``H1 = (1+n)^2 p_n(k)`` as polynomial
    identities, with numeric spot checks at ``n = 10``."""
    cert = CertReport("verify_keystone")
    ident = cert.add(VerificationReport("keystone-identity", "polynomials in n, k",
                                        method="symbolic-certificate"))
    with stopwatch(ident):
        for name, residual in (("delt", B.keystone_residual()), ("H1", B.h1_residual())):
            ident.points_checked += 1
            if not residual.is_zero():
                ident.violations.append((name, repr(residual)))
    spot = cert.add(VerificationReport("keystone-spot", "n = 10"))
    with stopwatch(spot):
        p10 = B.root_cubic(10)
        checks = {
            "delt(10,5) = 302500": B.eval_delt(10, 5) == 302500,
            "delt(10,5) = 5*10^2*11^2*p_10(5)": B.eval_delt(10, 5) == 5 * 100 * 121 * p10(5),
            "p_10(5) = 5": p10(5) == 5,
        }
        r1 = B.isolate_R1(10)
        checks["R1(10) in (4,5)"] = 4 < r1.lo and r1.hi < 5
        spot.info["R1(10)"] = str(r1)
        for name, ok in checks.items():
            spot.points_checked += 1
            if not ok:
                spot.violations.append(name)
    return cert


# ---------------------------------------------------------------------------
# cone certificates


@dataclass(frozen=True)
class ConeSystem:
    """``a0 D0 + a1 D1 + a2 D2 = 0`` together with the implication to certify.

    ``orientation = +1``: ``D1 > D0 > 0`` implies ``D2 > D1``;
    ``orientation = -1``: ``D1 < D0 < 0`` implies ``D2 < D1`` (the same
    statement for ``-D``). Coefficients are polynomials in ``k`` only
    (``univariate``) or in ``(n, k)`` on ``n = alpha k + beta + t``.
    """

    name: str
    coeffs: tuple[BiPoly, BiPoly, BiPoly]
    orientation: int
    univariate: bool
    alpha: int = 0
    beta: int = 0

    @property
    def region(self) -> str:
        if self.univariate:
            return "k >= 0"
        return f"n >= {self.alpha}k + {self.beta}, k >= 0"


CONE_SYSTEMS: dict[str, ConeSystem] = {
    "d": ConeSystem("d-system", (D0, D1, D2), +1, univariate=False, alpha=6, beta=4),
    "b": ConeSystem("b-system", (B0, B1, B2), +1, univariate=True),
    "c": ConeSystem("c-system", (C0, C1, C2), -1, univariate=True),
}


def cone_conditions(system: ConeSystem, lead_sign: int) -> list[tuple[str, BiPoly, bool]]:
    """Sign conditions, each as ``(label, P, strict)`` meaning ``P > 0`` or
    ``P >= 0`` on the region.

    Writing ``D1 = D0 + e`` with ``D0, e > 0`` gives
    ``a2 (D2 - D1) = -(a0+a1+a2) D0 - (a1+a2) e``, so with ``s = sign(a2)``
    fixed the implication holds iff ``s(a0+a1+a2) <= 0`` and ``s(a1+a2) <= 0``,
    not both zero. The orientation of the cone does not change this.
    """
    a0, a1, a2 = system.coeffs
    s = lead_sign
    return [
        ("sign(a2) = %+d" % s, a2 * s, True),
        ("s(a0+a1+a2) <= 0", -(a0 + a1 + a2) * s, False),
        ("s(a1+a2) <= 0", -(a1 + a2) * s, False),
    ]


def _certify(system: ConeSystem, P: BiPoly, strict: bool) -> CertResult:
    if P.is_zero():
        status = "inconclusive" if strict else "certified"
        return CertResult(status, "P >= 0" if not strict else "P > 0", "identically zero")
    if system.univariate:
        return univariate_positive_on_ray(P.to_unipoly(1), 0, 1, strict)
    return shift_expand_nonneg(P, system.alpha, system.beta, strict)


def _lattice(system: ConeSystem, k_max: int, n_max: int):
    if system.univariate:
        for k in range(k_max + 1):
            yield 0, k
    else:
        for n in range(system.beta, n_max + 1):
            for k in range(0, (n - system.beta) // system.alpha + 1):
                yield n, k


def cone_certificate(system: str | ConeSystem, k_max: int = DEFAULT_K_MAX,
                     n_max: int = DEFAULT_TABLE_N_MAX) -> CertReport:
    """Certify the implication of one linear system over its open cone.

    Each coefficient condition is tried symbolically (Sturm-on-ray in ``k``
    or shift-and-expand on ``n = alpha k + beta + t``). An inconclusive
    certificate falls back to an exact scan of the integer lattice
    (``k <= k_max``, or ``n <= n_max``) and the report says so.
    """
    sys_ = CONE_SYSTEMS[system] if isinstance(system, str) else system
    cert = CertReport("cone_certificate", {"system": sys_.name, "region": sys_.region})
    a2 = sys_.coeffs[2]
    # the sign of a2 is what the certificate must pin down; it is read off
    # the smallest lattice point and then proved constant
    probe = next(iter(_lattice(sys_, 0, sys_.beta)))
    lead = 1 if a2(*probe) > 0 else -1

    strict_seen: list[bool] = []
    for label, P, strict in cone_conditions(sys_, lead):
        rep = cert.add(VerificationReport(f"{sys_.name}: {label}", sys_.region,
                                          method="symbolic-certificate"))
        with stopwatch(rep):
            res = _certify(sys_, P, True)
            if res.certified:
                rep.points_checked = 1
                rep.info["witness"] = res.witness
                rep.info["strict"] = True
                strict_seen.append(True)
                continue
            if not strict:
                res = _certify(sys_, P, False)
                if res.certified:
                    rep.points_checked = 1
                    rep.info["witness"] = res.witness
                    rep.info["strict"] = False
                    strict_seen.append(False)
                    continue
            rep.method = "exact-pointwise (certificate fallback)"
            rep.info["inconclusive_certificate"] = res.witness
            zeros = 0
            for n, k in _lattice(sys_, k_max, n_max):
                rep.points_checked += 1
                v = P(n, k)
                if v < 0 or (strict and v == 0):
                    rep.violations.append((n, k) if not sys_.univariate else k)
                zeros += v == 0
            rep.info["strict"] = zeros == 0
            strict_seen.append(zeros == 0)
            rep.notes.append(BOUNDED_NOTE)
    if len(strict_seen) == 3:
        both = cert.add(VerificationReport(f"{sys_.name}: one sum strict", sys_.region,
                                           method="symbolic-certificate"))
        both.points_checked = 1
        if not (strict_seen[1] or strict_seen[2]):
            both.violations.append("both coefficient sums may vanish together")
    cert.notes.append(CONE_NOTE)
    return cert


def cone_certificates(k_max: int = DEFAULT_K_MAX, n_max: int = DEFAULT_TABLE_N_MAX) -> CertReport:
    cert = CertReport("cone_certificates", {"k_max": k_max, "n_max": n_max})
    for name in ("d", "b", "c"):
        cert.extend(cone_certificate(name, k_max, n_max))
    return cert


# ---------------------------------------------------------------------------
# full pipeline


def certify_all(
    n_max: int = DEFAULT_N_MAX,
    k_max: int = DEFAULT_K_MAX,
    table: JLTable | None = None,
    table_n_max: int | None = None,
    oracle_n_max: int = ORACLE_N_MAX,
    diagonal_k_max: int = DIAGONAL_K_MAX,
    recurrence_n_max: int | None = None,
) -> CertReport:
    """Every check in one report.

    ``n_max`` bounds the ratio-bound and quadratic scans; ``table_n_max``
    (default 500, or ``n_max + 2`` for small runs) bounds the table-level
    scans. A supplied ``table`` is used as is and cross-checked against
    every build engine, so a corrupted entry surfaces as a violation.
    """
    if table_n_max is None:
        table_n_max = max(DEFAULT_TABLE_N_MAX, n_max + 2) if n_max >= N_START else n_max + 2
    if table is None:
        table = build_table(table_n_max, "closed_form")
        engines = cross_check_engines(table_n_max, reference=table)
    else:
        table_n_max = table.n_max
        engines = cross_check_engines(table.n_max, reference=table)
    if table.n_max < n_max + 2:
        raise DomainError(f"table n_max={table.n_max} too small for n_max={n_max}")
    rec_n = min(n_max if recurrence_n_max is None else recurrence_n_max, table.n_max - 2)
    diag_k = min(diagonal_k_max, (table.n_max - 5) // 6)
    # A(k+2) needs row 6k+16; short tables get a freshly built one for the
    # diagonal relations, which never hides a fault since the engines are
    # cross-checked against the supplied table above
    seq_k = min(k_max, (table.n_max - 16) // 6)
    seq_table = table if seq_k >= 0 else None
    seq_k = max(seq_k, 0)

    cert = CertReport("certify_all", {
        "n_max": n_max, "k_max": k_max, "table_n_max": table_n_max,
        "oracle_n_max": oracle_n_max, "diagonal_k_max": diag_k, "recurrence_n_max": rec_n,
        "recurrence_k_max": seq_k,
    })
    cert.add(engines)
    cert.add(cross_check_oracle(min(oracle_n_max, n_max)))
    for ident in TABLE_IDENTITIES:
        cert.add(scan_identity(ident, n_max=rec_n, table=table))
    for ident in SEQUENCE_IDENTITIES:
        cert.add(scan_identity(ident, k_max=seq_k, table=seq_table))
    cert.add(chaining_report())
    cert.add(scan_boundary(table))
    cert.add(scan_log_concavity(table))
    cert.add(scan_mode(table))
    cert.add(scan_delta_signs(table))
    cert.add(scan_delta_identity(table, min(table.n_max - 1, 200)))
    if diag_k >= 1:
        cert.add(scan_diagonals(table, diag_k))
    cert.add(scan_phi_base(table))
    cert.extend(verify_lemma22(n_max, table))
    cert.extend(verify_lemma23(n_max, table))
    cert.extend(verify_theorem24(n_max, table))
    cert.extend(verify_keystone())
    cert.extend(cone_certificates(k_max, table_n_max))
    cert.notes.append(BOUNDED_NOTE)
    cert.notes.append("Phi(6k+4,k) > 0 is audited on the table only; it is the unproved base "
                      "case of the column induction")
    strict = cert.get("delta-signs").info.get("strict_everywhere")
    cert.notes.append(f"Delta strictly nonzero on every scanned point: {strict}")
    return cert
