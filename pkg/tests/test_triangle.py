from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jlcert.exactnum import DomainError
from jlcert.triangle import (
    ENGINES,
    build_table,
    cross_check_engines,
    delta_direct,
    jl_closed_form,
    mode_formula,
    row_argmax,
    scan_boundary,
    scan_delta_signs,
    scan_diagonals,
    scan_log_concavity,
    scan_mode,
    scan_phi_base,
    table_from_rows,
)

# Values below were produced by an independent sympy evaluation of the binomial sum.
SYMPY_JL = {
    (40, 10): 56360372640,
    (100, 20): 89953394950332561335325058190,
}
SYMPY_A = [1, 15, 504, 20669, 939120]
SYMPY_B = [-1, -18, -630, -26306, -1207440]


@pytest.mark.parametrize("engine", ENGINES)
def test_reference_rows_every_engine(engine, reference_rows):
    t = build_table(18, engine)
    assert [list(t.row(n)) for n in range(1, 19)] == reference_rows
    assert len(t.flatten()) == 99


def test_closed_form_against_sympy():
    for (n, k), v in SYMPY_JL.items():
        assert jl_closed_form(n, k) == v
    assert build_table(100)(100, 20) == SYMPY_JL[(100, 20)]


def test_zero_extension_and_domain():
    t = build_table(10)
    assert t(10, 6) == 0 and t(10, -1) == 0 and jl_closed_form(7, 4) == 0
    with pytest.raises(IndexError):
        t(11, 0)
    with pytest.raises(DomainError):
        jl_closed_form(0, 0)
    with pytest.raises(ValueError):
        build_table(5, "magic")


def test_boundary_values(table60):
    for k in range(1, 30):
        assert table60(2 * k, k) == 2
        assert table60(2 * k + 1, k) == 2 * k + 1
        assert table60.ratio(2 * k, k) == Fraction(2 * k + 1, 2)
    assert scan_boundary(table60).ok


def test_lucas_column(table60):
    a, b = 2, 1
    for n in range(1, 61):
        assert table60(n, 0) == b
        a, b = b, a + b


@given(st.integers(min_value=1, max_value=90))
def test_engines_agree_on_random_rows(n):
    rows = {e: build_table(n, e).row(n) for e in ENGINES}
    assert len(set(rows.values())) == 1


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=-2, max_value=32))
def test_delta_direct_matches_differences(n, k):
    assert delta_direct(n, k) == jl_closed_form(n, k + 1) - jl_closed_form(n, k)


def test_diagonals_match_sympy():
    t = build_table(6 * 4 + 5)
    assert [t.A(j) for j in range(5)] == SYMPY_A
    assert [t.B(j) for j in range(5)] == SYMPY_B
    assert scan_diagonals(t, 4).ok


def test_mode_spot_values():
    t = build_table(18)
    for n, k_star, peak in ((10, 2, 355), (17, 3, 37774), (18, 3, 74838)):
        m = row_argmax(t, n)
        assert (m.k_star, m.value, m.unique, m.agrees) == (k_star, peak, True, True)


@given(st.integers(min_value=1, max_value=10**6))
def test_mode_formula_floor(n):
    assert mode_formula(n) == (n - 4) // 6 + 1
    assert mode_formula(n) >= 0


def test_row_scans(table60):
    for scan in (scan_log_concavity, scan_mode, scan_delta_signs, scan_phi_base):
        rep = scan(table60)
        assert rep.ok, rep.summary()
    assert scan_log_concavity(table60).info["all_strict"]
    assert scan_delta_signs(table60).info["strict_everywhere"]


def test_mode_small_rows_are_informational():
    rep = scan_mode(build_table(10), n_max=3)
    assert rep.ok and rep.points_checked == 0 and rep.notes
    assert len(rep.info["below_theorem_range"]) == 3


def test_fault_injection_is_located(table60):
    bad = table60.with_entry(10, 2, 356)
    assert bad(10, 2) == 356 and table60(10, 2) == 355
    rep = cross_check_engines(20, reference=table_from_rows([bad.row(n) for n in range(1, 21)]))
    assert not rep.ok
    assert any(v[1:3] == (10, 2) for v in rep.violations if isinstance(v, tuple))


def test_log_concavity_scan_catches_fault(table60):
    bad = table60.with_entry(10, 3, 10)
    rep = scan_log_concavity(bad)
    assert not rep.ok
