from fractions import Fraction

import pytest

from jlcert import parallel
from jlcert.bounds import eval_L
from jlcert.certifier import (
    CONE_SYSTEMS,
    ConeSystem,
    certify_all,
    cone_certificate,
    cone_conditions,
    verify_keystone,
    verify_lemma22,
    verify_lemma23,
    verify_theorem24,
)
from jlcert.polynomials import BiPoly, K
from jlcert.report import BOUNDED_NOTE, Status
from jlcert.triangle import build_table


def test_rational_lower_bound_small_range():
    cert = verify_lemma22(60)
    assert cert.status is Status.VERIFIED
    t = build_table(12)
    assert eval_L(10, 2) == Fraction(44, 35) <= t.ratio(10, 2) == Fraction(143, 71)
    assert 44 * 71 < 35 * 143
    assert t.ratio(2, 1) == Fraction(3, 2) == eval_L(2, 1)
    assert cert.get("ratio-L-shift-structure").method == "symbolic-certificate"


def test_window_first_row():
    cert = verify_lemma23(19)
    assert cert.status is Status.VERIFIED
    for cid in ("ratio-window-lower", "ratio-window-upper", "ratio-window-step", "ratio-window-G-agreement"):
        assert cert.get(cid).points_checked == 1
    assert cert.get("ratio-window-base").points_checked == 1  # k = 8 only


def test_window_below_region_is_vacuous():
    cert = verify_lemma23(18)
    assert cert.status is Status.VERIFIED
    assert all(c.points_checked == 0 for c in cert.checks)
    assert any("vacuous" in n for c in cert.checks for n in c.notes)


def test_window_reports_bounded_scope():
    cert = verify_lemma23(40)
    assert cert.status is Status.VERIFIED
    assert not any(c.undecided for c in cert.checks)
    assert BOUNDED_NOTE in cert.get("ratio-window-upper").notes


def test_window_detects_corrupted_ratio():
    t = build_table(30)
    bad = t.with_entry(20, 8, t(20, 8) * 2)  # pushes ratio(19,8) above h(19,8)
    cert = verify_lemma23(19, bad)
    assert cert.get("ratio-window-upper").status is Status.VIOLATION
    assert cert.get("ratio-window-upper").violations == [(19, 8)]


def test_quadratic_branches():
    cert = verify_theorem24(40)
    assert cert.status is Status.VERIFIED
    info = cert.get("quadratic-branches").info
    assert info["l_bound"] > 0 and info["L_bound"] > 0 and info["discriminant_nonpositive"] > 0
    assert cert.get("quadratic-small-rows").points_checked == sum(max(n // 2 - 1, 0) for n in range(1, 19))


def test_quadratic_detects_fault():
    t = build_table(40).with_entry(10, 2, 356)
    cert = verify_theorem24(30, t)
    assert cert.get("quadratic-identity").status is Status.VIOLATION
    assert (10, 2) in cert.get("quadratic-identity").violations


def test_keystone():
    cert = verify_keystone()
    assert cert.status is Status.VERIFIED
    assert cert.get("keystone-identity").method == "symbolic-certificate"


@pytest.mark.parametrize("name", ["d", "b", "c"])
def test_cone_certificates_are_symbolic(name):
    cert = cone_certificate(name)
    assert cert.status is Status.VERIFIED
    assert all(c.method == "symbolic-certificate" for c in cert.checks)
    assert len(cert.checks) == 4


def test_d_system_sign_from_factored_form():
    cert = cone_certificate("d")
    assert cert.checks[0].id == "d-system: sign(a2) = -1"
    assert "constant term 90" in cert.checks[0].info["witness"]


def test_cone_conditions_match_hand_derivation():
    sys_ = CONE_SYSTEMS["b"]
    a0, a1, a2 = sys_.coeffs
    labels = [c[0] for c in cone_conditions(sys_, 1)]
    assert labels == ["sign(a2) = +1", "s(a0+a1+a2) <= 0", "s(a1+a2) <= 0"]
    assert (a0 + a1 + a2)(0, 0) < 0


def test_cone_fallback_to_lattice():
    # (2k-1)^2 vanishes at k = 1/2, so Sturm-on-ray is inconclusive while
    # every integer k >= 0 gives a positive value
    a2 = (2 * K - 1) ** 2
    sys_ = ConeSystem("toy", (BiPoly.const(-1), -a2, a2), +1, univariate=True)
    cert = cone_certificate(sys_, k_max=40)
    first = cert.checks[0]
    assert first.method.endswith("(certificate fallback)")
    assert first.points_checked == 41
    assert cert.status is Status.VERIFIED


def test_cone_fallback_finds_violation():
    a2 = BiPoly.const(1) - K  # positive at k = 0, negative from k = 2
    sys_ = ConeSystem("bad", (BiPoly.const(-1), -a2, a2), +1, univariate=True)
    cert = cone_certificate(sys_, k_max=5)
    assert cert.status is Status.VIOLATION
    assert cert.checks[0].violations[:2] == [1, 2]


def test_certify_all_small_rows_only():
    cert = certify_all(n_max=18)
    assert cert.status is Status.VERIFIED, cert.summary()
    assert cert.parameters["table_n_max"] == 20


def test_certify_all_mutation_located():
    t = build_table(40).with_entry(10, 2, 356)
    cert = certify_all(n_max=30, table=t)
    assert cert.status is Status.VIOLATION
    eng = cert.get("engine-equivalence")
    assert ("supplied", 10, 2, 356, 355) in eng.violations
    doc = cert.to_document()
    assert doc["status"] == "violation"


def _square(x):
    return x * x


def test_pmap_parallel_and_serial_agree(monkeypatch):
    tasks = [(i,) for i in range(20)]
    serial = parallel.pmap(_square, tasks)
    monkeypatch.setattr(parallel, "worker_count", lambda: 2)
    assert parallel.pmap(_square, tasks) == serial == [i * i for i in range(20)]


def test_thread_env_validation(monkeypatch):
    monkeypatch.setenv(parallel.ENV_VAR, "0")
    with pytest.raises(ValueError):
        parallel.worker_count()
    monkeypatch.setenv(parallel.ENV_VAR, "1")
    assert parallel.worker_count() == 1
