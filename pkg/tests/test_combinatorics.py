import subprocess
import sys
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jlcert import _kernels_py, kernels
from jlcert.combinatorics import (
    CyclicStringSpec,
    ResourceLimitError,
    count_cyclic_strings,
    cross_check_oracle,
    cyclic_counts,
)
from jlcert.triangle import jl_closed_form

try:
    from jlcert import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = [pytest.param(_kernels_py, id="python")]
BACKENDS.append(pytest.param(_compiled, id="cython", marks=pytest.mark.skipif(
    _compiled is None, reason="compiled extension not built")))

BAD = {1, 2}


def valid(s) -> bool:
    n = len(s)
    return all(not (s[i] in BAD and s[(i + 1) % n] in BAD) for i in range(n))


def brute(n: int) -> set[tuple[int, ...]]:
    return {s for s in product(range(3), repeat=n) if valid(s)}


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("prune", [True, False])
def test_backend_matches_closed_form(backend, prune):
    for n in range(1, 11):
        counts = backend.cyclic_two_counts(n, prune)
        assert counts == [jl_closed_form(n, k) for k in range(n + 1)]


def test_backends_identical():
    if _compiled is None:
        pytest.skip("compiled extension not built")
    for n in range(1, 13):
        assert list(_compiled.cyclic_two_counts(n, True)) == _kernels_py.cyclic_two_counts(n, True)


def test_n1_self_adjacency():
    # the single symbol neighbours itself, so only "0" survives
    assert cyclic_counts(1) == (1, 0)
    assert brute(1) == {(0,)}


def test_small_counts_by_hand():
    assert cyclic_counts(2) == (3, 2, 0)
    assert cyclic_counts(4) == (7, 8, 2, 0, 0)


@given(st.integers(min_value=1, max_value=8))
def test_valid_set_closed_under_rotation_and_reversal(n):
    strings = brute(n)
    for s in strings:
        assert s[1:] + s[:1] in strings
        assert s[::-1] in strings
    hist = [0] * (n + 1)
    for s in strings:
        hist[s.count(2)] += 1
    assert tuple(hist) == cyclic_counts(n)


@given(st.integers(min_value=1, max_value=8))
def test_swapping_one_and_two_preserves_validity(n):
    # the constraint treats 1 and 2 alike
    strings = brute(n)
    swapped = {tuple({1: 2, 2: 1}.get(c, c) for c in s) for s in strings}
    assert swapped == strings


def test_cap_and_spec_validation():
    with pytest.raises(ResourceLimitError):
        cyclic_counts(19)
    with pytest.raises(ValueError):
        CyclicStringSpec(0, 0)
    with pytest.raises(ValueError):
        CyclicStringSpec(3, 4)
    with pytest.raises(ValueError):
        kernels.cyclic_two_counts(kernels.MAX_N + 1)
    assert count_cyclic_strings(10, 2) == 355


def test_cross_check_oracle_report():
    rep = cross_check_oracle(10)
    assert rep.ok
    assert rep.points_checked == sum(n + 1 for n in range(1, 11))
    assert rep.info["triangle_entries"] == sum(n // 2 + 1 for n in range(1, 11))
    assert rep.info["backend"] == kernels.BACKEND


def test_pure_python_fallback_selected_by_env():
    code = "from jlcert import kernels; print(kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"JLCERT_PURE_PYTHON": "1", "PATH": ""}, check=True)
    assert out.stdout.strip() == "python"
