"""Brute-force ground truth for the triangle: circular ternary strings.

``JL(n, k)`` counts strings in {0,1,2}^n with exactly ``k`` 2s and no two
cyclically adjacent symbols both in {1, 2}. "Adjacent" means neighbouring
positions, with the last position next to the first; for ``n = 1`` the
single symbol is its own neighbour, which leaves only ``"0"`` and matches
``JL(1, 0) = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .report import VerificationReport, stopwatch
from .triangle import jl_closed_form

DEFAULT_CAP = 18


class ResourceLimitError(RuntimeError):
    """Enumeration requested beyond the configured length cap."""


@dataclass(frozen=True)
class CyclicStringSpec:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"string length must be >= 1, got {self.n}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k = {self.k}")


@lru_cache(maxsize=None)
def _counts(n: int, prune: bool) -> tuple[int, ...]:
    return tuple(kernels.cyclic_two_counts(n, prune))


def cyclic_counts(n: int, cap: int = DEFAULT_CAP, prune: bool = True) -> tuple[int, ...]:
    """Counts for every ``k = 0..n`` from one enumeration pass."""
    if n > cap:
        raise ResourceLimitError(f"n = {n} exceeds enumeration cap {cap} (3^n strings)")
    CyclicStringSpec(n, 0)
    return _counts(n, prune)


def count_cyclic_strings(n: int, k: int, cap: int = DEFAULT_CAP, prune: bool = True) -> int:
    spec = CyclicStringSpec(n, k)
    return cyclic_counts(spec.n, cap, prune)[spec.k]


def cross_check_oracle(n_max: int, cap: int = DEFAULT_CAP, prune: bool = True) -> VerificationReport:
    """Enumeration equals the closed form for ``1 <= n <= n_max``, ``0 <= k <= n``
    (zero beyond ``n // 2``)."""
    rep = VerificationReport("oracle-equivalence", f"1 <= n <= {n_max}, 0 <= k <= n",
                             method=f"enumeration ({kernels.BACKEND})")
    triangle_entries = 0
    with stopwatch(rep):
        for n in range(1, n_max + 1):
            counts = cyclic_counts(n, cap, prune)
            for k in range(n + 1):
                rep.points_checked += 1
                triangle_entries += k <= n // 2
                expected = jl_closed_form(n, k)
                if counts[k] != expected:
                    rep.violations.append((n, k, counts[k], expected))
        rep.info["triangle_entries"] = triangle_entries
        rep.info["zero_extension_entries"] = rep.points_checked - triangle_entries
        rep.info["backend"] = kernels.BACKEND
        rep.info["pruned"] = prune
    return rep
