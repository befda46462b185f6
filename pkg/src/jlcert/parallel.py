"""Order-preserving map over independent lattice tasks.

``JLCERT_THREADS`` caps the number of worker processes; unset means one per
CPU. With a single worker (or a handful of tasks) everything runs in-process.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, TypeVar

T = TypeVar("T")
R = TypeVar("R")

ENV_VAR = "JLCERT_THREADS"


def worker_count() -> int:
    raw = os.environ.get(ENV_VAR, "").strip()
    cpus = os.cpu_count() or 1
    if not raw:
        return cpus
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{ENV_VAR} must be a positive integer, got {raw!r}")
    return min(cap, cpus)


def pmap(fn: Callable[..., R], tasks: Iterable[tuple], min_tasks: int = 8) -> list[R]:
    """``[fn(*t) for t in tasks]``, spread over worker processes when useful."""
    tasks = list(tasks)
    workers = worker_count()
    if workers <= 1 or len(tasks) < min_tasks:
        return [fn(*t) for t in tasks]
    chunk = max(1, len(tasks) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, *zip(*tasks), chunksize=chunk))
