"""Compiled vs pure-Python enumeration kernel.

    python3 benchmarks/bench_kernels.py [--n 8 10 12] [--repeat 3]

Both backends must return identical histograms; the script stops if they
differ. ``raw`` enumerates all 3^n strings, ``pruned`` cuts prefixes that
already contain a forbidden adjacent pair.
"""

import argparse
import statistics
import time

from jlcert import _kernels_py

try:
    from jlcert import _kernels as _compiled
except ImportError:
    _compiled = None


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[8, 10, 12])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if _compiled is None:
        print("compiled extension not built; only the Python kernel is timed")
    print(f"{'n':>3} {'mode':>7} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for n in args.n:
        for prune in (False, True):
            py_best, _, py_out = best_of(lambda: _kernels_py.cyclic_two_counts(n, prune), args.repeat)
            if _compiled is None:
                print(f"{n:>3} {'pruned' if prune else 'raw':>7} {py_best:>10.4f} {'-':>10} {'-':>8}")
                continue
            cy_best, _, cy_out = best_of(lambda: _compiled.cyclic_two_counts(n, prune), args.repeat)
            if list(py_out) != list(cy_out):
                raise SystemExit(f"backends disagree at n={n}, prune={prune}")
            speed = py_best / cy_best if cy_best > 0 else float("inf")
            print(f"{n:>3} {'pruned' if prune else 'raw':>7} {py_best:>10.4f} {cy_best:>10.4f} {speed:>7.1f}x")


if __name__ == "__main__":
    main()
