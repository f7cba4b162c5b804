"""Compare the compiled and pure-Python sweep kernels.

    python3 benchmarks/bench_sweep.py --n 8 --repeat 3
"""

import argparse
import time

import numpy as np

from fibword import _pykernels
from fibword.trees import tree_count

try:
    from fibword import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    total = tree_count(args.n)
    t_py, rows_py = best_of(lambda: _pykernels.tree_stats(args.n, 0, total), args.repeat)
    print(f"n={args.n}: {total} trees")
    print(f"  python  {t_py:8.3f} s  {total / t_py:12.0f} trees/s")
    if _ckernels is None:
        print("  cython  not built")
        return
    t_c, rows_c = best_of(lambda: _ckernels.tree_stats(args.n, 0, total), args.repeat)
    print(f"  cython  {t_c:8.3f} s  {total / t_c:12.0f} trees/s")
    print(f"  speedup {t_py / t_c:8.1f}x, identical rows: {np.array_equal(rows_py, rows_c)}")


if __name__ == "__main__":
    main()
