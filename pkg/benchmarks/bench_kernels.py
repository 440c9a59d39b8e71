"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from quantgraph import _pykernels, kernels
from quantgraph.spectral import figure_eight_problem, find_eigenvalues

try:
    from quantgraph import _ckernels
except ImportError:
    _ckernels = None


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the numpy backend is available")
        return

    p = figure_eight_problem(0.9, 1.0, 1.7)
    rng = np.random.default_rng(0)
    print(f"{'kernel':<26}{'batch':>8}{'numpy [ms]':>13}{'cython [ms]':>13}{'speedup':>9}")
    for nk in (64, 1024, 8192):
        ks = np.ascontiguousarray(rng.uniform(0, 40, nk))
        call = (ks, np.ascontiguousarray(p._half), np.ascontiguousarray(p._cv), np.ascontiguousarray(p._cd), False)
        tp = best(lambda: _pykernels.assemble(*call), args.repeat)
        tc = best(lambda: _ckernels.assemble(*call), args.repeat)
        print(f"{'assemble (4x4)':<26}{nk:>8}{1e3 * tp:>13.3f}{1e3 * tc:>13.3f}{tp / tc:>9.1f}")
    for n, nb in ((4, 8192), (8, 8192)):
        mats = np.ascontiguousarray(rng.normal(size=(nb, n, n)) + 1j * rng.normal(size=(nb, n, n)))
        tp = best(lambda: _pykernels.det(mats), args.repeat)
        tc = best(lambda: _ckernels.det(mats), args.repeat)
        print(f"{f'det ({n}x{n})':<26}{nb:>8}{1e3 * tp:>13.3f}{1e3 * tc:>13.3f}{tp / tc:>9.1f}")

    timings = {}
    for name, impl in (("numpy", _pykernels), ("cython", _ckernels)):
        kernels._impl = impl
        timings[name] = best(lambda: find_eigenvalues(p, 0.0, 60.0), args.repeat)
    kernels._impl = _ckernels if kernels.BACKEND == "cython" else _pykernels
    tp, tc = timings["numpy"], timings["cython"]
    print(f"{'find_eigenvalues (0, 60]':<26}{'':>8}{1e3 * tp:>13.3f}{1e3 * tc:>13.3f}{tp / tc:>9.1f}")


if __name__ == "__main__":
    main()
