"""
Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--sizes 8 10 12] [--repeat 3]

Compilation is excluded: each numba kernel runs once on a tiny input first.
"""

import argparse
import timeit

import numpy as np

from qcat import _kernels

KERNELS = {
    "av321_array": lambda b, n: _kernels.av321_array(n, b),
    "perm_stats": lambda b, n, _cache={}: _kernels.perm_stats(
        _cache.setdefault(n, _kernels.av321_array(n)), b),
    "dyck_array": lambda b, n: _kernels.dyck_array(n, b),
    "dyck_stats": lambda b, n, _cache={}: _kernels.dyck_stats(
        _cache.setdefault(n, _kernels.dyck_array(n)), b),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 10, 12])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = {name: _kernels.load_backend(name) for name in _kernels.BACKENDS}
    for fn in KERNELS.values():
        fn(backends["numba"], 3)

    print(f"{'kernel':<12} {'n':>3} {'rows':>8} {'numba ms':>10} {'numpy ms':>10} {'speedup':>8}")
    for kname, fn in KERNELS.items():
        for n in args.sizes:
            ref = fn(backends["numpy"], n)
            assert np.array_equal(ref, fn(backends["numba"], n)), f"{kname} backends disagree at n={n}"
            ms = {b: 1e3 * min(timeit.repeat(lambda: fn(mod, n), number=1, repeat=args.repeat))
                  for b, mod in backends.items()}
            print(f"{kname:<12} {n:>3} {ref.shape[0]:>8} {ms['numba']:>10.2f} {ms['numpy']:>10.2f} "
                  f"{ms['numpy'] / ms['numba']:>7.1f}x")


if __name__ == "__main__":
    main()
