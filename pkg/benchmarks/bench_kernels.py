"""Compare the numba and pure-numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N]

Kernel timings call both backends in-process on the S5 and S6 tables.  The
lattice timing runs a fresh interpreter per backend (the backend is fixed at
import time by SUPERSOLV_NO_NUMBA), so it includes the numba compile cost.
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from supersolv import catalog, kernels
from supersolv.subgroups import all_subgroups

LATTICE_SNIPPET = (
    "import time;from supersolv import catalog, kernels;"
    "from supersolv.subgroups import all_subgroups;"
    "G=catalog.symmetric({n});t=time.perf_counter();L=all_subgroups(G);"
    "print(kernels.BACKEND, len(L.subgroups), time.perf_counter()-t)"
)


def best_of(fn, repeat):
    fn()  # warmup, also triggers JIT compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def kernel_cases(G):
    table, inv = G.table, G.inv
    lat = all_subgroups(G)
    big = max((S for S in lat.subgroups if not S.is_whole()), key=lambda S: S.order)
    small = [S for S in lat.subgroups if 1 < S.order <= 6]
    X, Y = small[len(small) // 3], small[-1]
    us = np.arange(G.order, dtype=np.int64)
    gens = np.asarray(G.whole.gen_indices, dtype=np.int64)
    cgens = np.arange(1, G.order, dtype=np.int64)
    return {
        "closure": lambda b: b.closure(table, gens),
        "extend_by_cyclics": lambda b: b.extend_by_cyclics(
            table, np.asarray(big.gen_indices, dtype=np.int64), big.mask, cgens
        ),
        "tcc_witness": lambda b: b.tcc_witness(table, inv, X.members, Y.members, us),
        "element_orders": lambda b: b.element_orders(table),
    }


def lattice_time(n, no_numba):
    env = dict(os.environ)
    env.pop("SUPERSOLV_NO_NUMBA", None)
    if no_numba:
        env["SUPERSOLV_NO_NUMBA"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", LATTICE_SNIPPET.format(n=n)], env=env, capture_output=True, text=True, check=True
    )
    backend, count, secs = out.stdout.split()
    return backend, int(count), float(secs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--lattice-degree", type=int, default=5)
    args = ap.parse_args()
    if kernels.numba_backend is None:
        sys.exit("numba is not importable; nothing to compare")

    print(f"{'group':6} {'kernel':20} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for name, G in (("S5", catalog.symmetric(5)), ("S6", catalog.symmetric(6))):
        for kname, fn in kernel_cases(G).items():
            t_np = best_of(lambda: fn(kernels.numpy_backend), args.repeat)
            t_nb = best_of(lambda: fn(kernels.numba_backend), args.repeat)
            print(f"{name:6} {kname:20} {t_np * 1e3:10.3f} {t_nb * 1e3:10.3f} {t_np / t_nb:8.1f}x")

    n = args.lattice_degree
    for no_numba in (True, False):
        backend, count, secs = lattice_time(n, no_numba)
        print(f"lattice S{n}: backend={backend} subgroups={count} {secs:.2f}s")


if __name__ == "__main__":
    main()
