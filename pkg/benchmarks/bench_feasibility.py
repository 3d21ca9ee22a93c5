"""Compare the compiled and pure feasibility kernels on the same workloads.

Usage: python benchmarks/bench_feasibility.py [--trials N] [--seed S]

Workloads: batches of random strict systems at several shapes, plus two
end-to-end enumerations (the coned six-line arrangement's full filtration
and a generic 8-plane chamber enumeration) timed once per kernel by forcing
the pure fallback in a subprocess.
"""

import argparse
import random

import subprocess
import sys
import time

from hyparr import _fmpure

try:
    from hyparr import _fmcore
except ImportError:
    _fmcore = None


def make_batch(rng, count, dim_range, rows_range, bound):
    batch = []
    while len(batch) < count:
        d = rng.randint(*dim_range)
        m = rng.randint(*rows_range)
        rows = tuple(r for r in (tuple(rng.randint(-bound, bound) for _ in range(d))
                                 for _ in range(m)) if any(r))
        if rows:
            batch.append((rows, d))
    return batch


def time_kernel(solve, batch, repeats=3):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        for rows, d in batch:
            solve(rows, d)
        dt = time.perf_counter() - t0
        best = dt if best is None or dt < best else best
    return best


def bench_kernels(trials, seed):
    rng = random.Random(seed)
    shapes = [
        ("dim<=3, rows<=6, |c|<=3", (1, 3), (1, 6), 3),
        ("dim<=4, rows<=8, |c|<=3", (1, 4), (1, 8), 3),
        ("dim<=5, rows<=10, |c|<=5", (2, 5), (2, 10), 5),
    ]
    print(f"{'workload':34} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, dims, rows, bound in shapes:
        batch = make_batch(rng, trials, dims, rows, bound)
        t_pure = time_kernel(_fmpure.solve, batch)
        if _fmcore is None:
            print(f"{name:34} {t_pure:9.3f}s {'n/a':>10} {'':>8}")
            continue
        t_comp = time_kernel(_fmcore.solve, batch)
        print(f"{name:34} {t_pure:9.3f}s {t_comp:9.3f}s {t_pure / t_comp:7.1f}x")


def bench_end_to_end():
    code = (
        "import time\n"
        "from hyparr import catalog\n"
        "from hyparr.consistency import sigma_filtration\n"
        "from hyparr.chambers import enumerate_chambers\n"
        "from hyparr.feasibility import kernel_name\n"
        "t0 = time.perf_counter()\n"
        "sigma_filtration(catalog.x2_coned())\n"
        "t1 = time.perf_counter()\n"
        "enumerate_chambers(catalog.generic(8, 4, 3))\n"
        "t2 = time.perf_counter()\n"
        "print(f'{kernel_name()} {t1 - t0:.3f} {t2 - t1:.3f}')\n"
    )
    print(f"\n{'end-to-end (one run)':34} {'cx2 filtration':>16} {'8-plane chambers':>18}")
    for env_extra in ({}, {"HYPARR_PURE": "1"}):
        import os

        env = dict(os.environ)
        env.update(env_extra)
        out = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True).stdout.split()
        print(f"{out[0]:34} {float(out[1]):15.3f}s {float(out[2]):17.3f}s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=4000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    if _fmcore is None:
        print("compiled kernel not built; timing the pure kernel only")
    bench_kernels(args.trials, args.seed)
    bench_end_to_end()


if __name__ == "__main__":
    main()
