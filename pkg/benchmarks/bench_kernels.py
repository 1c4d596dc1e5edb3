#!/usr/bin/env python3
"""Benchmark the compiled GF(q) kernels against the numpy fallback.

Micro-benchmarks the primitive matrix ops and two realistic workloads
(an orbit scan and a Hall-number subspace walk) under each backend.
The workload benchmarks swap the backend at runtime, which works
because all call sites look the functions up on hallq.kernels.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hallq import kernels
from hallq.gf import GF
from hallq.kernels import _pykern

try:
    from hallq.kernels import _ckern
except ImportError:
    _ckern = None


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def micro_benchmarks(repeat):
    rng = np.random.default_rng(0)
    cases = []
    for q, n in [(2, 4), (2, 12), (3, 6), (4, 6), (9, 8)]:
        gf = GF(q)
        A = rng.integers(0, q, (n, n)).astype(np.uint8)
        B = rng.integers(0, q, (n, n)).astype(np.uint8)
        cases.append((f"mat_mul {n}x{n} q={q}", lambda i, gf=gf, A=A, B=B: i.mat_mul(gf, A, B)))
        cases.append((f"rref {n}x{n} q={q}", lambda i, gf=gf, A=A: i.rref(gf, A)))
        cases.append(
            (f"nullspace {n}x{n} q={q}", lambda i, gf=gf, A=A: i.right_nullspace(gf, A))
        )
    rows = []
    for label, call in cases:
        n_inner = 200
        t_py = timed(lambda: [call(_pykern) for _ in range(n_inner)], repeat) / n_inner
        if _ckern is not None:
            t_c = timed(lambda: [call(_ckern) for _ in range(n_inner)], repeat) / n_inner
        else:
            t_c = float("nan")
        rows.append((label, t_py, t_c))
    return rows


def _swap_backend(impl):
    for name in ("mat_mul", "rref", "rank", "right_nullspace", "solve", "inverse"):
        setattr(kernels, name, getattr(impl, name))


def workload_benchmarks(repeat):
    from hallq import GF as GF_, HallAlgebra, ModuleCatalog, Quiver
    from hallq.reps import scan_isoclasses

    kr = Quiver(["1", "2"], [["a", "1", "2"], ["b", "1", "2"]])
    a21 = Quiver(["1", "2", "3"], [["a", "1", "2"], ["b", "2", "3"], ["c", "1", "3"]])

    def orbit_scan():
        scan_isoclasses(kr, GF_(3), kr.dim((2, 2)))

    def hall_table():
        alg = HallAlgebra(ModuleCatalog(a21, GF_(2)))
        e1, e2, e3 = alg.e_delta_components(1)
        alg.product(e1, e3)

    rows = []
    for label, fn in [("orbit scan KR (2,2) q=3", orbit_scan), ("E-component product A~21 q=2", hall_table)]:
        _swap_backend(_pykern)
        t_py = timed(fn, repeat)
        if _ckern is not None:
            _swap_backend(_ckern)
            t_c = timed(fn, repeat)
        else:
            t_c = float("nan")
        rows.append((label, t_py, t_c))
    _swap_backend(_ckern if _ckern is not None else _pykern)
    return rows


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"compiled backend available: {_ckern is not None}")
    print(f"{'operation':36} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for label, t_py, t_c in micro_benchmarks(args.repeat) + workload_benchmarks(args.repeat):
        speed = t_py / t_c if t_c == t_c and t_c > 0 else float("nan")
        print(f"{label:36} {t_py * 1e6:10.1f}us {t_c * 1e6:10.1f}us {speed:8.1f}x")


if __name__ == "__main__":
    main()
