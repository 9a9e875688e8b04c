#!/usr/bin/env python3
"""Benchmark: compiled Cython kernels vs the NumPy fallback.

Times the two hot loops (cyclic Jacobi eigendecomposition and batch
replicator dynamics) on matched workloads and prints a comparison table,
verifying along the way that both backends agree numerically.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import importlib.util
import sys
import time

import numpy as np

from turanlocal import _kernels_py
from turanlocal.spectral import MAX_SWEEPS, SWEEP_TOL

HAVE_COMPILED = importlib.util.find_spec("turanlocal._kernels") is not None
if HAVE_COMPILED:
    from turanlocal import _kernels


def timeit(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def jacobi_workload(n, seed):
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(n, n))
    return (m + m.T) / 2


def replicator_workload(n, restarts, seed):
    rng = np.random.default_rng(seed)
    m = rng.random((n, n))
    m = (m + m.T) / 2
    np.fill_diagonal(m, 0.0)
    x = rng.dirichlet(np.ones(n), size=restarts)
    return m, x


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller sizes only")
    args = parser.parse_args()

    if not HAVE_COMPILED:
        print("compiled kernels not built; only the pure backend is available",
              file=sys.stderr)

    jacobi_sizes = (30, 60, 120) if args.quick else (30, 60, 120, 240)
    repl_sizes = ((8, 16), (16, 32)) if args.quick else ((8, 16), (16, 32), (32, 64))

    rows = []
    for n in jacobi_sizes:
        m = jacobi_workload(n, n)
        t_pure = timeit(lambda: _kernels_py.jacobi_eigh(m.copy(), SWEEP_TOL, MAX_SWEEPS))
        if HAVE_COMPILED:
            t_comp = timeit(lambda: _kernels.jacobi_eigh(m.copy(), SWEEP_TOL, MAX_SWEEPS))
            vc, _, _ = _kernels.jacobi_eigh(m.copy(), SWEEP_TOL, MAX_SWEEPS)
            vp, _, _ = _kernels_py.jacobi_eigh(m.copy(), SWEEP_TOL, MAX_SWEEPS)
            drift = float(np.abs(np.sort(vc) - np.sort(vp)).max())
        else:
            t_comp, drift = float("nan"), float("nan")
        rows.append((f"jacobi {n}x{n}", t_pure, t_comp, drift))

    for n, restarts in repl_sizes:
        m, x = replicator_workload(n, restarts, n)
        t_pure = timeit(lambda: _kernels_py.replicator(m, x.copy(), 1e-8, 100000))
        if HAVE_COMPILED:
            t_comp = timeit(lambda: _kernels.replicator(m, x.copy(), 1e-8, 100000))
            _, vc, _, _ = _kernels.replicator(m, x.copy(), 1e-8, 100000)
            _, vp, _, _ = _kernels_py.replicator(m, x.copy(), 1e-8, 100000)
            drift = float(np.abs(vc - vp).max())
        else:
            t_comp, drift = float("nan"), float("nan")
        rows.append((f"replicator {n}v x{restarts}", t_pure, t_comp, drift))

    print(f"{'workload':<24}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}{'max drift':>12}")
    for name, t_pure, t_comp, drift in rows:
        speed = t_pure / t_comp if t_comp == t_comp and t_comp > 0 else float("nan")
        print(f"{name:<24}{t_pure:>12.4f}{t_comp:>14.4f}{speed:>10.1f}{drift:>12.2e}")


if __name__ == "__main__":
    main()
