#!/usr/bin/env python3
"""Benchmark the numba hot kernels against their pure-numpy fallbacks.

Runs both implementations in one process (regardless of LPGST_NO_NUMBA)
and reports best-of-repeats wall times. The fidelity grid is the inner
loop of `sweep`; the Jacobi solver backs `eigendecompose`.
"""
import time

import numpy as np

from lpgst import _kernels
from lpgst.graphs import laplacian, make_path
from lpgst.pair_states import transfer_weights
from lpgst.spectra import path_spectrum


def best_of(func, repeats=5):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        func()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_fidelity_grid(n=15, steps=1_000_000, t_max=500.0):
    s = path_spectrum(n)
    weights = np.ascontiguousarray(transfer_weights(s, (1, 2), (n - 1, n)))
    thetas = np.ascontiguousarray(s.eigenvalues)
    times = np.linspace(0.0, t_max, steps)
    rows = [("numpy", lambda: _kernels.fidelity_grid_numpy(thetas, weights, times))]
    if _kernels.NUMBA_ENABLED:
        _kernels.fidelity_grid_numba(thetas, weights, times[:16])  # warm up JIT
        rows.append(("numba", lambda: _kernels.fidelity_grid_numba(thetas, weights, times)))
    print(f"fidelity grid: path n={n}, {steps} points over [0,{t_max}]")
    _print_rows(rows)


def bench_jacobi(n=64):
    lap = laplacian(make_path(n)).astype(float)
    rows = [("numpy", lambda: _kernels.jacobi_eigh_numpy(lap, 100, 1e-12))]
    if _kernels.NUMBA_ENABLED:
        _kernels.jacobi_eigh_numba(lap[:4, :4].copy(), 100, 1e-12)  # warm up JIT
        rows.append(("numba", lambda: _kernels.jacobi_eigh_numba(lap, 100, 1e-12)))
    print(f"jacobi eigensolver: path Laplacian n={n}")
    _print_rows(rows)


def _print_rows(rows):
    timings = [(label, best_of(func)) for label, func in rows]
    baseline = timings[0][1]
    for label, seconds in timings:
        print(f"  {label:>6}: {seconds * 1e3:9.2f} ms  (x{baseline / seconds:.1f})")
    print()


if __name__ == "__main__":
    if not _kernels.NUMBA_ENABLED:
        print("note: numba path unavailable (LPGST_NO_NUMBA set or numba missing); "
              "showing numpy only\n")
    bench_fidelity_grid()
    bench_jacobi()
