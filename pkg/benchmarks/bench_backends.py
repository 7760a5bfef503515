#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallbacks.

Covers the three hot primitives (eigenvalues, exact inertia, exact coloring)
and an end-to-end labeled sweep.  The compiled backend must be built
(`pip install -e .`); the fallback is what you get with NGBOUNDS_BACKEND=python.

Usage:
    python benchmarks/bench_backends.py [--sweep-n 6] [--samples 2000]
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ngbounds import backend                      # noqa: E402
from ngbounds import _pykernels                   # noqa: E402
from ngbounds.graphs import Graph, triangle_size  # noqa: E402
from ngbounds.invariants import chromatic_number  # noqa: E402


def timed(fn, reps=3):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_eigenvalues(samples: int, n: int, rng) -> dict:
    graphs = [rng.getrandbits(triangle_size(n)) for _ in range(samples)]
    bufs = [backend.tri_bytes(n, b) for b in graphs]
    out = {}
    if backend.ACTIVE == "compiled":
        from ngbounds import _kernels
        out["compiled"] = timed(lambda: [_kernels.adj_eigenvalues(n, t) for t in bufs])
    out["python"] = timed(lambda: [_pykernels.adj_eigenvalues(n, t) for t in bufs])
    return out


def bench_inertia(samples: int, n: int, rng) -> dict:
    graphs = [rng.getrandbits(triangle_size(n)) for _ in range(samples)]
    bufs = [backend.tri_bytes(n, b) for b in graphs]
    out = {}
    if backend.ACTIVE == "compiled":
        from ngbounds import _kernels
        out["compiled"] = timed(lambda: [_kernels.exact_inertia(n, t) for t in bufs])
    out["python"] = timed(lambda: [_pykernels.exact_inertia(n, t) for t in bufs])
    return out


def bench_coloring(samples: int, n: int, rng) -> dict:
    graphs = [Graph(n, rng.getrandbits(triangle_size(n))) for _ in range(samples)]
    masks = [g.neighbor_masks() for g in graphs]
    out = {}
    if backend.ACTIVE == "compiled":
        from ngbounds import _kernels
        out["compiled"] = timed(
            lambda: [_kernels.chromatic_number_small(n, m) for m in masks])
    out["python"] = timed(lambda: [chromatic_number(g) for g in graphs])
    return out


def bench_sweep(n: int) -> dict:
    from ngbounds.scan import run_scan
    from ngbounds.graphs import enumerate_labeled
    return {"run": timed(lambda: run_scan(enumerate_labeled(n)), reps=1)}


def report(name: str, samples: int, results: dict) -> None:
    line = f"{name:<28}"
    for label, secs in results.items():
        line += f" {label}: {secs / samples * 1e6:9.2f} us/op"
    if "compiled" in results and "python" in results:
        line += f"   speedup x{results['python'] / results['compiled']:.1f}"
    print(line)


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--sweep-n", type=int, default=6)
    args = ap.parse_args()

    print(f"active backend: {backend.ACTIVE}")
    if backend.ACTIVE != "compiled":
        print("note: compiled extension unavailable; python columns only")
    rng = random.Random(2026)

    for n in (7, 9, 16):
        report(f"eigenvalues n={n}", args.samples,
               bench_eigenvalues(args.samples, n, rng))
    for n in (7, 9, 16):
        report(f"exact inertia n={n}", args.samples,
               bench_inertia(args.samples, n, rng))
    small = max(200, args.samples // 10)
    for n in (7, 9, 12):
        report(f"chromatic number n={n}", small, bench_coloring(small, n, rng))

    sweep = bench_sweep(args.sweep_n)
    graphs = 1 << triangle_size(args.sweep_n)
    print(f"full catalog sweep n={args.sweep_n} ({graphs} graphs): "
          f"{sweep['run']:.1f}s = {sweep['run'] / graphs * 1e6:.0f} us/graph "
          f"[backend {backend.ACTIVE}]")
    return 0


if __name__ == "__main__":
    sys.exit(main())
