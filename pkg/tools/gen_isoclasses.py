#!/usr/bin/env python3
"""Generate isomorph-free graph6 corpora for small vertex counts.

Stands in for an externally produced corpus (the package itself never does
isomorphism work): representatives are built level by level, extending every
(n-1)-vertex class by one vertex over all neighbor masks, bucketing
candidates by an exact integer invariant (characteristic polynomial plus the
sorted degree/triangle profile) and separating true classes inside a bucket
with VF2 (networkx).

The class counts per level are checked against the known census
1, 2, 4, 11, 34, 156, 1044, 12346, 274668 for n = 1..9; any mismatch aborts.

Usage:
    python tools/gen_isoclasses.py --max-n 9 --out-dir tests/data
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ngbounds.graphs import Graph, to_graph6, triangle_size  # noqa: E402

KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044,
                8: 12346, 9: 274668}


def adjacency(n: int, bits: int) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.float64)
    t = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> t & 1:
                a[i, j] = a[j, i] = 1
            t += 1
    return a


def batch_keys(n: int, batch: np.ndarray) -> list[tuple]:
    """Isomorphism-invariant integer keys for a stack of adjacency matrices.

    Characteristic polynomial coefficients are built from eigenvalues and
    rounded; for 0/1 matrices of this size they are exact integers well
    below the float53 cliff, so the rounding recovers them exactly.
    """
    b = batch.shape[0]
    evals = np.linalg.eigvalsh(batch)
    coeffs = np.zeros((b, n + 1))
    coeffs[:, 0] = 1.0
    for i in range(n):
        lam = evals[:, i]
        coeffs[:, 1:i + 2] = coeffs[:, 1:i + 2] - lam[:, None] * coeffs[:, 0:i + 1]
    coeffs = np.rint(coeffs).astype(np.int64)
    deg = batch.sum(axis=2).astype(np.int64)
    tri = np.rint(np.einsum("bij,bjk,bki->bi", batch, batch, batch)).astype(np.int64)
    keys = []
    for k in range(b):
        profile = tuple(sorted(zip(deg[k].tolist(), tri[k].tolist())))
        keys.append(tuple(coeffs[k].tolist()) + profile)
    return keys


def to_nx(n: int, bits: int) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    t = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> t & 1:
                g.add_edge(i, j)
            t += 1
    return g


def extend_level(n: int, prev_reps: list[int]) -> list[int]:
    """All isomorphism classes on n vertices from the (n-1)-vertex classes."""
    shift = triangle_size(n - 1)
    nmasks = 1 << (n - 1)
    mask_rows = ((np.arange(nmasks)[:, None] >> np.arange(n - 1)[None, :]) & 1
                 ).astype(np.float64)
    buckets: dict[tuple, list[int]] = {}
    reps: list[int] = []
    t0 = time.time()
    candidates = 0
    for base in prev_reps:
        base_adj = adjacency(n - 1, base)
        batch = np.zeros((nmasks, n, n))
        batch[:, :n - 1, :n - 1] = base_adj
        batch[:, n - 1, :n - 1] = mask_rows
        batch[:, :n - 1, n - 1] = mask_rows
        keys = batch_keys(n, batch)
        for mask in range(nmasks):
            bits = base | (mask << shift)
            candidates += 1
            bucket = buckets.get(keys[mask])
            if bucket is None:
                buckets[keys[mask]] = [bits]
                reps.append(bits)
                continue
            gnew = None
            for known in bucket:
                if gnew is None:
                    gnew = to_nx(n, bits)
                if nx.is_isomorphic(gnew, to_nx(n, known)):
                    break
            else:
                bucket.append(bits)
                reps.append(bits)
    dt = time.time() - t0
    print(f"n={n}: {len(reps)} classes from {candidates} candidates "
          f"({dt:.1f}s)", flush=True)
    return reps


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--out-dir", default="tests/data")
    ap.add_argument("--write-from", type=int, default=8,
                    help="write corpus files for n >= this")
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    reps = [0]          # K1
    if KNOWN_COUNTS.get(1) != 1:
        return 1
    for n in range(2, args.max_n + 1):
        reps = extend_level(n, reps)
        expected = KNOWN_COUNTS.get(n)
        if expected is not None and len(reps) != expected:
            print(f"FATAL: n={n} produced {len(reps)} classes, census says "
                  f"{expected}", file=sys.stderr)
            return 1
        if n >= args.write_from:
            path = out / f"graphs{n}.g6"
            with open(path, "w", encoding="ascii") as fh:
                for bits in reps:
                    fh.write(to_graph6(Graph(n, bits)) + "\n")
            print(f"wrote {path} ({len(reps)} graphs)", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
