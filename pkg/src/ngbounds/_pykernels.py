"""Pure-Python kernel fallbacks: numpy eigenvalues, Fraction-exact inertia.

These mirror the compiled kernels' contracts.  The Fraction congruence is
also the arbitrary-precision escape hatch the compiled kernel retries into
when its int64 magnitudes overflow.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def unpack_adjacency(n: int, tri: bytes) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.float64)
    t = 0
    for j in range(1, n):
        for i in range(j):
            if tri[t >> 3] >> (t & 7) & 1:
                a[i, j] = a[j, i] = 1.0
            t += 1
    return a


def adj_eigenvalues(n: int, tri: bytes) -> list[float]:
    """Adjacency eigenvalues, sorted descending (LAPACK backed)."""
    if n == 1:
        return [0.0]
    vals = np.linalg.eigvalsh(unpack_adjacency(n, tri))
    return vals[::-1].tolist()


def exact_inertia(n: int, tri: bytes) -> tuple[int, int, int]:
    """Inertia by symmetric congruence over exact rationals.

    Diagonal pivots are eliminated directly; when every remaining diagonal
    entry is zero, a nonzero off-diagonal entry forms a hyperbolic 2x2 pivot
    contributing one positive and one negative index.
    """
    a: list[list[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    t = 0
    for j in range(1, n):
        for i in range(j):
            if tri[t >> 3] >> (t & 7) & 1:
                a[i][j] = a[j][i] = Fraction(1)
            t += 1

    active = list(range(n))
    pi = nu = gamma = 0
    while active:
        pivot = next((i for i in active if a[i][i]), None)
        if pivot is not None:
            p = a[pivot][pivot]
            if p > 0:
                pi += 1
            else:
                nu += 1
            rest = [i for i in active if i != pivot]
            col = {j: a[j][pivot] / p for j in rest if a[j][pivot]}
            for x, j in enumerate(rest):
                fj = col.get(j)
                if fj is None:
                    continue
                for k in rest[x:]:
                    aik = a[pivot][k]
                    if aik:
                        val = a[j][k] - fj * aik
                        a[j][k] = a[k][j] = val
            active = rest
            continue

        pair = next(((i, j) for x, i in enumerate(active)
                     for j in active[x + 1:] if a[i][j]), None)
        if pair is None:
            gamma += len(active)
            break
        i, j = pair
        pi += 1
        nu += 1
        c = a[i][j]
        rest = [v for v in active if v not in pair]
        for x, k in enumerate(rest):
            for v in rest[x:]:
                val = a[k][v] - (a[k][i] * a[j][v] + a[k][j] * a[i][v]) / c
                a[k][v] = a[v][k] = val
        active = rest

    return pi, nu, gamma


def backend_name() -> str:
    return "python"
