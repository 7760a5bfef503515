"""High-precision recheck of violation candidates.

A bound whose slack crosses the tolerance in double precision is recomputed
from 40-digit eigenvalues before it is reported, so numerical false alarms
never surface as counterexamples.  Exact quantities (m, chi, inertia) are
reused as-is.
"""

from __future__ import annotations

import math
from dataclasses import replace

import mpmath as mp

from . import backend
from .graphs import Graph
from .invariants import InvariantSet

HIGHPREC_DPS = 40


def _mp_eigenvalues(g: Graph, dps: int) -> list:
    with mp.workdps(dps):
        a = mp.zeros(g.n)
        for i, j in g.edges():
            a[i, j] = a[j, i] = mp.mpf(1)
        vals = mp.eigsy(a, eigvals_only=True)
        return sorted((vals[k] for k in range(g.n)), reverse=True)


def high_precision_invariants(g: Graph, base: InvariantSet,
                              dps: int = HIGHPREC_DPS) -> InvariantSet:
    """Rebuild the spectral fields of an InvariantSet from mpmath eigenvalues."""
    evals = _mp_eigenvalues(g, dps)
    pi, nu, _ = backend.exact_inertia(g.n, g.bits)
    n = g.n
    with mp.workdps(dps):
        s_plus = float(mp.fsum(v * v for v in evals[:pi]))
        s_minus = float(mp.fsum(v * v for v in evals[n - nu:]))
        energy = float(mp.fsum(evals[:pi]) - mp.fsum(evals[n - nu:]))
        deg = g.degrees()
        randic = float(mp.fsum(1 / mp.sqrt(mp.mpf(deg[i] * deg[j]))
                               for i, j in g.edges()))
    return replace(base, s_plus=s_plus, s_minus=s_minus, energy=energy,
                   mu_max=float(evals[0]), mu_min=float(evals[-1]),
                   randic=randic)


def reverify_violation(g: Graph, gbar: Graph, bound_id: str,
                       inv_g: InvariantSet, inv_gbar: InvariantSet,
                       tol: float) -> "BoundCheck":
    """Re-evaluate one bound from high-precision spectra; returns the new check."""
    from .bounds import evaluate_bound

    hp_g = high_precision_invariants(g, inv_g)
    hp_gbar = high_precision_invariants(gbar, inv_gbar)
    return evaluate_bound(bound_id, hp_g, hp_gbar, tol=tol)


def s_plus_highprec(g: Graph, dps: int = HIGHPREC_DPS) -> float:
    """Positive-eigenvalue power sum from high-precision eigenvalues."""
    evals = _mp_eigenvalues(g, dps)
    pi, _, _ = backend.exact_inertia(g.n, g.bits)
    with mp.workdps(dps):
        return float(mp.fsum(v * v for v in evals[:pi]))
