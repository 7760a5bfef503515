"""Eigenvalues, exact inertia and the derived spectral sums.

The eigensolver is numeric; inertia is exact (rational congruence on the
integer adjacency matrix) and authoritative.  Numeric sign counts are always
reconciled against the exact triple, because the positive/negative power sums
are discontinuous in the zero classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import backend
from .graphs import Graph, to_graph6

ZERO_TOL_SCALE = 1e-8
RECLASSIFY_FACTOR = 10.0
TRACE_TOL_SCALE = 1e-9          # |sum of eigenvalues| <= this * n
SQUARES_TOL_SCALE = 1e-8        # |sum of squares - 2m| <= this * n^2
ALWAYS_EXACT_MAX_N = 24         # below this the exact kernel is basically free


class SpectralError(RuntimeError):
    pass


class ConvergenceError(SpectralError):
    """Eigensolver iteration failed; carries the offending graph6 string."""


class InertiaMismatchError(SpectralError):
    """Numeric sign counts cannot be reconciled with the exact inertia."""


class ZeroToleranceError(SpectralError):
    """The trace identity failed, indicating a mis-set zero tolerance."""


def default_zero_tolerance(g: Graph, masks: list[int] | None = None) -> float:
    if masks is not None:
        max_deg = max((m.bit_count() for m in masks), default=0)
    else:
        max_deg = max(g.degrees(), default=0)
    return ZERO_TOL_SCALE * max(1.0, float(max_deg))


def exact_inertia(g: Graph) -> tuple[int, int, int]:
    """Exact (pi, nu, gamma); relabeling-invariant, no floating point."""
    return backend.exact_inertia(g.n, g.bits)


@dataclass(frozen=True, slots=True)
class Spectrum:
    eigenvalues: tuple[float, ...]      # sorted descending
    inertia: tuple[int, int, int]       # (pi, nu, gamma), exact
    zero_tolerance: float

    @property
    def mu(self) -> float:
        return self.eigenvalues[0]

    @property
    def mu_min(self) -> float:
        return self.eigenvalues[-1]


@dataclass(frozen=True, slots=True)
class SpectralSums:
    s_plus: float
    s_minus: float
    energy: float
    mu_max: float
    mu_min: float


def eigen_decompose(g: Graph, tol: float | None = None,
                    masks: list[int] | None = None) -> Spectrum:
    """Numeric spectrum with its sign classification pinned to exact inertia.

    Eigenvalues whose numeric sign class disagrees with the exact triple are
    reassigned only when they sit within RECLASSIFY_FACTOR * tol of zero;
    anything larger is an internal inconsistency, not noise.
    """
    if tol is None:
        tol = default_zero_tolerance(g, masks)
    try:
        evals = backend.adj_eigenvalues(g.n, g.bits)
    except backend.kernel_convergence_error() as exc:
        raise ConvergenceError(f"eigensolver failed on {to_graph6(g)}") from exc

    n = g.n
    trace = sum(evals)
    if abs(trace) > TRACE_TOL_SCALE * n:
        raise SpectralError(f"eigenvalue trace {trace} off zero on {to_graph6(g)}")
    squares = sum(v * v for v in evals)
    if abs(squares - 2 * g.m) > SQUARES_TOL_SCALE * n * n:
        raise SpectralError(
            f"sum of squared eigenvalues {squares} != 2m={2 * g.m} on {to_graph6(g)}")

    pi, nu, gamma = backend.exact_inertia(g.n, g.bits)
    band = RECLASSIFY_FACTOR * tol
    # positional assignment: top pi are positive, bottom nu negative
    if pi and evals[pi - 1] <= tol and abs(evals[pi - 1]) > band:
        raise InertiaMismatchError(
            f"{to_graph6(g)}: eigenvalue {evals[pi - 1]} claimed positive by exact "
            f"inertia {pi, nu, gamma}")
    if nu and evals[n - nu] >= -tol and abs(evals[n - nu]) > band:
        raise InertiaMismatchError(
            f"{to_graph6(g)}: eigenvalue {evals[n - nu]} claimed negative by exact "
            f"inertia {pi, nu, gamma}")
    for k in range(pi, n - nu):
        if abs(evals[k]) > band:
            raise InertiaMismatchError(
                f"{to_graph6(g)}: eigenvalue {evals[k]} claimed zero by exact "
                f"inertia {pi, nu, gamma}")

    return Spectrum(tuple(evals), (pi, nu, gamma), tol)


def sign_counts(evals: list[float] | tuple[float, ...], tol: float) -> tuple[int, int, int]:
    """Raw numeric sign classification at the given tolerance."""
    pi = sum(1 for v in evals if v > tol)
    nu = sum(1 for v in evals if v < -tol)
    return pi, nu, len(evals) - pi - nu


def spectral_sums(spec: Spectrum, m: int) -> SpectralSums:
    """Power sums over the inertia classes; zero-classified values contribute
    to neither side, and the residual must sit inside tolerance."""
    evals = spec.eigenvalues
    n = len(evals)
    pi, nu, _ = spec.inertia
    s_plus = sum(v * v for v in evals[:pi])
    s_minus = sum(v * v for v in evals[n - nu:])
    energy = sum(evals[:pi]) - sum(evals[n - nu:])
    residual = abs(s_plus + s_minus - 2.0 * m)
    if residual > SQUARES_TOL_SCALE * n * n:
        raise ZeroToleranceError(
            f"s+ + s- = {s_plus + s_minus} vs 2m = {2 * m}: zero tolerance "
            f"{spec.zero_tolerance} misclassifies mass")
    return SpectralSums(s_plus, s_minus, energy, evals[0], evals[-1])


def spectral_profile(g: Graph, tol: float | None = None,
                     masks: list[int] | None = None) -> tuple[Spectrum, SpectralSums]:
    spec = eigen_decompose(g, tol, masks)
    return spec, spectral_sums(spec, g.m)


@dataclass(frozen=True, slots=True)
class ConferenceValues:
    s_plus_each: float
    pair_sum: float
    energy_pair: float


def conference_closed_form(n: int) -> ConferenceValues:
    """Closed-form conference-graph values on n = 4t+1 vertices.

    Spectrum is (n-1)/2 once and ((+/-)sqrt(n) - 1)/2-type values with
    multiplicity (n-1)/2 each, which gives both the per-graph positive power
    sum and the complement-pair totals.
    """
    if n < 5 or n % 4 != 1:
        raise ValueError(f"conference parameters need n = 1 (mod 4), n >= 5; got {n}")
    rt = math.sqrt(n)
    s_plus_each = (n - 1) ** 2 / 4.0 + (n - 1) * (n + 1 - 2.0 * rt) / 8.0
    pair_sum = (n - 1) * (3.0 * n - 1 - 2.0 * rt) / 4.0
    energy_pair = (n - 1) * (1.0 + rt)
    return ConferenceValues(s_plus_each, pair_sum, energy_pair)


def conference_spectrum(n: int) -> list[float]:
    """Expected conference spectrum, descending, for cross-checks."""
    if n < 5 or n % 4 != 1:
        raise ValueError(f"n = 1 (mod 4), n >= 5 required; got {n}")
    rt = math.sqrt(n)
    half = (n - 1) // 2
    return [(n - 1) / 2.0] + [(rt - 1) / 2.0] * half + [-(rt + 1) / 2.0] * half
