"""Non-spectral invariants: Randic index and exact chromatic number, plus the
per-graph bundle every bound evaluator consumes.

The chromatic number is exact or absent: above the cap the field is None and
chi-dependent bounds get skipped, never estimated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import backend
from .graphs import Graph, basic_props, classify_structure, graph_key
from .spectral import spectral_profile

CHI_DEFAULT_CAP = 16


class ChromaticCapError(ValueError):
    """Exact chromatic number refused above the configured cap."""


_INV_SQRT = [0.0] + [1.0 / math.sqrt(p) for p in range(1, 64 * 64)]


def randic_index(g: Graph, degrees: tuple[int, ...] | None = None) -> float:
    """Sum over edges of 1/sqrt(d_i d_j); isolated vertices contribute nothing."""
    deg = degrees if degrees is not None else g.degrees()
    table = _INV_SQRT
    return sum(table[deg[i] * deg[j]] for i, j in g.edges())


def greedy_clique(masks: list[int]) -> int:
    """Deterministic greedy clique size (max degree first, lowest index ties)."""
    n = len(masks)
    best = 0
    for start in sorted(range(n), key=lambda v: (-masks[v].bit_count(), v)):
        size = 1
        common = masks[start]
        while common:
            pick, pick_score = -1, -1
            cand = common
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                score = (masks[v] & common).bit_count()
                if score > pick_score:
                    pick, pick_score = v, score
            size += 1
            common &= masks[pick]
        best = max(best, size)
        if best == n:
            break
    return best


def _dsatur_greedy(masks: list[int]) -> int:
    """Greedy DSATUR coloring; returns the number of colors used."""
    n = len(masks)
    color = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if color[u] == -1),
                key=lambda u: (len(neighbor_colors[u]), masks[u].bit_count(), -u))
        c = 0
        while c in neighbor_colors[v]:
            c += 1
        color[v] = c
        mu = masks[v]
        while mu:
            low = mu & -mu
            neighbor_colors[low.bit_length() - 1].add(c)
            mu ^= low
    return max(color) + 1


def chromatic_number(g: Graph, cap: int = CHI_DEFAULT_CAP) -> int:
    """Exact chromatic number by saturation-degree branch and bound.

    Deterministic branching: saturation degree, then degree, then lowest
    index.  A greedy clique supplies the lower bound, greedy DSATUR the
    initial upper bound.
    """
    if g.n > cap:
        raise ChromaticCapError(
            f"exact chromatic number capped at n={cap}, graph has {g.n}")
    if g.m == 0:
        return 1
    masks = g.neighbor_masks()
    lb = greedy_clique(masks)
    ub = _dsatur_greedy(masks)
    if lb == ub:
        return ub

    n = g.n
    best = ub
    color = [-1] * n
    used_masks = [0] * n          # per-vertex bitmask of colors on neighbors

    def bound_and_branch(colored: int, num_colors: int) -> None:
        nonlocal best
        if num_colors >= best:
            return
        if colored == n:
            best = num_colors
            return
        v = -1
        key = None
        for u in range(n):
            if color[u] == -1:
                k = (used_masks[u].bit_count(), masks[u].bit_count(), -u)
                if key is None or k > key:
                    key = k
                    v = u
        limit = min(num_colors + 1, best - 1)
        for c in range(limit):
            if used_masks[v] >> c & 1:
                continue
            color[v] = c
            touched = []
            mu = masks[v]
            while mu:
                low = mu & -mu
                w = low.bit_length() - 1
                mu ^= low
                if color[w] == -1 and not used_masks[w] >> c & 1:
                    used_masks[w] |= 1 << c
                    touched.append(w)
            bound_and_branch(colored + 1, max(num_colors, c + 1))
            color[v] = -1
            for w in touched:
                used_masks[w] ^= 1 << c
            if best <= lb:
                return

    bound_and_branch(0, 0)
    return best


def _chi(g: Graph, masks: list[int], cap: int, mode: str) -> int | None:
    if g.n > cap:
        return None
    if mode == "auto":
        fast = backend.chromatic_number_fast(g.n, masks)
        if fast is not None:
            return fast
    return chromatic_number(g, cap)


@dataclass(frozen=True, slots=True)
class InvariantSet:
    n: int
    m: int
    s_plus: float
    s_minus: float
    energy: float
    mu_max: float
    mu_min: float
    randic: float
    chi: int | None
    chi_complement: int | None
    connected: bool
    triangle_free: bool
    bipartite: bool
    tags: frozenset[str]
    g6: str


def _build(g: Graph, masks, props, chi, chi_complement, zero_tol,
           with_tags) -> InvariantSet:
    _, sums = spectral_profile(g, zero_tol, masks)
    tags = classify_structure(g, props, masks) if with_tags else frozenset()
    return InvariantSet(
        n=g.n, m=props.m,
        s_plus=sums.s_plus, s_minus=sums.s_minus, energy=sums.energy,
        mu_max=sums.mu_max, mu_min=sums.mu_min,
        randic=randic_index(g, props.degrees),
        chi=chi, chi_complement=chi_complement,
        connected=props.connected, triangle_free=props.triangle_free,
        bipartite=props.bipartite, tags=tags, g6=graph_key(g))


def collect_invariants(g: Graph, *, chi_cap: int = CHI_DEFAULT_CAP,
                       zero_tol: float | None = None,
                       with_tags: bool = False,
                       chi_mode: str = "auto",
                       chi_complement: int | None | str = "auto") -> InvariantSet:
    """Assemble the full bound-evaluation bundle for one graph.

    chi fields are None when the exact coloring cap bites.  Pass
    chi_complement explicitly (int or None) to avoid recomputing it when the
    complement's invariants are built alongside.
    """
    masks = g.neighbor_masks()
    props = basic_props(g, masks)
    chi = _chi(g, masks, chi_cap, chi_mode)
    if chi_complement == "auto":
        gbar = g.complement()
        chi_complement = _chi(gbar, gbar.neighbor_masks(), chi_cap, chi_mode)
    return _build(g, masks, props, chi, chi_complement, zero_tol, with_tags)


def invariant_pair(g: Graph, *, chi_cap: int = CHI_DEFAULT_CAP,
                   zero_tol: float | None = None,
                   with_tags: bool = False,
                   chi_mode: str = "auto") -> tuple[InvariantSet, InvariantSet]:
    """Invariants of a graph and its complement, sharing the coloring work."""
    gbar = g.complement()
    masks_g = g.neighbor_masks()
    masks_b = gbar.neighbor_masks()
    props_g = basic_props(g, masks_g)
    props_b = basic_props(gbar, masks_b)
    chi_g = _chi(g, masks_g, chi_cap, chi_mode)
    chi_b = _chi(gbar, masks_b, chi_cap, chi_mode)
    inv_g = _build(g, masks_g, props_g, chi_g, chi_b, zero_tol, with_tags)
    inv_b = _build(gbar, masks_b, props_b, chi_b, chi_g, zero_tol, with_tags)
    return inv_g, inv_b
