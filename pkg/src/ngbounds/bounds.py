"""The inequality catalog: each bound as an applicability gate, a bounded
quantity, and one or two threshold sides with slack and equality detection.

Slack follows the usual sign convention (rhs - lhs for upper sides, lhs - rhs
for lower sides), so negative slack always means trouble.  Strict-inequality
sides are never reported as violated when they land inside the equality
tolerance: strictness in the sources is asymptotic slack, not a testable gap.
Conjecture-status entries never signal an implementation bug; their
violations are the scientific output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .graphs import Graph
from .invariants import InvariantSet, invariant_pair

SLACK_TOL = 1e-8
EQUALITY_TOL = 1e-6

THEOREM = "theorem"
CONJECTURE = "conjecture"
CONJECTURE_DEPENDENT = "conjecture_dependent"

Expr = Callable[[InvariantSet, InvariantSet], float]


def f_correction(n: int) -> float:
    """Correction term of the conjectured Nordhaus-Gaddum ceiling, split on
    the residue of n mod 3."""
    if n < 2:
        raise ValueError("f_correction requires n >= 2")
    r = n % 3
    if r == 2:
        return 0.0
    base = 3 * n - 2 if r == 1 else 3 * n - 1
    return (math.sqrt(base * base + 8) - base) / 6.0


@dataclass(frozen=True, slots=True)
class Side:
    kind: str                 # "upper" | "lower"
    rhs: Expr
    strict: bool = False


@dataclass(frozen=True, slots=True)
class BoundSpec:
    id: str
    status: str
    statement: str
    quantity: Expr
    sides: tuple[Side, ...]
    applies: Callable[[InvariantSet], str | None]   # skip reason or None
    needs_complement: bool = False
    needs_chi: bool = False
    equality_class: str | None = None

    @property
    def kind(self) -> str:
        if len(self.sides) == 2:
            return "two-sided"
        side = self.sides[0]
        return ("strict-" if side.strict else "") + side.kind


@dataclass(slots=True)
class BoundCheck:
    bound: str
    g6: str
    lhs: float | None
    rhs: float | None
    slack: float | None
    holds: bool
    equality: bool
    skipped: bool
    reason: str | None = None
    # not part of the serialized row contract:
    violated: bool = False
    side: str | None = None             # binding side for two-sided entries
    equality_sides: tuple[str, ...] = ()
    status: str = THEOREM
    note: str | None = None


class UnknownBoundError(KeyError):
    pass


def _applies_always(inv: InvariantSet) -> str | None:
    return None


def _needs_edges(inv: InvariantSet) -> str | None:
    return None if inv.m >= 1 else "no edges"


def _needs_connected(inv: InvariantSet) -> str | None:
    return None if inv.connected else "disconnected"


def _needs_connected_edges(inv: InvariantSet) -> str | None:
    if not inv.connected:
        return "disconnected"
    return None if inv.m >= 1 else "no edges"


def _needs_ratio_range(inv: InvariantSet) -> str | None:
    if not inv.connected:
        return "disconnected"
    if inv.m < 1:
        return "no edges"
    return None if inv.n >= 3 else "needs n >= 3"


def _needs_triangle_free(inv: InvariantSet) -> str | None:
    if not inv.triangle_free:
        return "has a triangle"
    return None if inv.m >= 1 else "no edges"


def _needs_n2(inv: InvariantSet) -> str | None:
    return None if inv.n >= 2 else "needs n >= 2"


def _stanley_rhs(g: InvariantSet, _: InvariantSet) -> float:
    return (math.sqrt(8.0 * g.m + 1.0) - 1.0) / 2.0


def _mu_ng(g: InvariantSet, c: InvariantSet) -> float:
    return g.mu_max + c.mu_max


def _sqrt_splus_ng(g: InvariantSet, c: InvariantSet) -> float:
    return math.sqrt(g.s_plus) + math.sqrt(c.s_plus)


def _splus_ng(g: InvariantSet, c: InvariantSet) -> float:
    return g.s_plus + c.s_plus


def _conj2_rhs(g: InvariantSet, _: InvariantSet) -> float:
    return 4.0 * g.n / 3.0 - 5.0 / 3.0 + f_correction(g.n)


def _conference_floor(g: InvariantSet, _: InvariantSet) -> float:
    n = g.n
    return (n - 1) * (3.0 * n - 1.0 - 2.0 * math.sqrt(n)) / 4.0


def _upper(rhs: Expr, strict: bool = False) -> tuple[Side, ...]:
    return (Side("upper", rhs, strict),)


def _lower(rhs: Expr, strict: bool = False) -> tuple[Side, ...]:
    return (Side("lower", rhs, strict),)


def _band(lo: Expr, hi: Expr, strict_lo: bool = False,
          strict_hi: bool = False) -> tuple[Side, ...]:
    return (Side("lower", lo, strict_lo), Side("upper", hi, strict_hi))


_ENTRIES = [
    BoundSpec(
        "STANLEY", THEOREM, "mu <= (sqrt(8m+1)-1)/2",
        quantity=lambda g, c: g.mu_max,
        sides=_upper(_stanley_rhs),
        applies=_applies_always),
    BoundSpec(
        "WU_ELPHICK", THEOREM, "sqrt(s+) <= (sqrt(8m+1)-1)/2",
        quantity=lambda g, c: math.sqrt(g.s_plus),
        sides=_upper(_stanley_rhs),
        applies=_applies_always),
    BoundSpec(
        "HOFFMAN", THEOREM, "1 + mu/|mu_n| <= chi",
        quantity=lambda g, c: 1.0 + g.mu_max / abs(g.mu_min),
        sides=_upper(lambda g, c: float(g.chi)),
        applies=_needs_edges, needs_chi=True),
    BoundSpec(
        "ANDO_LIN", THEOREM, "1 + max(s+/s-, s-/s+) <= chi",
        quantity=lambda g, c: 1.0 + max(g.s_plus / g.s_minus, g.s_minus / g.s_plus),
        sides=_upper(lambda g, c: float(g.chi)),
        applies=_needs_edges, needs_chi=True),
    BoundSpec(
        "CHI_SPLUS", THEOREM, "s+ <= 2m(chi-1)/chi",
        quantity=lambda g, c: g.s_plus,
        sides=_upper(lambda g, c: 2.0 * g.m * (g.chi - 1) / g.chi),
        applies=_needs_edges, needs_chi=True),
    BoundSpec(
        "MIN_S_CONJ", CONJECTURE, "min(s+, s-) >= n - 1 (connected)",
        quantity=lambda g, c: min(g.s_plus, g.s_minus),
        sides=_lower(lambda g, c: g.n - 1.0),
        applies=_needs_connected),
    BoundSpec(
        "SMINUS_MAX", THEOREM, "s- <= n^2/4",
        quantity=lambda g, c: g.s_minus,
        sides=_upper(lambda g, c: g.n * g.n / 4.0),
        applies=_applies_always),
    BoundSpec(
        "NOSAL_NG", THEOREM, "n-1 <= mu(G)+mu(G~) < sqrt(2)(n-1)",
        quantity=_mu_ng,
        sides=_band(lambda g, c: g.n - 1.0,
                    lambda g, c: math.sqrt(2.0) * (g.n - 1),
                    strict_hi=True),
        applies=_applies_always, needs_complement=True),
    BoundSpec(
        "THM1_NG", THEOREM, "n-1 <= sqrt(s+(G))+sqrt(s+(G~)) < sqrt(2) n",
        quantity=_sqrt_splus_ng,
        sides=_band(lambda g, c: g.n - 1.0,
                    lambda g, c: math.sqrt(2.0) * g.n,
                    strict_hi=True),
        applies=_applies_always, needs_complement=True),
    BoundSpec(
        "THM1_CHI_FORM", THEOREM,
        "sqrt(s+(G))+sqrt(s+(G~)) <= sqrt((2 - 1/chi - 1/chi~) n(n-1))",
        quantity=_sqrt_splus_ng,
        sides=_upper(lambda g, c: math.sqrt(
            (2.0 - 1.0 / g.chi - 1.0 / c.chi) * g.n * (g.n - 1))),
        applies=_applies_always, needs_complement=True, needs_chi=True),
    BoundSpec(
        "CONJ2_F1", CONJECTURE, "mu(G)+mu(G~) <= 4n/3 - 5/3 + f(n)",
        quantity=_mu_ng,
        sides=_upper(_conj2_rhs),
        applies=_needs_n2, needs_complement=True,
        equality_class="complete_split"),
    BoundSpec(
        "CONJ3_SQRT", CONJECTURE,
        "sqrt(s+(G))+sqrt(s+(G~)) <= 4n/3 - 5/3 + f(n)",
        quantity=_sqrt_splus_ng,
        sides=_upper(_conj2_rhs),
        applies=_needs_n2, needs_complement=True,
        equality_class="complete_split"),
    BoundSpec(
        "TERPAI", THEOREM, "mu(G)+mu(G~) <= 4n/3 - 1",
        quantity=_mu_ng,
        sides=_upper(lambda g, c: 4.0 * g.n / 3.0 - 1.0),
        applies=_applies_always, needs_complement=True),
    BoundSpec(
        "CSIKVARI", THEOREM, "mu(G)+mu(G~) <= (1+sqrt(3))n/2 - 1",
        quantity=_mu_ng,
        sides=_upper(lambda g, c: (1.0 + math.sqrt(3.0)) * g.n / 2.0 - 1.0),
        applies=_applies_always, needs_complement=True),
    BoundSpec(
        "THM_SPLUS_SUM", CONJECTURE_DEPENDENT,
        "(n-1)^2/2 < s+(G)+s+(G~) <= (n-1)^2",
        quantity=_splus_ng,
        sides=_band(lambda g, c: (g.n - 1.0) ** 2 / 2.0,
                    lambda g, c: (g.n - 1.0) ** 2,
                    strict_lo=True),
        applies=_applies_always, needs_complement=True),
    BoundSpec(
        "CONJ5_CONF", CONJECTURE,
        "s+(G)+s+(G~) >= (n-1)(3n-1-2 sqrt(n))/4",
        quantity=_splus_ng,
        sides=_lower(_conference_floor),
        applies=_applies_always, needs_complement=True,
        equality_class="conference_srg"),
    BoundSpec(
        "NY_ENERGY", THEOREM, "E(G)+E(G~) <= (n-1)(1+sqrt(n))",
        quantity=lambda g, c: g.energy + c.energy,
        sides=_upper(lambda g, c: (g.n - 1) * (1.0 + math.sqrt(g.n))),
        applies=_applies_always, needs_complement=True,
        equality_class="conference_srg"),
    BoundSpec(
        "FAVARON", THEOREM, "|mu_n| <= R (connected)",
        quantity=lambda g, c: abs(g.mu_min),
        sides=_upper(lambda g, c: g.randic),
        applies=_needs_connected),
    BoundSpec(
        "LEMMA_MR", THEOREM, "m/mu <= R (connected)",
        quantity=lambda g, c: g.m / g.mu_max,
        sides=_upper(lambda g, c: g.randic),
        applies=_needs_connected_edges),
    BoundSpec(
        "THM_RANDIC", THEOREM, "sqrt(s-) <= R (connected)",
        quantity=lambda g, c: math.sqrt(g.s_minus),
        sides=_upper(lambda g, c: g.randic),
        applies=_needs_connected_edges,
        equality_class="complete_bipartite"),
    BoundSpec(
        "CONJ6_RATIO", CONJECTURE,
        "2 sqrt(n-1)/(n-3+2 sqrt(2)) <= sqrt(s+)/R <= 2(n-1)/n (connected)",
        quantity=lambda g, c: math.sqrt(g.s_plus) / g.randic,
        sides=_band(lambda g, c: 2.0 * math.sqrt(g.n - 1.0) / (g.n - 3.0 + 2.0 * math.sqrt(2.0)),
                    lambda g, c: 2.0 * (g.n - 1.0) / g.n),
        applies=_needs_ratio_range),
    BoundSpec(
        "CONJ7_TF", CONJECTURE, "sqrt(s+) <= R (triangle-free)",
        quantity=lambda g, c: math.sqrt(g.s_plus),
        sides=_upper(lambda g, c: g.randic),
        applies=_needs_triangle_free,
        equality_class="complete_bipartite"),
    BoundSpec(
        "NG_CHI_SUM", THEOREM, "2 sqrt(n) <= chi + chi~ <= n + 1",
        quantity=lambda g, c: float(g.chi + g.chi_complement),
        sides=_band(lambda g, c: 2.0 * math.sqrt(g.n),
                    lambda g, c: g.n + 1.0),
        applies=_applies_always, needs_chi=True),
    BoundSpec(
        "NG_CHI_PROD", THEOREM, "n <= chi * chi~ <= (n+1)^2/4",
        quantity=lambda g, c: float(g.chi * g.chi_complement),
        sides=_band(lambda g, c: float(g.n),
                    lambda g, c: (g.n + 1.0) ** 2 / 4.0),
        applies=_applies_always, needs_chi=True),
]

CATALOG: dict[str, BoundSpec] = {spec.id: spec for spec in _ENTRIES}
ALL_BOUND_IDS: tuple[str, ...] = tuple(spec.id for spec in _ENTRIES)
THEOREM_IDS: tuple[str, ...] = tuple(
    s.id for s in _ENTRIES if s.status != CONJECTURE)
CONJECTURE_IDS: tuple[str, ...] = tuple(
    s.id for s in _ENTRIES if s.status == CONJECTURE)

assert len(CATALOG) == len(_ENTRIES), "catalog ids must be unique"


def resolve_bound_ids(ids) -> tuple[str, ...]:
    """Normalize a bound selection ('all', None, iterable) to catalog order."""
    if ids is None or ids == "all":
        return ALL_BOUND_IDS
    wanted = set(ids)
    unknown = wanted - set(ALL_BOUND_IDS)
    if unknown:
        raise UnknownBoundError(f"unknown bound id(s): {sorted(unknown)}")
    return tuple(b for b in ALL_BOUND_IDS if b in wanted)


def _chi_missing(spec: BoundSpec, inv_g: InvariantSet, inv_gbar: InvariantSet) -> bool:
    if not spec.needs_chi:
        return False
    if inv_g.chi is None:
        return True
    needs_both = spec.id in ("THM1_CHI_FORM", "NG_CHI_SUM", "NG_CHI_PROD")
    return needs_both and inv_g.chi_complement is None


def eval_raw(spec: BoundSpec, inv_g: InvariantSet, inv_gbar: InvariantSet,
             tol: float = SLACK_TOL):
    """Light-weight evaluation for sweep loops.

    Returns (reason, quantity, rhs, slack, holds, violated, eq_sides);
    skipped entries have reason set and everything else None/False.
    """
    reason = spec.applies(inv_g)
    if reason is None and _chi_missing(spec, inv_g, inv_gbar):
        reason = "chromatic number capped"
    if reason is not None:
        return (reason, None, None, None, True, False, ())

    quantity = spec.quantity(inv_g, inv_gbar)
    sides = spec.sides
    side0 = sides[0]
    rhs = side0.rhs(inv_g, inv_gbar)
    slack = rhs - quantity if side0.kind == "upper" else quantity - rhs
    holds = True
    violated = False
    eq_sides = ()
    if slack < -tol:
        holds = False
        if not (side0.strict and -slack <= EQUALITY_TOL):
            violated = True
    if -EQUALITY_TOL <= slack <= EQUALITY_TOL:
        eq_sides = (side0.kind,)
    if len(sides) > 1:
        side1 = sides[1]
        rhs1 = side1.rhs(inv_g, inv_gbar)
        slack1 = rhs1 - quantity if side1.kind == "upper" else quantity - rhs1
        if slack1 < -tol:
            holds = False
            if not (side1.strict and -slack1 <= EQUALITY_TOL):
                violated = True
        if -EQUALITY_TOL <= slack1 <= EQUALITY_TOL:
            eq_sides = eq_sides + (side1.kind,)
        if slack1 < slack:
            slack, rhs = slack1, rhs1
    return (None, quantity, rhs, slack, holds, violated, eq_sides)


def evaluate_bound(bound_id: str, inv_g: InvariantSet,
                   inv_gbar: InvariantSet | None = None,
                   tol: float = SLACK_TOL) -> BoundCheck:
    """Instantiate one catalog entry on one graph."""
    spec = CATALOG.get(bound_id)
    if spec is None:
        raise UnknownBoundError(bound_id)
    if spec.needs_complement and inv_gbar is None:
        raise ValueError(f"{bound_id} is a Nordhaus-Gaddum bound; complement "
                         "invariants are required")
    if inv_gbar is None:
        inv_gbar = inv_g

    reason, quantity, rhs, slack, holds, violated, eq_sides = eval_raw(
        spec, inv_g, inv_gbar, tol)
    if reason is not None:
        return BoundCheck(bound=spec.id, g6=inv_g.g6, lhs=None, rhs=None,
                          slack=None, holds=True, equality=False,
                          skipped=True, reason=reason, status=spec.status)
    note = None
    if spec.id == "CONJ7_TF" and not inv_g.connected:
        note = "disconnected"
    binding = None
    if len(spec.sides) > 1:
        s0 = spec.sides[0]
        r0 = s0.rhs(inv_g, inv_gbar)
        sl0 = r0 - quantity if s0.kind == "upper" else quantity - r0
        binding = s0.kind if sl0 == slack else spec.sides[1].kind
    return BoundCheck(
        bound=spec.id, g6=inv_g.g6, lhs=quantity, rhs=rhs, slack=slack,
        holds=holds, equality=bool(eq_sides) and holds, skipped=False,
        reason=None, violated=violated, side=binding,
        equality_sides=eq_sides, status=spec.status, note=note)


def check_graph(g: Graph, ids=None, *, chi_cap: int = 16,
                zero_tol: float | None = None, tol: float = SLACK_TOL,
                with_tags: bool = False) -> list[BoundCheck]:
    """Evaluate the requested bounds on one graph, catalog order.

    Invariants of the graph and its complement are computed once and shared.
    """
    bound_ids = resolve_bound_ids(ids)
    inv_g, inv_gbar = invariant_pair(g, chi_cap=chi_cap, zero_tol=zero_tol,
                                     with_tags=with_tags)
    return [evaluate_bound(b, inv_g, inv_gbar, tol=tol) for b in bound_ids]
