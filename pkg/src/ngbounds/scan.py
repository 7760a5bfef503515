"""Sweep driver: stream graphs, evaluate the catalog, aggregate per bound.

Chunking is fixed by the stream alone, so aggregates, violation lists and
report bytes are identical for any worker count.  Full labeled enumerations
are processed as complement pairs: the lower half of the bit range owns each
(G, complement) pair, sharing one invariant computation between the two.
Violation candidates pass a high-precision recheck before being reported.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field

from . import highprec
from .bounds import (CONJECTURE, SLACK_TOL, BoundCheck, CATALOG, eval_raw,
                     resolve_bound_ids)
from .graphs import (Graph, GraphStream, is_complete_graph, is_path_graph,
                     triangle_size)
from .invariants import CHI_DEFAULT_CAP, invariant_pair
from .search import OBJECTIVE_FORMULAS
from .spectral import spectral_profile

EXIT_CLEAN = 0
EXIT_ERROR = 1
EXIT_CONJECTURE_VIOLATED = 2
EXIT_THEOREM_VIOLATED = 3

CERTIFY_EXAMPLE_CAP = 25
CHUNK_TARGET = 64

CERTIFY_IDS = ("LEMMA_MR", "THM_RANDIC", "CONJ6_RATIO", "CONJ5_CONF")


@dataclass(slots=True)
class BoundAggregate:
    bound: str
    evaluated: int = 0
    skipped: int = 0
    violations: int = 0
    equalities: int = 0
    min_slack: float | None = None
    argmin_index: int | None = None
    argmin_g6: str | None = None

    def update(self, skipped: bool, slack, equality: bool, violated: bool,
               index: int, g6: str) -> None:
        if skipped:
            self.skipped += 1
            return
        self.evaluated += 1
        if equality:
            self.equalities += 1
        if violated:
            self.violations += 1
        if (self.min_slack is None or slack < self.min_slack
                or (slack == self.min_slack and index < self.argmin_index)):
            self.min_slack = slack
            self.argmin_index = index
            self.argmin_g6 = g6

    def merge(self, other: "BoundAggregate") -> None:
        self.evaluated += other.evaluated
        self.skipped += other.skipped
        self.violations += other.violations
        self.equalities += other.equalities
        if other.min_slack is not None and (
                self.min_slack is None or other.min_slack < self.min_slack
                or (other.min_slack == self.min_slack
                    and other.argmin_index < self.argmin_index)):
            self.min_slack = other.min_slack
            self.argmin_index = other.argmin_index
            self.argmin_g6 = other.argmin_g6


@dataclass(slots=True)
class ObjectiveMax:
    value: float | None = None
    index: int | None = None
    g6: str | None = None

    def update(self, value: float, index: int, g6: str) -> None:
        if (self.value is None or value > self.value
                or (value == self.value and index < self.index)):
            self.value, self.index, self.g6 = value, index, g6

    def merge(self, other: "ObjectiveMax") -> None:
        if other.value is not None:
            self.update(other.value, other.index, other.g6)


@dataclass(slots=True)
class CertifyTally:
    """Equality-characterization bookkeeping over a sweep."""
    checked: int = 0
    randic_equalities: int = 0
    conj6_lower_equalities: int = 0
    conj6_upper_equalities: int = 0
    conj5_equalities: int = 0
    mismatches: list = field(default_factory=list)   # (index, g6, what)

    def merge(self, other: "CertifyTally") -> None:
        self.checked += other.checked
        self.randic_equalities += other.randic_equalities
        self.conj6_lower_equalities += other.conj6_lower_equalities
        self.conj6_upper_equalities += other.conj6_upper_equalities
        self.conj5_equalities += other.conj5_equalities
        self.mismatches.extend(other.mismatches)


@dataclass(slots=True)
class ScanOptions:
    bound_ids: tuple[str, ...]
    tol: float = SLACK_TOL
    chi_cap: int = CHI_DEFAULT_CAP
    zero_tol: float | None = None
    certify: bool = False
    track_objectives: tuple[str, ...] = ()
    keep_rows: bool = False
    reverify: bool = True


@dataclass(slots=True)
class ChunkResult:
    graphs: int = 0
    aggregates: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)   # (index, BoundCheck)
    rows: list = field(default_factory=list)
    trace_max_residual: float = 0.0
    objective_maxima: dict = field(default_factory=dict)
    certify: CertifyTally | None = None

    def merge(self, other: "ChunkResult") -> None:
        self.graphs += other.graphs
        for bid, agg in other.aggregates.items():
            mine = self.aggregates.get(bid)
            if mine is None:
                self.aggregates[bid] = agg
            else:
                mine.merge(agg)
        self.violations.extend(other.violations)
        self.rows.extend(other.rows)
        self.trace_max_residual = max(self.trace_max_residual,
                                      other.trace_max_residual)
        for oid, om in other.objective_maxima.items():
            mine = self.objective_maxima.get(oid)
            if mine is None:
                self.objective_maxima[oid] = om
            else:
                mine.merge(om)
        if other.certify is not None:
            if self.certify is None:
                self.certify = other.certify
            else:
                self.certify.merge(other.certify)


@dataclass
class ScanReport:
    command: str
    source: str
    bounds: tuple[str, ...]
    tol: float
    chi_cap: int
    seed: int | None
    graphs: int
    aggregates: dict
    violations: list
    rows: list
    trace_max_residual: float
    objective_maxima: dict
    certify: CertifyTally | None
    timestamp: float = field(default_factory=time.time, compare=False)

    @property
    def total_violations(self) -> int:
        return sum(a.violations for a in self.aggregates.values())

    @property
    def exit_status(self) -> int:
        worst = EXIT_CLEAN
        for chk in self.violations:
            if chk.status != CONJECTURE:
                return EXIT_THEOREM_VIOLATED
            worst = EXIT_CONJECTURE_VIOLATED
        return worst


def _certify_graph(tally: CertifyTally, index: int, g, inv_g,
                   raw_by_id: dict) -> None:
    """Equality-characterization checks against the structural tags."""
    from .spectral import exact_inertia

    tally.checked += 1
    tags = inv_g.tags
    # one positive eigenvalue iff connected complete multipartite
    if inv_g.connected:
        pi = exact_inertia(g)[0]
        if (pi == 1) != ("complete_multipartite" in tags):
            tally.mismatches.append((index, inv_g.g6, "pi=1 vs complete_multipartite"))

    raw = raw_by_id.get("LEMMA_MR")
    if raw is not None and raw[0] is None:
        semireg = "regular" in tags or "semiregular_bipartite" in tags
        if bool(raw[6]) != semireg:
            tally.mismatches.append((index, inv_g.g6, "LEMMA_MR equality vs (semi)regular"))

    raw = raw_by_id.get("THM_RANDIC")
    if raw is not None and raw[0] is None:
        eq = bool(raw[6]) and raw[4]
        tally.randic_equalities += eq
        if eq != ("complete_bipartite" in tags):
            tally.mismatches.append((index, inv_g.g6, "THM_RANDIC equality vs complete_bipartite"))

    raw = raw_by_id.get("CONJ6_RATIO")
    if raw is not None and raw[0] is None:
        lo = "lower" in raw[6]
        hi = "upper" in raw[6]
        tally.conj6_lower_equalities += lo
        tally.conj6_upper_equalities += hi
        if lo != is_path_graph(g):
            tally.mismatches.append((index, inv_g.g6, "CONJ6 lower equality vs path"))
        if hi != is_complete_graph(g):
            tally.mismatches.append((index, inv_g.g6, "CONJ6 upper equality vs complete"))

    # n=1 pins the conference floor at 0 = 0 structurally; conference
    # parameters (4t+1, 2t, t-1, t) need t >= 1, so exempt that one graph
    raw = raw_by_id.get("CONJ5_CONF")
    if raw is not None and raw[0] is None and raw[6] and raw[4] and inv_g.n > 1:
        tally.conj5_equalities += 1
        if "conference_srg" not in tags:
            tally.mismatches.append((index, inv_g.g6, "CONJ5 equality off conference graph"))


def _raw_to_check(bid: str, status: str, g6: str, raw) -> BoundCheck:
    reason, quantity, rhs, slack, holds, violated, eq_sides = raw
    if reason is not None:
        return BoundCheck(bound=bid, g6=g6, lhs=None, rhs=None, slack=None,
                          holds=True, equality=False, skipped=True,
                          reason=reason, status=status)
    return BoundCheck(bound=bid, g6=g6, lhs=quantity, rhs=rhs, slack=slack,
                      holds=holds, equality=bool(eq_sides) and holds,
                      skipped=False, reason=None, violated=violated,
                      equality_sides=eq_sides, status=status)


def _process_graph(res: ChunkResult, index: int, g: Graph, gbar: Graph,
                   inv_g, inv_gbar, specs, opts: ScanOptions,
                   objectives) -> None:
    res.graphs += 1
    residual = abs(inv_g.s_plus + inv_g.s_minus - 2.0 * inv_g.m)
    if residual > res.trace_max_residual:
        res.trace_max_residual = residual

    raw_by_id = {} if opts.certify else None
    for bid, spec in specs:
        raw = eval_raw(spec, inv_g, inv_gbar, opts.tol)
        violated = raw[5]
        if violated and opts.reverify:
            chk = highprec.reverify_violation(g, gbar, bid, inv_g, inv_gbar,
                                              opts.tol)
            raw = (None, chk.lhs, chk.rhs, chk.slack, chk.holds, chk.violated,
                   chk.equality_sides)
            violated = chk.violated
            if violated:
                res.violations.append((index, chk))
        elif violated:
            res.violations.append((index, _raw_to_check(bid, spec.status,
                                                        inv_g.g6, raw)))
        res.aggregates[bid].update(raw[0] is not None, raw[3],
                                   bool(raw[6]) and raw[4], violated,
                                   index, inv_g.g6)
        if opts.keep_rows:
            res.rows.append(_raw_to_check(bid, spec.status, inv_g.g6, raw))
        if raw_by_id is not None and bid in CERTIFY_IDS:
            raw_by_id[bid] = raw

    for oid, fn in objectives:
        res.objective_maxima[oid].update(fn(inv_g, inv_gbar), index, inv_g.g6)
    if opts.certify:
        _certify_graph(res.certify, index, g, inv_g, raw_by_id)


def _new_result(opts: ScanOptions) -> ChunkResult:
    res = ChunkResult()
    res.aggregates = {b: BoundAggregate(b) for b in opts.bound_ids}
    res.objective_maxima = {o: ObjectiveMax() for o in opts.track_objectives}
    if opts.certify:
        res.certify = CertifyTally()
    return res


def scan_chunk(chunk, opts: ScanOptions) -> ChunkResult:
    """Evaluate one chunk descriptor; pure function of its arguments."""
    res = _new_result(opts)
    specs = [(b, CATALOG[b]) for b in opts.bound_ids]
    objectives = [(o, OBJECTIVE_FORMULAS[o]) for o in opts.track_objectives]

    kind = chunk[0]
    if kind == "paired":
        _, n, lo, hi = chunk
        full = (1 << triangle_size(n)) - 1
        for bits in range(lo, hi):
            g = Graph(n, bits)
            gbar = Graph(n, full ^ bits)
            inv_g, inv_gbar = invariant_pair(g, chi_cap=opts.chi_cap,
                                             zero_tol=opts.zero_tol,
                                             with_tags=opts.certify)
            _process_graph(res, bits, g, gbar, inv_g, inv_gbar, specs, opts,
                           objectives)
            _process_graph(res, full ^ bits, gbar, g, inv_gbar, inv_g, specs,
                           opts, objectives)
    else:
        stream: GraphStream = chunk[1]
        for index, g in stream.indexed():
            gbar = g.complement()
            inv_g, inv_gbar = invariant_pair(g, chi_cap=opts.chi_cap,
                                             zero_tol=opts.zero_tol,
                                             with_tags=opts.certify)
            _process_graph(res, index, g, gbar, inv_g, inv_gbar, specs, opts,
                           objectives)
    return res


def _scan_worker(args):
    return scan_chunk(*args)


def _resolve_jobs(jobs: int | None) -> int:
    # more processes than cores is allowed: results never depend on the
    # worker count, only wall time does
    if jobs is None or jobs < 1:
        return 1
    return min(jobs, 32)


def _make_chunks(stream: GraphStream) -> list:
    """Chunk descriptors; fixed count so results never depend on the pool."""
    nbits = triangle_size(stream._n) if stream.source == "labeled" else 0
    if (stream.source == "labeled" and nbits > 0 and stream._lo == 0
            and stream._hi == 1 << nbits):
        half = 1 << (nbits - 1)
        pieces = min(CHUNK_TARGET, half)
        bounds = [half * k // pieces for k in range(pieces + 1)]
        return [("paired", stream._n, lo, hi)
                for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    return [("plain", c) for c in stream.split(CHUNK_TARGET)]


def run_scan(stream: GraphStream, ids=None, *, jobs: int = 1,
             tol: float = SLACK_TOL, chi_cap: int = CHI_DEFAULT_CAP,
             zero_tol: float | None = None, certify: bool = False,
             track_objectives=(), keep_rows: bool = False,
             reverify: bool = True, seed: int | None = None,
             command: str = "") -> ScanReport:
    """Check every streamed graph against every requested bound."""
    bound_ids = resolve_bound_ids(ids)
    opts = ScanOptions(bound_ids=bound_ids, tol=tol, chi_cap=chi_cap,
                       zero_tol=zero_tol, certify=certify,
                       track_objectives=tuple(track_objectives),
                       keep_rows=keep_rows, reverify=reverify)
    jobs = _resolve_jobs(jobs)
    chunks = _make_chunks(stream)
    if jobs == 1 or len(chunks) == 1:
        results = [scan_chunk(c, opts) for c in chunks]
    else:
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_scan_worker, [(c, opts) for c in chunks])
    total = _new_result(opts)
    for res in results:
        total.merge(res)

    total.violations.sort(key=lambda iv: iv[0])
    violations = [chk for _, chk in total.violations]
    if total.certify is not None:
        total.certify.mismatches.sort(key=lambda t: t[0])
        del total.certify.mismatches[CERTIFY_EXAMPLE_CAP:]

    return ScanReport(
        command=command, source=stream.label, bounds=bound_ids, tol=tol,
        chi_cap=chi_cap, seed=seed, graphs=total.graphs,
        aggregates=total.aggregates, violations=violations,
        rows=total.rows, trace_max_residual=total.trace_max_residual,
        objective_maxima=total.objective_maxima, certify=total.certify)


# ---------------------------------------------------------------------------
# subgraph monotonicity scan
# ---------------------------------------------------------------------------

@dataclass(slots=True)
class SubgraphPair:
    index: int
    g6: str
    removed: str                 # "edge i-j" or "vertex v"
    g6_sub: str
    s_plus: float
    s_plus_sub: float

    @property
    def delta(self) -> float:
        return self.s_plus_sub - self.s_plus


@dataclass
class SubgraphScanReport:
    mode: str
    source: str
    margin: float
    graphs: int
    comparisons: int
    pairs: list
    timestamp: float = field(default_factory=time.time, compare=False)


def _s_plus(g: Graph) -> float:
    return spectral_profile(g)[1].s_plus


def _subgraph_chunk(chunk: GraphStream, mode: str, margin: float) -> tuple:
    pairs = []
    graphs = comparisons = 0
    for index, g in chunk.indexed():
        graphs += 1
        sp = _s_plus(g)
        subs: list[tuple[str, Graph]] = [
            (f"edge {i}-{j}", g.with_edge(i, j, False)) for i, j in g.edges()]
        if mode == "full" and g.n >= 2:
            subs += [(f"vertex {v}", g.delete_vertex(v)) for v in range(g.n)]
        for removed, h in subs:
            comparisons += 1
            if _s_plus(h) > sp + margin:
                # confirm at high precision before reporting
                sp_hp = highprec.s_plus_highprec(g)
                sph_hp = highprec.s_plus_highprec(h)
                if sph_hp > sp_hp + margin:
                    pairs.append(SubgraphPair(index, g.to_graph6(), removed,
                                              h.to_graph6(), sp_hp, sph_hp))
    return graphs, comparisons, pairs


def _subgraph_worker(args):
    return _subgraph_chunk(*args)


def subgraph_monotonicity_scan(stream: GraphStream, mode: str = "edge", *,
                               jobs: int = 1,
                               margin: float = 1e-9) -> SubgraphScanReport:
    """Find single-deletion subgraphs whose positive power sum increases.

    Over a corpus closed under the deletion step, any multi-step increase
    implies a single-step increase somewhere, so the one-step scan is
    existence-complete.
    """
    if mode not in ("edge", "full"):
        raise ValueError(f"mode must be 'edge' or 'full', got {mode!r}")
    jobs = _resolve_jobs(jobs)
    chunks = stream.split(max(CHUNK_TARGET, jobs * 4))
    if jobs == 1 or len(chunks) == 1:
        parts = [_subgraph_chunk(c, mode, margin) for c in chunks]
    else:
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_subgraph_worker,
                             [(c, mode, margin) for c in chunks])
    graphs = sum(p[0] for p in parts)
    comparisons = sum(p[1] for p in parts)
    pairs = [pair for p in parts for pair in p[2]]
    pairs.sort(key=lambda p: (p.index, p.removed))
    return SubgraphScanReport(mode=mode, source=stream.label, margin=margin,
                              graphs=graphs, comparisons=comparisons,
                              pairs=pairs)
