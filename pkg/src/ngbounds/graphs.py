"""Graph representation, graph6 codec, named families and structural predicates.

Graphs are immutable: a vertex count ``n`` (1..64) plus the upper triangle of
the adjacency matrix packed into a single Python int.  Bit ``t`` of ``bits``
is the pair x(i,j) with t = j*(j-1)/2 + i for i < j, i.e. column-major order
x(0,1), x(0,2), x(1,2), x(0,3), ... -- the same order the graph6 format uses,
so codec and enumeration share one layout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

MAX_N = 64
MAX_GRAPH6_N = 62  # short-form graph6 only; long form is out of scope
ENUMERATION_CAP = 8

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed, truncated or unsupported graph6 input."""


class FamilyError(ValueError):
    """Invalid named-family parameters."""


def pair_index(i: int, j: int) -> int:
    """Triangle bit position of the vertex pair {i, j}."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def triangle_size(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True, slots=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_N}")
        if self.bits < 0 or self.bits >> triangle_size(self.n):
            raise ValueError("edge bits exceed the upper triangle")

    @property
    def m(self) -> int:
        return self.bits.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return bool(self.bits >> pair_index(i, j) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for j in range(1, self.n):
            base = j * (j - 1) // 2
            for i in range(j):
                if self.bits >> (base + i) & 1:
                    yield (i, j)

    def neighbor_masks(self) -> list[int]:
        """Adjacency rows as bitmasks over vertices (bit v of entry u = edge uv)."""
        masks = [0] * self.n
        bits = self.bits
        for j in range(1, self.n):
            base = j * (j - 1) // 2
            row = bits >> base & ((1 << j) - 1)
            masks[j] |= row
            while row:
                low = row & -row
                masks[low.bit_length() - 1] |= 1 << j
                row ^= low
        return masks

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.neighbor_masks()]

    def complement(self) -> "Graph":
        full = (1 << triangle_size(self.n)) - 1
        return Graph(self.n, self.bits ^ full)

    def with_edge(self, i: int, j: int, present: bool = True) -> "Graph":
        t = pair_index(i, j)
        if present:
            return Graph(self.n, self.bits | 1 << t)
        return Graph(self.n, self.bits & ~(1 << t))

    def delete_vertex(self, v: int) -> "Graph":
        """Induced subgraph on the other n-1 vertices (n >= 2)."""
        if self.n < 2:
            raise ValueError("cannot delete the only vertex")
        keep = [u for u in range(self.n) if u != v]
        bits = 0
        for a, i in enumerate(keep):
            for b in range(a + 1, len(keep)):
                if self.has_edge(i, keep[b]):
                    bits |= 1 << pair_index(a, b)
        return Graph(self.n - 1, bits)

    def adjacency_matrix(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def to_graph6(self) -> str:
        return to_graph6(self)

    def __repr__(self):
        return f"Graph(n={self.n}, g6={to_graph6(self)!r})" if self.n <= MAX_GRAPH6_N \
            else f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# graph6 codec (short form, bit-exact; see the format notes in the module doc)
# ---------------------------------------------------------------------------

def parse_graph6(line: str) -> Graph:
    """Decode one header-free graph6 line into a Graph."""
    text = line.rstrip("\r\n")
    if not text:
        raise Graph6Error("empty graph6 line")
    raw = text.encode("ascii", errors="replace")
    first = raw[0]
    if first == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    if not 63 <= first <= 126:
        raise Graph6Error(f"malformed graph6: leading byte {first} outside [63,126]")
    n = first - 63
    if n == 0:
        raise Graph6Error("graph6 encodes an empty vertex set; n >= 1 required")
    nbits = triangle_size(n)
    nbytes = (nbits + 5) // 6
    body = raw[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated graph6: need {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error("malformed graph6: trailing garbage after adjacency bits")
    bits = 0
    for t in range(nbits):
        byte = body[t // 6]
        if not 63 <= byte <= 126:
            raise Graph6Error(f"malformed graph6: data byte {byte} outside [63,126]")
        if (byte - 63) >> (5 - t % 6) & 1:
            bits |= 1 << t
    # padding bits beyond the triangle must be zero
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("malformed graph6: nonzero padding bits")
    return Graph(n, bits)


def to_graph6(g: Graph) -> str:
    """Minimal-length short-form graph6 encoding."""
    if g.n > MAX_GRAPH6_N:
        raise Graph6Error(f"unsupported size: graph6 short form caps at n={MAX_GRAPH6_N}")
    nbits = triangle_size(g.n)
    out = [g.n + 63]
    for c in range(0, nbits, 6):
        byte = 0
        for k in range(6):
            t = c + k
            if t < nbits and g.bits >> t & 1:
                byte |= 1 << (5 - k)
        out.append(byte + 63)
    return bytes(out).decode("ascii")


def graph_key(g: Graph) -> str:
    """Stable printable identifier: graph6 when encodable, hex bits beyond
    the short-form limit (n = 63, 64)."""
    if g.n <= MAX_GRAPH6_N:
        return to_graph6(g)
    return f"n{g.n}:{g.bits:x}"


def strip_graph6_header(line: str) -> str | None:
    """Drop an optional '>>graph6<<' prefix; None if nothing remains."""
    text = line.strip()
    if text.startswith(_HEADER):
        text = text[len(_HEADER):].strip()
    return text or None


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        text = strip_graph6_header(line)
        if text is not None:
            yield parse_graph6(text)


def complement(g: Graph) -> Graph:
    return g.complement()


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

FAMILY_KINDS = (
    "complete", "empty", "path", "cycle", "star",
    "complete_bipartite", "complete_split", "complete_multipartite",
    "paley", "join_clique_empty",
)


@dataclass(frozen=True, slots=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise FamilyError(f"unknown family kind {self.kind!r}")
        if not self.params or any(p <= 0 for p in self.params):
            raise FamilyError(f"{self.kind}: parameters must be positive integers")


def _edges_to_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    bits = 0
    for i, j in edges:
        bits |= 1 << pair_index(i, j)
    return Graph(n, bits)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def make_family(spec: FamilySpec) -> Graph:
    """Build a named-family graph from its parameter list."""
    kind, params = spec.kind, spec.params
    if kind == "complete":
        (n,) = params
        return Graph(n, (1 << triangle_size(n)) - 1)
    if kind == "empty":
        (n,) = params
        return Graph(n, 0)
    if kind == "path":
        (n,) = params
        return _edges_to_graph(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        (n,) = params
        if n < 3:
            raise FamilyError("cycle needs n >= 3")
        return _edges_to_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "star":
        (n,) = params
        return _edges_to_graph(n, ((0, i) for i in range(1, n)))
    if kind == "complete_bipartite":
        a, b = params
        return _edges_to_graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))
    if kind == "complete_multipartite":
        sizes = list(params)
        n = sum(sizes)
        part = []
        for p, s in enumerate(sizes):
            part.extend([p] * s)
        return _edges_to_graph(
            n, ((i, j) for j in range(n) for i in range(j) if part[i] != part[j]))
    if kind == "complete_split":
        n, alpha = params
        if not 1 <= alpha <= n - 1:
            raise FamilyError(f"complete_split requires 1 <= alpha <= n-1, got {alpha}")
        # clique on 0..n-alpha-1, independent set on the remaining alpha vertices
        clique = n - alpha
        edges = [(i, j) for j in range(clique) for i in range(j)]
        edges += [(i, j) for i in range(clique) for j in range(clique, n)]
        return _edges_to_graph(n, edges)
    if kind == "join_clique_empty":
        r, s = params
        return make_family(FamilySpec("complete_split", (r + s, s)))
    if kind == "paley":
        (p,) = params
        if not is_prime(p) or p % 4 != 1:
            raise FamilyError(f"paley requires a prime p = 1 (mod 4), got {p}")
        residues = {i * i % p for i in range(1, p)}
        return _edges_to_graph(p, ((i, j) for j in range(p) for i in range(j)
                                   if (i - j) % p in residues))
    raise FamilyError(f"unknown family kind {kind!r}")


def family(kind: str, *params: int) -> Graph:
    return make_family(FamilySpec(kind, tuple(params)))


# ---------------------------------------------------------------------------
# Streams
# ---------------------------------------------------------------------------

@dataclass
class GraphStream:
    """A finite, index-addressable source of graphs.

    Streams are partitionable into disjoint index ranges so workers can
    consume chunks independently; each item is yielded exactly once.
    """

    source: str                      # labeled | file | stdin | family-list | list
    _items: list | None = None       # decoded graphs or raw graph6 strings
    _n: int = 0                      # labeled enumeration order
    _lo: int = 0
    _hi: int = 0
    label: str = ""

    @property
    def count(self) -> int:
        if self.source == "labeled":
            return self._hi - self._lo
        return len(self._items)

    def __iter__(self) -> Iterator[Graph]:
        if self.source == "labeled":
            for bits in range(self._lo, self._hi):
                yield Graph(self._n, bits)
        elif self.source == "g6":
            for line in self._items:
                yield parse_graph6(line)
        else:
            yield from self._items

    def indexed(self) -> Iterator[tuple[int, Graph]]:
        """Yield (global stream index, graph); indices survive split()."""
        for k, g in enumerate(self):
            yield self._lo + k, g

    def split(self, chunks: int) -> list["GraphStream"]:
        total = self.count
        chunks = max(1, min(chunks, total)) if total else 1
        bounds = [total * k // chunks for k in range(chunks + 1)]
        out = []
        for lo, hi in zip(bounds, bounds[1:]):
            if lo == hi:
                continue
            if self.source == "labeled":
                out.append(GraphStream("labeled", _n=self._n,
                                       _lo=self._lo + lo, _hi=self._lo + hi,
                                       label=self.label))
            else:
                sub = GraphStream(self.source, _items=self._items[lo:hi], label=self.label)
                sub._lo = lo
                out.append(sub)
        return out or [self]


def enumerate_labeled(n: int, cap: int = ENUMERATION_CAP) -> GraphStream:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, in ascending bit order."""
    if n > cap:
        raise ValueError(
            f"labeled enumeration refused for n={n}: 2^{triangle_size(n)} graphs "
            f"exceeds the cap (n <= {cap}); supply a graph6 corpus instead")
    if n < 1:
        raise ValueError("n >= 1 required")
    return GraphStream("labeled", _n=n, _lo=0, _hi=1 << triangle_size(n),
                       label=f"labeled(n={n})")


def stream_from_graphs(graphs: Iterable[Graph], label: str = "list") -> GraphStream:
    return GraphStream("list", _items=list(graphs), label=label)


def stream_from_lines(lines: Iterable[str], label: str = "g6") -> GraphStream:
    items = []
    for line in lines:
        text = strip_graph6_header(line)
        if text is not None:
            items.append(text)
    return GraphStream("g6", _items=items, label=label)


def stream_from_file(path, label: str | None = None) -> GraphStream:
    with open(path, "r", encoding="ascii") as fh:
        return stream_from_lines(fh, label=label or str(path))


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class GraphProps:
    m: int
    degrees: tuple[int, ...]
    connected: bool
    triangle_free: bool
    bipartite: bool


def basic_props(g: Graph, masks: list[int] | None = None) -> GraphProps:
    """Edge count, degree list, connectivity, triangle-freeness, bipartiteness.

    Triangle detection intersects neighborhood bitsets, so it is exact; the
    2-coloring runs per component.
    """
    if masks is None:
        masks = g.neighbor_masks()
    degrees = tuple(m.bit_count() for m in masks)

    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= masks[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    connected = seen == (1 << g.n) - 1

    triangle_free = True
    for i, j in g.edges():
        if masks[i] & masks[j]:
            triangle_free = False
            break

    color = [-1] * g.n
    bipartite = True
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue and bipartite:
            u = queue.pop()
            mu = masks[u]
            while mu:
                low = mu & -mu
                v = low.bit_length() - 1
                mu ^= low
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    bipartite = False
                    break
        if not bipartite:
            break

    return GraphProps(g.m, degrees, connected, triangle_free, bipartite)


def _multipartite_parts(g: Graph, masks: list[int]) -> list[int] | None:
    """Part sizes when non-adjacency is an equivalence relation, else None."""
    reps: list[int] = []     # representative vertex per part
    sizes: list[int] = []
    for v in range(g.n):
        for k, r in enumerate(reps):
            if masks[v] == masks[r]:
                sizes[k] += 1
                break
        else:
            # new part: must see every earlier part (checking the rep suffices,
            # since part members share the rep's neighborhood)
            if any(not g.has_edge(v, r) for r in reps):
                return None
            reps.append(v)
            sizes.append(1)
    return sizes


def classify_structure(g: Graph, props: GraphProps | None = None,
                       masks: list[int] | None = None) -> frozenset[str]:
    """Structural tags used by equality characterizations.

    complete_multipartite requires at least two parts, so K1 and larger empty
    graphs carry no tag; complete_split additionally allows at most one part
    of size > 1.
    """
    if masks is None:
        masks = g.neighbor_masks()
    if props is None:
        props = basic_props(g, masks)
    tags = set()
    degs = props.degrees
    regular = len(set(degs)) == 1
    if regular:
        tags.add("regular")

    parts = _multipartite_parts(g, masks)
    if parts is not None and len(parts) >= 2:
        tags.add("complete_multipartite")
        if len(parts) == 2:
            tags.add("complete_bipartite")
        if sum(1 for s in parts if s > 1) <= 1:
            tags.add("complete_split")

    if props.bipartite and props.connected and g.n >= 2:
        color = [-1] * g.n
        color[0] = 0
        stack = [0]
        while stack:
            u = stack.pop()
            mu = masks[u]
            while mu:
                low = mu & -mu
                v = low.bit_length() - 1
                mu ^= low
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    stack.append(v)
        side = [{degs[v] for v in range(g.n) if color[v] == c} for c in (0, 1)]
        if all(len(s) == 1 for s in side):
            tags.add("semiregular_bipartite")

    if _is_conference_srg(g, props, masks):
        tags.add("conference_srg")
    return frozenset(tags)


def _is_conference_srg(g: Graph, props: GraphProps, masks: list[int]) -> bool:
    """SRG parameter check (4t+1, 2t, t-1, t) by common-neighbor counts."""
    n = g.n
    if n < 5 or n % 4 != 1:
        return False
    t = (n - 1) // 4
    if any(d != 2 * t for d in props.degrees):
        return False
    for j in range(n):
        for i in range(j):
            common = (masks[i] & masks[j]).bit_count()
            if common != (t - 1 if g.has_edge(i, j) else t):
                return False
    return True


def is_path_graph(g: Graph, props: GraphProps | None = None) -> bool:
    if props is None:
        props = basic_props(g)
    if not props.connected or props.m != g.n - 1:
        return False
    return g.n == 1 or max(props.degrees) <= 2


def is_complete_graph(g: Graph) -> bool:
    return g.m == triangle_size(g.n)
