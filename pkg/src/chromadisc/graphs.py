"""Immutable bitset-backed graphs and the I/O, distance, and sparsity
primitives the rest of the package is built on.

Vertices are 0..n-1 and every vertex set is a plain int bitmask, so
subset work stays allocation-free.  The hard cap of 64 vertices keeps
masks inside one machine word on CPython and is far above the scale the
exact searches can handle anyway.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 64

# Exhaustive enumeration walks 2^(n choose 2) edge masks; 7 is the last
# size where that is even remotely sane (2^21 graphs).
MAX_EXHAUSTIVE_N = 7


class Graph6Error(ValueError):
    """Raised for malformed graph6 records."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adj[v] is the neighbour bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"neighbour of {v} out of range")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    # -- small accessors -------------------------------------------------

    @property
    def vertices(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def closed_neighbourhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def neighbourhood_of_set(self, s: int) -> int:
        """N(S): union of neighbourhoods, S itself not implied."""
        m = 0
        for v in bits(s):
            m |= self.adj[v]
        return m

    def closed_neighbourhood_of_set(self, s: int) -> int:
        return self.neighbourhood_of_set(s) | s

    def min_degree(self) -> int:
        return min((self.degree(v) for v in range(self.n)), default=0)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def complement(self) -> "Graph":
        full = self.vertices
        return Graph(self.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(self.adj)))

    def is_complete(self) -> bool:
        return all(row == self.vertices & ~(1 << v) for v, row in enumerate(self.adj))

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.complete_multipartite((a, b))

    @classmethod
    def complete_multipartite(cls, sizes: Iterable[int]) -> "Graph":
        sizes = tuple(sizes)
        if any(s < 1 for s in sizes):
            raise ValueError("part sizes must be positive")
        n = sum(sizes)
        parts = []
        start = 0
        for s in sizes:
            parts.append(((1 << s) - 1) << start)
            start += s
        full = (1 << n) - 1
        adj = []
        for p in parts:
            for _ in range(p.bit_count()):
                adj.append(full & ~p)
        return cls(n, tuple(adj))

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)


# -- graph6 --------------------------------------------------------------
#
# Record layout: a size header, then the upper triangle of the adjacency
# matrix in the order x(0,1) x(0,2) x(1,2) x(0,3) ... packed MSB-first
# into 6-bit groups, each group stored as one printable byte chr(63+g).


def _g6_size_header(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # 63..258047 take a '~' marker plus three 6-bit digits
    return "~" + "".join(chr(63 + (n >> shift & 0x3F)) for shift in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 record (no trailing newline)."""
    out = [_g6_size_header(g.n)]
    group = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            group = group << 1 | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + group))
                group = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (group << (6 - nbits))))
    return "".join(out)


def parse_graph6(record: str) -> Graph:
    """Decode one graph6 record; raises Graph6Error on malformed input."""
    if record.startswith(">>graph6<<"):
        record = record[len(">>graph6<<"):]
    record = record.rstrip("\r\n")
    if not record:
        raise Graph6Error("empty graph6 record")
    data = [ord(c) - 63 for c in record]
    if any(d < 0 or d > 63 for d in data):
        raise Graph6Error(f"character out of graph6 range in {record!r}")
    if data[0] == 63:  # '~' size marker
        if len(data) >= 4 and data[1] == 63:
            raise Graph6Error("8-byte size header exceeds supported range")
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 record has {n} vertices, limit is {MAX_VERTICES}")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise Graph6Error(f"graph6 record length mismatch for n={n}")
    adj = [0] * n
    idx = 0
    for group in body:
        for bitpos in range(5, -1, -1):
            bit = group >> bitpos & 1
            if idx >= need:
                if bit:
                    raise Graph6Error("nonzero padding bits in graph6 record")
                continue
            if bit:
                # idx-th cell of the column-ordered upper triangle
                i, j = _triangle_cell(idx)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


def _triangle_cell(idx: int) -> tuple[int, int]:
    # invert idx = j*(j-1)/2 + i with i < j
    j = 1
    while (j + 1) * j // 2 <= idx:
        j += 1
    return idx - j * (j - 1) // 2, j


def parse_graph6_file(text: str) -> list[Graph]:
    """Parse one record per non-empty line."""
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# -- edge-list text format ------------------------------------------------


def write_edge_list(g: Graph) -> str:
    """'n m' on the first line, then one 'u v' line per edge."""
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError("edge-list header must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Graph.from_edges(n, edges)


# -- subgraphs and components ---------------------------------------------


def induced_subgraph(g: Graph, vertex_set: int) -> Graph:
    """Induced subgraph on vertex_set, relabelled to 0..k-1 in ascending
    order of the original ids."""
    if vertex_set & ~g.vertices:
        raise ValueError("vertex set has bits outside the graph")
    verts = list(bits(vertex_set))
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for u in bits(g.adj[v] & vertex_set):
            adj[index[v]] |= 1 << index[u]
    return Graph(len(verts), tuple(adj))


def connected_components(g: Graph, within: Optional[int] = None) -> list[int]:
    """Component masks (ascending by smallest vertex) inside `within`."""
    todo = g.vertices if within is None else within
    comps = []
    while todo:
        start = todo & -todo
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v] & todo
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


# -- degeneracy ------------------------------------------------------------


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """Exact degeneracy plus its peeling order.

    Repeatedly removes a minimum-degree vertex (smallest id on ties); the
    returned value is the largest degree seen at removal time and the
    order lists vertices as removed.  Empty graph yields (0, []).
    """
    alive = g.vertices
    order = []
    d = 0
    while alive:
        best_v = -1
        best_deg = MAX_VERTICES + 1
        for v in bits(alive):
            dv = (g.adj[v] & alive).bit_count()
            if dv < best_deg:
                best_deg = dv
                best_v = v
        d = max(d, best_deg)
        order.append(best_v)
        alive &= ~(1 << best_v)
    return d, order


def subset_degeneracy(g: Graph, vertex_set: int) -> int:
    """Degeneracy of the induced subgraph, without relabelling."""
    alive = vertex_set
    d = 0
    while alive:
        best = min(bits(alive), key=lambda v: (g.adj[v] & alive).bit_count())
        d = max(d, (g.adj[best] & alive).bit_count())
        alive &= ~(1 << best)
    return d


# -- fixed-length cycle search ---------------------------------------------


def find_cycle_of_length(g: Graph, length: int) -> Optional[tuple[int, ...]]:
    """A simple cycle with exactly `length` vertices, or None.

    DFS over paths anchored at the smallest cycle vertex, with a
    BFS-distance prune: a partial path dies once the open end cannot get
    back to the anchor in the remaining number of steps.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    if length > g.n:
        return None
    for s in range(g.n):
        allowed = g.vertices >> s << s  # s and anything above it
        if (g.adj[s] & allowed).bit_count() < 2:
            continue
        dist = _bfs_dist(g, s, allowed)
        path = [s]
        if _extend_cycle(g, s, allowed, dist, path, 1 << s, length):
            return tuple(path)
    return None


def has_cycle_of_length(g: Graph, length: int) -> bool:
    return find_cycle_of_length(g, length) is not None


def _bfs_dist(g: Graph, source: int, allowed: int) -> list[int]:
    dist = [MAX_VERTICES + 1] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v] & allowed
        frontier = grow & ~seen
        for v in bits(frontier):
            dist[v] = d
        seen |= frontier
    return dist


def _extend_cycle(g, s, allowed, dist, path, used, length) -> bool:
    v = path[-1]
    remaining = length - len(path)
    if remaining == 0:
        # close only in one direction: second vertex below the last
        return bool(g.adj[v] >> s & 1) and path[1] < v
    for u in bits(g.adj[v] & allowed & ~used):
        if dist[u] > remaining:
            continue
        path.append(u)
        if _extend_cycle(g, s, allowed, dist, path, used | (1 << u), length):
            return True
        path.pop()
    return False


def cycle_lengths_present(g: Graph, max_length: Optional[int] = None) -> set[int]:
    """Set of cycle lengths realized in g (exhaustive, desk scale only)."""
    top = g.n if max_length is None else min(max_length, g.n)
    return {L for L in range(3, top + 1) if has_cycle_of_length(g, L)}


# -- balls and shells --------------------------------------------------------


@dataclass(frozen=True)
class BallView:
    """Distance decomposition around a centre: shells[i] is the set of
    vertices at distance exactly i, ball their union."""

    center: int
    radius: int
    shells: tuple[int, ...]
    ball: int

    def shell(self, r: int) -> int:
        return self.shells[r] if r < len(self.shells) else 0


def ball(g: Graph, v: int, radius: int) -> BallView:
    if not 0 <= v < g.n:
        raise ValueError(f"centre {v} out of range")
    if radius < 0:
        raise ValueError("radius must be non-negative")
    shells = [1 << v]
    seen = 1 << v
    for _ in range(radius):
        grow = 0
        for u in bits(shells[-1]):
            grow |= g.adj[u]
        shells.append(grow & ~seen)
        seen |= shells[-1]
    return BallView(v, radius, tuple(shells), seen)


# -- structured predicates ----------------------------------------------------


def is_complete_multipartite(g: Graph) -> bool:
    """True iff the complement is a disjoint union of cliques."""
    co = g.complement()
    for comp in connected_components(co):
        for v in bits(comp):
            if (co.adj[v] & comp) != comp & ~(1 << v):
                return False
    return True


# -- exhaustive labeled enumeration -------------------------------------------


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n choose 2) labeled graphs on n vertices, in edge-mask order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_EXHAUSTIVE_N:
        raise ValueError(
            f"exhaustive enumeration refused for n={n} (limit {MAX_EXHAUSTIVE_N})")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m ^= low
        yield Graph(n, tuple(adj))
