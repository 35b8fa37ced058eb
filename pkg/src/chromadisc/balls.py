"""Colouring balls in graphs with one forbidden cycle length.

With cycles of length ell+1 absent, every distance layer around a
vertex is (ell-1)-degenerate, so each layer greedily takes ell colours;
alternating two disjoint palettes by layer parity colours the whole
radius-floor(ell/2) ball with 2*ell colours.  The theta search and the
max-cut extraction below are the supporting tools for probing that
layer structure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import (Graph, BallView, ball, bits, find_cycle_of_length,
                     subset_degeneracy)
from .certificates import GuaranteeViolation

THETA_SEARCH_CAP = 20


class ForbiddenCycleError(ValueError):
    """The graph contains the cycle length it was promised not to."""

    def __init__(self, length: int, cycle: tuple[int, ...]):
        super().__init__(f"graph contains a {length}-cycle: {cycle}")
        self.length = length
        self.cycle = cycle


@dataclass(frozen=True)
class BallColoring:
    """Proper colouring of a radius-floor(ell/2) ball with parity palettes.

    colors[v] is the colour of v, -1 outside the ball.  Even-distance
    layers use 0..ell-1, odd layers ell..2*ell-1.
    """

    center: int
    radius: int
    ell: int
    colors: tuple[int, ...]

    @property
    def even_palette(self) -> range:
        return range(0, self.ell)

    @property
    def odd_palette(self) -> range:
        return range(self.ell, 2 * self.ell)

    def colours_used(self) -> int:
        return len({c for c in self.colors if c >= 0})

    def to_json(self) -> dict:
        return {
            "center": self.center,
            "radius": self.radius,
            "colors": [c if c >= 0 else None for c in self.colors],
        }


@dataclass(frozen=True)
class ThetaWitness:
    """A long cycle plus a chord: cycle lists the vertices in order, the
    chord joins two non-consecutive ones."""

    cycle: tuple[int, ...]
    chord: tuple[int, int]

    def is_valid(self, g: Graph, min_cycle: int) -> bool:
        c = self.cycle
        m = len(c)
        if m < min_cycle or len(set(c)) != m:
            return False
        if not all(g.has_edge(c[i], c[(i + 1) % m]) for i in range(m)):
            return False
        a, b = self.chord
        if a not in c or b not in c or not g.has_edge(a, b):
            return False
        ia, ib = c.index(a), c.index(b)
        gap = (ib - ia) % m
        return gap not in (0, 1, m - 1)

    def to_json(self) -> dict:
        return {"cycle": list(self.cycle), "chord": list(self.chord)}


# -- layer structure -------------------------------------------------------


def _refuse_forbidden_cycle(g: Graph, ell: int):
    witness = find_cycle_of_length(g, ell + 1)
    if witness is not None:
        raise ForbiddenCycleError(ell + 1, witness)


def layer_degeneracy_report(g: Graph, v: int, ell: int,
                            skip_cycle_check: bool = False) -> list[tuple[int, int]]:
    """(layer, degeneracy) for each distance layer 1..floor(ell/2).

    Both parities of the forbidden length ell+1 force the same cap
    ell-1 on every listed layer (2t+1 forbidden gives 2t-1 with
    ell = 2t, and 2t+2 forbidden gives 2t with ell = 2t+1).
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if not skip_cycle_check:
        _refuse_forbidden_cycle(g, ell)
    t = ell // 2
    bv = ball(g, v, t)
    return [(r, subset_degeneracy(g, bv.shell(r))) for r in range(1, t + 1)]


def colour_ball(g: Graph, v: int, ell: int,
                skip_cycle_check: bool = False) -> BallColoring:
    """Properly colour the radius-floor(ell/2) ball around v with at most
    2*ell colours, provided g has no (ell+1)-cycle.

    Each layer is coloured greedily along its reverse degeneracy peeling
    order inside a palette of size ell chosen by layer parity; layers
    two apart share a palette but never touch, adjacent layers use
    disjoint palettes, so properness only needs the in-layer greedy.
    A layer refusing to fit its palette is a loud stop: it would
    contradict the degeneracy cap.
    """
    if ell < 2:
        raise ValueError("ell must be at least 2")
    if not 0 <= v < g.n:
        raise ValueError(f"centre {v} out of range")
    if not skip_cycle_check:
        _refuse_forbidden_cycle(g, ell)
    t = ell // 2
    bv = ball(g, v, t)
    colors = [-1] * g.n
    for r in range(t + 1):
        layer = bv.shell(r)
        if not layer:
            continue
        offset = 0 if r % 2 == 0 else ell
        if subset_degeneracy(g, layer) > ell - 1:
            raise GuaranteeViolation(
                f"layer {r} around {v} has degeneracy above {ell - 1}")
        alive = layer
        order = []
        while alive:
            w = min(bits(alive), key=lambda u: ((g.adj[u] & alive).bit_count(), u))
            order.append(w)
            alive &= ~(1 << w)
        for w in reversed(order):
            used = {colors[u] for u in bits(g.adj[w] & layer) if colors[u] >= 0}
            c = offset
            while c in used:
                c += 1
            if c >= offset + ell:
                raise GuaranteeViolation(
                    f"greedy overflowed the parity palette on layer {r}")
            colors[w] = c
    out = BallColoring(center=v, radius=t, ell=ell, colors=tuple(colors))
    _validate_ball_coloring(g, bv, out)
    return out


def _validate_ball_coloring(g: Graph, bv: BallView, bc: BallColoring):
    for w in bits(bv.ball):
        if bc.colors[w] < 0:
            raise GuaranteeViolation(f"ball vertex {w} left uncoloured")
        for u in bits(g.adj[w] & bv.ball):
            if bc.colors[u] == bc.colors[w]:
                raise GuaranteeViolation(f"colour clash on edge {w}-{u}")
    if bc.colours_used() > 2 * bc.ell:
        raise GuaranteeViolation("ball colouring exceeded 2*ell colours")


# -- theta subgraphs ----------------------------------------------------------


def find_theta_subgraph(g: Graph, k: int,
                        bipartite_only: bool = False) -> Optional[ThetaWitness]:
    """A cycle of length >= 2k carrying a chord, or None.

    Exhaustive DFS over simple cycles anchored at their smallest vertex,
    chord scan per cycle; first witness in scan order wins.  With
    bipartite_only, a witness must stay two-colourable, i.e. an even
    cycle whose chord splits it into two odd arcs.  Refuses graphs above
    20 vertices: the cycle space is what it is.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if g.n > THETA_SEARCH_CAP:
        raise ValueError(
            f"theta search refused above {THETA_SEARCH_CAP} vertices")

    for s in range(g.n):
        allowed = g.vertices >> s << s
        found = _theta_from(g, s, allowed, [s], 1 << s, 2 * k, bipartite_only)
        if found is not None:
            return found
    return None


def _theta_from(g, s, allowed, path, used, min_len, bipartite_only):
    v = path[-1]
    if len(path) >= min_len and g.adj[v] >> s & 1 and path[1] < v:
        witness = _chord_in_cycle(g, path, bipartite_only)
        if witness is not None:
            return witness
    for u in bits(g.adj[v] & allowed & ~used):
        path.append(u)
        found = _theta_from(g, s, allowed, path, used | (1 << u), min_len,
                            bipartite_only)
        if found is not None:
            return found
        path.pop()
    return None


def _chord_in_cycle(g, cycle, bipartite_only) -> Optional[ThetaWitness]:
    m = len(cycle)
    for i in range(m):
        for j in range(i + 2, m):
            if i == 0 and j == m - 1:
                continue  # consecutive around the wrap
            if g.has_edge(cycle[i], cycle[j]):
                if bipartite_only and (m % 2 or (j - i) % 2 == 0):
                    continue  # an arc of even length closes an odd cycle
                return ThetaWitness(tuple(cycle), (cycle[i], cycle[j]))
    return None


# -- max-cut bipartite extraction ----------------------------------------------


@dataclass(frozen=True)
class BipartiteCut:
    """Result of the flip local search plus peeling.

    side_a/side_b partition the kept vertices (host ids); graph is the
    kept cut subgraph (cross edges only) relabelled ascending, and
    flips/peels record how much work the search did.
    """

    side_a: int
    side_b: int
    graph: Graph
    flips: int
    peels: int

    @property
    def kept(self) -> int:
        return self.side_a | self.side_b


def bipartite_min_degree_subgraph(g: Graph) -> BipartiteCut:
    """Local-search max cut, then peel low cross-degree vertices.

    Start from the parity-of-id cut; while some vertex has more
    same-side than cross neighbours, flip the smallest such vertex (each
    flip grows the cut, so at most |E| flips).  Then repeatedly drop
    vertices whose cross-degree inside the kept set falls below
    ceil(min_degree(g)/2).  When min_degree(g) >= 2t+1 the result is
    non-empty with minimum degree >= t+1 in the cut subgraph.
    """
    side_b = 0
    for v in range(1, g.n, 2):
        side_b |= 1 << v
    side_a = g.vertices & ~side_b

    flips = 0
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            mine = side_a if side_a >> v & 1 else side_b
            cross = g.adj[v] & ~mine
            same = g.adj[v] & mine & ~(1 << v)
            if same.bit_count() > cross.bit_count():
                side_a ^= 1 << v
                side_b ^= 1 << v
                flips += 1
                improved = True
                break

    threshold = -(-g.min_degree() // 2)  # ceil
    kept = g.vertices
    peels = 0
    while True:
        drop = 0
        for v in bits(kept):
            mine = side_a if side_a >> v & 1 else side_b
            cross_deg = (g.adj[v] & kept & ~mine).bit_count()
            if cross_deg < threshold:
                drop |= 1 << v
        if not drop:
            break
        kept &= ~drop
        peels += drop.bit_count()

    cut_edges = []
    verts = list(bits(kept))
    index = {v: i for i, v in enumerate(verts)}
    for v in verts:
        mine = side_a if side_a >> v & 1 else side_b
        for u in bits(g.adj[v] & kept & ~mine):
            if u > v:
                cut_edges.append((index[v], index[u]))
    return BipartiteCut(side_a=side_a & kept, side_b=side_b & kept,
                        graph=Graph.from_edges(len(verts), cut_edges),
                        flips=flips, peels=peels)
