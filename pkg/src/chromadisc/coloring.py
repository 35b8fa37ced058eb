"""Exact colouring engine.

Everything here is exact and deterministic: chromatic numbers come from
a DSATUR-style branch-and-bound between a greedy clique lower bound and
a greedy-degeneracy upper bound, partitions into independent classes are
streamed in canonical first-occurrence order, and all tie-breaks go to
the smallest index so repeated runs reproduce the same witnesses.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import Graph, ball, bits, degeneracy, induced_subgraph


@dataclass(frozen=True)
class ProperColoring:
    """A partition of a vertex set into independent classes.

    Colour names are quotiented away: the partition is the object, and
    classes are kept sorted by their smallest vertex.  Build through
    from_classes/from_labels to get validation and canonical order;
    internal enumeration code constructs instances directly because it
    already produces canonical, disjoint classes.
    """

    classes: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.classes)

    @property
    def support(self) -> int:
        m = 0
        for c in self.classes:
            m |= c
        return m

    @classmethod
    def from_classes(cls, classes) -> "ProperColoring":
        cl = [int(c) for c in classes]
        if any(c == 0 for c in cl):
            raise ValueError("empty colour class")
        seen = 0
        for c in cl:
            if seen & c:
                raise ValueError("colour classes overlap")
            seen |= c
        cl.sort(key=lambda c: c & -c)
        return cls(tuple(cl))

    @classmethod
    def from_labels(cls, labels) -> "ProperColoring":
        groups: dict[int, int] = {}
        for v, c in enumerate(labels):
            if c is None or c < 0:
                continue
            groups[c] = groups.get(c, 0) | 1 << v
        return cls.from_classes(groups.values())

    def labels(self, n: int) -> list[int]:
        """Class index per vertex, -1 outside the support."""
        out = [-1] * n
        for i, c in enumerate(self.classes):
            for v in bits(c):
                out[v] = i
        return out

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if c >> v & 1:
                return i
        raise KeyError(f"vertex {v} not coloured")

    def to_vertex_lists(self) -> list[list[int]]:
        return [list(bits(c)) for c in self.classes]


def is_proper(g: Graph, coloring: ProperColoring, require_full: bool = True) -> bool:
    """Classes independent in g; with require_full they must cover V."""
    seen = 0
    for c in coloring.classes:
        if c & ~g.vertices:
            return False
        if seen & c:
            return False
        seen |= c
        for v in bits(c):
            if g.adj[v] & c:
                return False
    return seen == g.vertices if require_full else True


@dataclass(frozen=True)
class ColoringStats:
    chi: int
    omega: int
    psi: Optional[int]
    degeneracy: int


# -- exact chromatic numbers -------------------------------------------------


class SubsetChi:
    """Memoized exact chromatic numbers for subsets of one host graph.

    Decomposes each queried subset into connected components and solves
    those with branch-and-bound; both component and union results land
    in the same per-host cache, which is what makes the discrepancy
    searches (thousands of overlapping subsets of one graph) cheap.
    """

    def __init__(self, g: Graph):
        self.g = g
        self._memo: dict[int, int] = {0: 0}

    def chi(self, vertex_set: int) -> int:
        if vertex_set & ~self.g.vertices:
            raise ValueError("vertex set has bits outside the graph")
        hit = self._memo.get(vertex_set)
        if hit is not None:
            return hit
        comps = _components_in(self.g, vertex_set)
        if len(comps) == 1:
            val = self._chi_connected(vertex_set)
        else:
            val = 0
            for comp in comps:
                cv = self._memo.get(comp)
                if cv is None:
                    cv = self._chi_connected(comp)
                    self._memo[comp] = cv
                val = max(val, cv)
        self._memo[vertex_set] = val
        return val

    def _chi_connected(self, mask: int) -> int:
        size = mask.bit_count()
        if size <= 2:
            return size  # connected: K1 or K2
        lb = _greedy_clique(self.g, mask).bit_count()
        ub_classes = greedy_colour_subset(self.g, mask)
        ub = len(ub_classes)
        k = lb
        while k < ub:
            if _colour_subset_exact(self.g, mask, k) is not None:
                break
            k += 1
        return k


def _components_in(g: Graph, vertex_set: int) -> list[int]:
    todo = vertex_set
    comps = []
    while todo:
        comp = todo & -todo
        frontier = comp
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v] & todo
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        todo &= ~comp
    return comps


def _greedy_clique(g: Graph, mask: int) -> int:
    """Greedy clique inside mask: repeatedly take the highest-degree
    candidate (smallest id on ties).  Lower bound, not optimum."""
    clique = 0
    cand = mask
    while cand:
        best = max(bits(cand), key=lambda v: ((g.adj[v] & cand).bit_count(), -v))
        clique |= 1 << best
        cand &= g.adj[best]
    return clique


def greedy_colour_subset(g: Graph, mask: int) -> list[int]:
    """Greedy colouring along the reverse degeneracy peeling order of the
    induced subgraph; returns class masks.  Uses at most degeneracy+1
    colours."""
    alive = mask
    order = []
    while alive:
        v = min(bits(alive), key=lambda u: ((g.adj[u] & alive).bit_count(), u))
        order.append(v)
        alive &= ~(1 << v)
    classes: list[int] = []
    for v in reversed(order):
        for i, c in enumerate(classes):
            if not c & g.adj[v]:
                classes[i] |= 1 << v
                break
        else:
            classes.append(1 << v)
    return classes


def _colour_subset_exact(g: Graph, mask: int, k: int) -> Optional[list[int]]:
    """Proper k-colouring of g[mask] as class masks, or None.

    DSATUR order: branch on the uncoloured vertex seeing the most
    distinct classes, ties to higher remaining degree then smaller id.
    New classes are opened in one canonical way to kill colour symmetry.
    """
    if k < 0:
        return None
    if mask == 0:
        return []
    classes = [0] * k
    uncoloured = [mask]

    def pick() -> int:
        best = -1
        best_key = (-1, -1, 0)
        for v in bits(uncoloured[0]):
            sat = sum(1 for c in classes if c and c & g.adj[v])
            key = (sat, (g.adj[v] & uncoloured[0]).bit_count(), -v)
            if key > best_key:
                best_key = key
                best = v
        return best

    def go() -> bool:
        if not uncoloured[0]:
            return True
        v = pick()
        bit = 1 << v
        uncoloured[0] ^= bit
        opened_new = False
        for i in range(k):
            if classes[i] == 0:
                if opened_new:
                    break  # all empty classes are interchangeable
                opened_new = True
            elif classes[i] & g.adj[v]:
                continue
            classes[i] |= bit
            if go():
                return True
            classes[i] ^= bit
        uncoloured[0] ^= bit
        return False

    if go():
        return [c for c in classes if c]
    return None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number; 0 for the empty graph."""
    return SubsetChi(g).chi(g.vertices)


def subset_chromatic_number(g: Graph, vertex_set: int) -> int:
    return SubsetChi(g).chi(vertex_set)


def colour_subset_with_limit(g: Graph, mask: int, limit: int) -> Optional[list[int]]:
    """Proper colouring of g[mask] with at most `limit` classes, or None.

    Greedy on the degeneracy order first; falls back to the exact
    backtracker when greedy overshoots."""
    if limit < 0:
        raise ValueError("limit must be non-negative")
    classes = greedy_colour_subset(g, mask)
    if len(classes) <= limit:
        return classes
    return _colour_subset_exact(g, mask, limit)


def optimal_coloring(g: Graph) -> ProperColoring:
    """One chromatic colouring: the first partition in canonical stream
    order among those with chi(g) classes."""
    chi = chromatic_number(g)
    for pc in _partitions_exact(g, chi):
        return pc
    raise RuntimeError("unreachable: no partition with chi classes")


# -- cliques -----------------------------------------------------------------


def max_clique(g: Graph) -> int:
    """Mask of one maximum clique (first found in the deterministic scan)."""
    best = [0]

    def expand(r: int, cand: int):
        if not cand:
            if r.bit_count() > best[0].bit_count():
                best[0] = r
            return
        while cand:
            if r.bit_count() + cand.bit_count() <= best[0].bit_count():
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, cand & g.adj[v])
            cand ^= low

    expand(0, g.vertices)
    return best[0]


def clique_number(g: Graph) -> int:
    return max_clique(g).bit_count()


# -- partition streams ---------------------------------------------------------


def _partitions_exact(g: Graph, p: int) -> Iterator[ProperColoring]:
    """All partitions of V(g) into exactly p independent classes, each
    once, classes in first-occurrence (= ascending minimum vertex) order."""
    n = g.n
    if p == 0:
        if n == 0:
            yield ProperColoring(())
        return
    if p > n:
        return
    classes: list[int] = []

    def place(v: int):
        if v == n:
            if len(classes) == p:
                yield ProperColoring(tuple(classes))
            return
        if len(classes) + (n - v) < p:
            return
        bit = 1 << v
        for i in range(len(classes)):
            if not classes[i] & g.adj[v]:
                classes[i] |= bit
                yield from place(v + 1)
                classes[i] ^= bit
        if len(classes) < p:
            classes.append(bit)
            yield from place(v + 1)
            classes.pop()

    yield from place(0)


def enumerate_proper_partitions(g: Graph, p: int) -> Iterator[ProperColoring]:
    """Stream the proper partitions of g with exactly p classes.

    Out-of-range p (below the chromatic number or above n) produces an
    empty stream after a warning rather than an exception, so sweep
    loops can overshoot harmlessly.
    """
    if p < chromatic_number(g) or p > g.n:
        warnings.warn(f"no proper partition of this graph into {p} classes",
                      stacklevel=2)
        return
    yield from _partitions_exact(g, p)


def all_proper_partitions(g: Graph) -> Iterator[ProperColoring]:
    """Every proper partition of g, any class count."""
    n = g.n
    if n == 0:
        yield ProperColoring(())
        return
    classes: list[int] = []

    def place(v: int):
        if v == n:
            yield ProperColoring(tuple(classes))
            return
        bit = 1 << v
        for i in range(len(classes)):
            if not classes[i] & g.adj[v]:
                classes[i] |= bit
                yield from place(v + 1)
                classes[i] ^= bit
        classes.append(bit)
        yield from place(v + 1)
        classes.pop()

    yield from place(0)


# -- local chromatic number ----------------------------------------------------


def psi_optimal_coloring(g: Graph) -> tuple[int, ProperColoring]:
    """Exact min over proper colourings of the largest closed-neighbourhood
    palette, with a witness colouring.

    Colourings with more than chi classes can win here, so the search
    walks every proper partition; a vertex's palette is final as soon as
    its closed neighbourhood is fully assigned, which gives the prune.
    """
    n = g.n
    if n == 0:
        raise ValueError("palette spread undefined on the empty graph")
    closed = [g.closed_neighbourhood(v) for v in range(n)]
    # vertices whose closed neighbourhood completes at index i
    final_at: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        final_at[closed[v].bit_length() - 1].append(v)

    seed = ProperColoring.from_classes(greedy_colour_subset(g, g.vertices))
    best = _palette_spread(g, seed, closed)
    witness = seed
    floor_val = clique_number(g)
    if best == floor_val:
        return best, witness

    classes: list[int] = []
    state = {"best": best, "witness": witness}

    def place(v: int, running: int):
        if state["best"] == floor_val:
            return
        if v == n:
            state["best"] = running
            state["witness"] = ProperColoring(tuple(classes))
            return
        bit = 1 << v
        options = len(classes)
        for i in range(options + 1):
            if i < options:
                if classes[i] & g.adj[v]:
                    continue
                classes[i] |= bit
            else:
                classes.append(bit)
            new_running = running
            ok = True
            for w in final_at[v]:
                pal = sum(1 for c in classes if c & closed[w])
                if pal >= state["best"]:
                    ok = False
                    break
                if pal > new_running:
                    new_running = pal
            if ok:
                place(v + 1, new_running)
            if i < options:
                classes[i] ^= bit
            else:
                classes.pop()

    place(0, 0)
    return state["best"], state["witness"]


def _palette_spread(g: Graph, coloring: ProperColoring, closed) -> int:
    return max(sum(1 for c in coloring.classes if c & closed[v]) for v in range(g.n))


def local_chromatic_number(g: Graph) -> int:
    """Minimum over proper colourings of max_v |colours on N[v]|."""
    return psi_optimal_coloring(g)[0]


def closed_palette_sizes(g: Graph, coloring: ProperColoring) -> list[int]:
    closed = [g.closed_neighbourhood(v) for v in range(g.n)]
    return [sum(1 for c in coloring.classes if c & closed[v]) for v in range(g.n)]


def coloring_stats(g: Graph, with_psi: bool = True) -> ColoringStats:
    psi = local_chromatic_number(g) if with_psi and g.n else None
    return ColoringStats(
        chi=chromatic_number(g),
        omega=clique_number(g),
        psi=psi,
        degeneracy=degeneracy(g)[0],
    )


# -- locality predicates ---------------------------------------------------------


def is_r_locally_s_colourable(g: Graph, s: int, r: int = 1) -> bool:
    """Every radius-r ball induces a subgraph with chromatic number <= s."""
    if s < 0 or r < 0:
        raise ValueError("s and r must be non-negative")
    cache = SubsetChi(g)
    return all(cache.chi(ball(g, v, r).ball) <= s for v in range(g.n))


def local_colourability(g: Graph, r: int = 1) -> int:
    """Smallest s such that g is r-locally s-colourable (0 when empty)."""
    cache = SubsetChi(g)
    return max((cache.chi(ball(g, v, r).ball) for v in range(g.n)), default=0)


def is_co_locally_s_colourable(g: Graph, s: int) -> bool:
    """chi(g[{u} union N(v)]) <= s for every ordered pair u != v."""
    if g.n < 2:
        return True
    cache = SubsetChi(g)
    for v in range(g.n):
        nb = g.adj[v]
        for u in range(g.n):
            if u == v:
                continue
            if cache.chi(nb | 1 << u) > s:
                return False
    return True


def co_local_colourability(g: Graph) -> int:
    """Smallest s for which is_co_locally_s_colourable holds."""
    if g.n < 2:
        return 0
    cache = SubsetChi(g)
    return max(cache.chi(g.adj[v] | 1 << u)
               for v in range(g.n) for u in range(g.n) if u != v)


# -- critical subgraphs ------------------------------------------------------------


def extract_critical_subgraph(g: Graph) -> Graph:
    """Vertex-critical subgraph with the same chromatic number.

    Single ascending pass: delete a vertex whenever the chromatic number
    survives; once a vertex refuses deletion it refuses forever, so one
    pass suffices.  Result is relabelled like induced_subgraph.
    """
    cache = SubsetChi(g)
    target = cache.chi(g.vertices)
    alive = g.vertices
    for v in range(g.n):
        bit = 1 << v
        if alive & bit and cache.chi(alive & ~bit) == target:
            alive &= ~bit
    return induced_subgraph(g, alive)


# -- random colour orders --------------------------------------------------------


def random_order_independent_set(g: Graph, coloring: ProperColoring, seed: int) -> int:
    """Vertices whose colour beats every neighbour's colour in a random
    ranking of the classes; always independent because the colouring is
    proper.  Returns a vertex mask."""
    if not is_proper(g, coloring):
        raise ValueError("colouring is not a proper full colouring of g")
    rng = random.Random(seed)
    ranks = list(range(coloring.p))
    rng.shuffle(ranks)
    label = coloring.labels(g.n)
    out = 0
    for v in range(g.n):
        rv = ranks[label[v]]
        if all(ranks[label[u]] > rv for u in bits(g.adj[v])):
            out |= 1 << v
    return out


def independent_set_frequencies(g: Graph, coloring: ProperColoring,
                                samples: int, base_seed: int = 0) -> list[float]:
    """Per-vertex frequency of landing in the random-order independent
    set across `samples` seeded draws."""
    label = coloring.labels(g.n)
    p = coloring.p
    counts = [0] * g.n
    nbrs = [list(bits(g.adj[v])) for v in range(g.n)]
    rng = random.Random(base_seed)
    ranks = list(range(p))
    for _ in range(samples):
        rng.shuffle(ranks)
        for v in range(g.n):
            rv = ranks[label[v]]
            if all(ranks[label[u]] > rv for u in nbrs[v]):
                counts[v] += 1
    return [c / samples for c in counts]
