"""Extremal families: Mycielski towers, joins, and the gadget that pins
the spectrum-set size bound.

Vertex numbering is fixed so tests can address vertices directly: the
Mycielskian of an n-vertex graph keeps 0..n-1, puts the twin of i at
n+i, and the apex at 2n.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits
from .coloring import ProperColoring, chromatic_number, _partitions_exact


@dataclass(frozen=True)
class ColoredConstruction:
    """A generated graph bundled with its intended colouring."""

    graph: Graph
    canonical: ProperColoring
    params: tuple[int, ...]

    def to_json(self) -> dict:
        from .graphs import write_graph6
        return {
            "graph6": write_graph6(self.graph),
            "n": self.graph.n,
            "params": list(self.params),
            "classes": self.canonical.to_vertex_lists(),
        }


def mycielskian(g: Graph) -> Graph:
    """Twin every vertex against its neighbourhood and add an apex over
    the twins.  Keeps the clique number (for n >= 2) while pushing the
    chromatic number up by one."""
    n = g.n
    if 2 * n + 1 > 64:
        raise ValueError("Mycielskian would exceed the 64-vertex cap")
    edges = list(g.edges())
    for v in range(n):
        edges.extend((n + v, u) for u in bits(g.adj[v]))
        edges.append((n + v, 2 * n))
    return Graph.from_edges(2 * n + 1, edges)


def mycielski_graph(k: int) -> ColoredConstruction:
    """The classic tower: level 2 is a single edge, level k the
    Mycielskian of level k-1.  Level k is triangle-free with chromatic
    number k on 3*2^(k-2) - 1 vertices.

    The bundled colouring is the inherited one: twins copy their
    original's class, each apex opens a new class, giving k classes.
    """
    if k < 2:
        raise ValueError("tower starts at level 2")
    g = Graph.from_edges(2, [(0, 1)])
    classes = [1, 2]  # masks {0}, {1}
    level = 2
    while level < k:
        n = g.n
        g = mycielskian(g)
        classes = [c | c << n for c in classes]
        classes.append(1 << 2 * n)
        level += 1
    return ColoredConstruction(g, ProperColoring.from_classes(classes), (k,))


def generalized_mycielski(k: int, s: int) -> ColoredConstruction:
    """Tower grown from a complete base: level s is K_s, each later level
    the Mycielskian of the previous one.

    The bundled colouring reuses colours instead of inheriting: at level
    j the twins all take the fresh class j, the apex drops into class s.
    Classes 1..s-1 therefore stay the original base vertices forever,
    which is what makes any set showing exactly those colours a clique.
    """
    if s < 2:
        raise ValueError("base clique needs at least 2 vertices")
    if k < s:
        raise ValueError("level must reach the base size")
    g = Graph.complete(s)
    classes = [1 << v for v in range(s)]
    level = s
    while level < k:
        n = g.n
        g = mycielskian(g)
        twins = ((1 << n) - 1) << n
        classes.append(twins)
        classes[s - 1] |= 1 << 2 * n
        level += 1
    return ColoredConstruction(g, ProperColoring.from_classes(classes), (k, s))


def dirac_join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all edges across; chromatic numbers add."""
    n = a.n + b.n
    if n > 64:
        raise ValueError("join would exceed the 64-vertex cap")
    edges = list(a.edges())
    edges.extend((a.n + u, a.n + v) for u, v in b.edges())
    edges.extend((u, a.n + w) for u in range(a.n) for w in range(b.n))
    return Graph.from_edges(n, edges)


def spectrum_gadget(base: Graph, extra: int) -> tuple[Graph, ProperColoring]:
    """The base graph plus `extra` isolated vertices, coloured with an
    optimal colouring of the base and one fresh singleton class per new
    vertex.

    No set of `extra` vertices has a closed neighbourhood showing every
    colour here (each isolated vertex monopolizes its colour but sees
    nothing else), which makes the spectrum-set size bound k+1 tight.
    """
    if base.n == 0:
        raise ValueError("base graph must be non-empty")
    if extra < 1:
        raise ValueError("need at least one extra vertex")
    n = base.n + extra
    if n > 64:
        raise ValueError("gadget would exceed the 64-vertex cap")
    g = Graph(n, base.adj + (0,) * extra)
    chi = chromatic_number(base)
    base_classes = next(iter(_partitions_exact(base, chi))).classes
    classes = list(base_classes) + [1 << (base.n + i) for i in range(extra)]
    return g, ProperColoring.from_classes(classes)
