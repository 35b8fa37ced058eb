"""Chromatic discrepancy of colourings and graphs, exactly.

The discrepancy of a proper colouring is the largest gap between the
number of colours an induced subgraph shows and its chromatic number;
the discrepancy of a graph is the minimum of that over its colourings.
Two reductions carry all the searches here:

  * per colouring, only rainbow vertex sets matter - any induced
    subgraph can be thinned to one vertex per colour without lowering
    its colour span or raising its chromatic number;
  * per graph, the minimum can be taken over partitions directly, since
    min over p-class colourings of (p - cheapest full-spectrum cover)
    and the defining min over colourings agree.

Everything funnels through one SubsetChi cache per host graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, bits
from .coloring import (ProperColoring, SubsetChi, _greedy_clique,
                       _partitions_exact, all_proper_partitions, is_proper)


@dataclass(frozen=True)
class RainbowSet:
    """A vertex set holding at most one vertex of each colour class."""

    vertices: int
    coloring: ProperColoring

    def is_valid(self, g: Graph) -> bool:
        if self.vertices & ~g.vertices:
            return False
        return all((c & self.vertices).bit_count() <= 1
                   for c in self.coloring.classes)

    def spans_all_colours(self) -> bool:
        return all(c & self.vertices for c in self.coloring.classes)


@dataclass(frozen=True)
class DiscrepancyResult:
    """Exact graph discrepancy with a checkable witness.

    witness_coloring attains the minimum; witness_set is a cheapest
    full-spectrum cover of it, so phi = p - chi(g[witness_set]) and
    k = p - chi(g)."""

    phi: int
    witness_coloring: ProperColoring
    witness_set: int
    k: int

    def to_json(self, g: Graph) -> dict:
        p = self.witness_coloring.p
        return {
            "phi": self.phi,
            "p": p,
            "f": p - self.phi,
            "witness_classes": self.witness_coloring.to_vertex_lists(),
            "witness_set": list(bits(self.witness_set)),
        }


@dataclass(frozen=True)
class FValueResult:
    """max over p-class colourings of the cheapest full-spectrum cover."""

    p: int
    f: int
    witness_coloring: ProperColoring
    witness_cover: int

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "witness_classes": self.witness_coloring.to_vertex_lists(),
            "witness_cover": list(bits(self.witness_cover)),
        }


# -- per-colouring searches -----------------------------------------------


def _require_proper(g: Graph, coloring: ProperColoring):
    if not is_proper(g, coloring):
        raise ValueError("not a proper full colouring of this graph")


def discrepancy_of_coloring(g: Graph, coloring: ProperColoring,
                            cache: Optional[SubsetChi] = None) -> tuple[int, RainbowSet]:
    """Exact colouring discrepancy and a maximizing rainbow set.

    Branches over classes in ascending size (skip the class or take one
    of its vertices); the running upper bound |X| + classes left - best
    clique inside X prunes.  Smallest-index choices everywhere, so the
    witness is deterministic.
    """
    _require_proper(g, coloring)
    if g.n == 0:
        raise ValueError("discrepancy undefined on the empty graph")
    cache = cache or SubsetChi(g)
    order = sorted(coloring.classes, key=lambda c: (c.bit_count(), c & -c))
    nclasses = len(order)
    best_val = -1
    best_mask = 0

    def walk(i: int, mask: int, size: int):
        nonlocal best_val, best_mask
        if i == nclasses:
            if size:
                val = size - cache.chi(mask)
                if val > best_val:
                    best_val = val
                    best_mask = mask
            return
        remaining = nclasses - i
        lb = max(1, _greedy_clique(g, mask).bit_count()) if mask else 1
        if size + remaining - lb <= best_val:
            return
        for v in bits(order[i]):
            walk(i + 1, mask | 1 << v, size + 1)
        walk(i + 1, mask, size)

    walk(0, 0, 0)
    return best_val, RainbowSet(best_mask, coloring)


def min_rainbow_cover_chromatic(g: Graph, coloring: ProperColoring,
                                cache: Optional[SubsetChi] = None) -> tuple[int, RainbowSet]:
    """Cheapest chromatic number of a set meeting every colour class.

    Any set spanning all p colours thins to a transversal (one vertex
    per class) without raising its chromatic number, so only the
    product of the classes is scanned.
    """
    _require_proper(g, coloring)
    if coloring.p == 0:
        raise ValueError("colouring has no classes")
    cache = cache or SubsetChi(g)
    val, mask = _min_cover(g, list(coloring.classes), cache)
    return val, RainbowSet(mask, coloring)


def _min_cover(g: Graph, classes: list[int], cache: SubsetChi,
               abort_at: Optional[int] = None) -> tuple[int, int]:
    """(min chi over transversals, witness mask).

    Scans the cartesian product of the classes, smallest classes first.
    chi of a transversal cannot go below 1, so the scan stops as soon as
    it sees 1; with abort_at set it also gives up as soon as the running
    minimum is <= abort_at and reports (running value, 0) - callers use
    that when only values above a threshold are interesting.
    """
    order = sorted(classes, key=lambda c: (c.bit_count(), c & -c))
    k = len(order)
    best = None
    best_mask = 0

    def rec(i: int, mask: int):
        nonlocal best, best_mask
        if best is not None and (best == 1 or (abort_at is not None and best <= abort_at)):
            return
        if i == k:
            val = cache.chi(mask)
            if best is None or val < best:
                best = val
                best_mask = mask
            return
        for v in bits(order[i]):
            rec(i + 1, mask | 1 << v)

    rec(0, 0)
    if abort_at is not None and best is not None and best <= abort_at:
        return best, 0
    return best, best_mask


# -- f values and graph discrepancy --------------------------------------------


def f_value(g: Graph, p: int, cache: Optional[SubsetChi] = None) -> FValueResult:
    """Exact max over p-class colourings of the cheapest cover chromatic
    number.  Raises for p outside [chi(g), n]."""
    if g.n == 0:
        raise ValueError("f undefined on the empty graph")
    cache = cache or SubsetChi(g)
    chi = cache.chi(g.vertices)
    if not chi <= p <= g.n:
        raise ValueError(f"p={p} outside [chi, n] = [{chi}, {g.n}]")
    cap = min(p, chi)
    best = None
    best_col = None
    best_cover = 0
    for pc in _partitions_exact(g, p):
        val, mask = _min_cover(g, list(pc.classes), cache)
        if best is None or val > best:
            best, best_col, best_cover = val, pc, mask
            if best == cap:
                break
    return FValueResult(p=p, f=best, witness_coloring=best_col,
                        witness_cover=best_cover)


def chromatic_discrepancy(g: Graph) -> DiscrepancyResult:
    """Exact graph discrepancy by sweeping class counts.

    For each p from chi upward the sweep visits every p-class partition
    and keeps the global minimum of p - (cheapest cover chi).  Values of
    p with p - chi at or above the running best cannot improve it (a
    cover never costs more than chi), which ends the sweep; in
    particular no witness ever uses 2*chi or more classes.
    """
    if g.n == 0:
        raise ValueError("discrepancy undefined on the empty graph")
    cache = SubsetChi(g)
    chi = cache.chi(g.vertices)
    best: Optional[int] = None
    best_col = None
    best_cover = 0
    best_p = chi
    for p in range(chi, g.n + 1):
        if best is not None and p - chi >= best:
            break
        for pc in _partitions_exact(g, p):
            abort = None if best is None else p - best
            val, mask = _min_cover(g, list(pc.classes), cache, abort_at=abort)
            if mask == 0 and abort is not None and val is not None and val <= abort:
                continue  # aborted: cannot improve the running best
            gap = p - val
            if best is None or gap < best:
                best, best_col, best_cover, best_p = gap, pc, mask, p
                if best == 0:
                    break
        if best == 0:
            break
    result = DiscrepancyResult(phi=best, witness_coloring=best_col,
                               witness_set=best_cover, k=best_p - chi)
    # internal consistency: the witness must reproduce phi
    assert cache.chi(best_cover) == best_p - best
    assert 0 <= best <= max(chi - 1, 0)
    return result


# -- reference implementations --------------------------------------------------


def discrepancy_of_coloring_bruteforce(g: Graph, coloring: ProperColoring,
                                       cache: Optional[SubsetChi] = None) -> int:
    """Colouring discrepancy straight from the definition: max over all
    non-empty vertex subsets of (colour span - chi).  Exponential; kept
    as the cross-check the rainbow-set search is validated against and
    the re-verifier for counterexample candidates."""
    _require_proper(g, coloring)
    cache = cache or SubsetChi(g)
    best = 0
    for mask in range(1, g.vertices + 1):
        span = sum(1 for c in coloring.classes if c & mask)
        val = span - cache.chi(mask)
        if val > best:
            best = val
    return best


def chromatic_discrepancy_bruteforce(g: Graph) -> int:
    """Graph discrepancy from the definition: min over every proper
    partition of the subset-based colouring discrepancy."""
    if g.n == 0:
        raise ValueError("discrepancy undefined on the empty graph")
    cache = SubsetChi(g)
    return min(discrepancy_of_coloring_bruteforce(g, pc, cache)
               for pc in all_proper_partitions(g))
