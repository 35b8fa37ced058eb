"""Batch verification of discrepancy bounds over graph corpora.

Each check id names one predicate over a graph and its computed stats.
Proven statements must never fail: a fail verdict is an implementation
bug and drives the exit code to 1.  Conjectures are never asserted;
they produce margins, and a negative margin becomes a counterexample
candidate only after the slow from-the-definition discrepancy agrees
(exit code 3).  Graphs outside a check's scope get verdict "na";
graphs inside scope but beyond a feasibility cap get "skip" with the
reason spelled out.
"""
from __future__ import annotations

import csv
import json
import os
import random
import time
import zlib
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Optional, Sequence

from .graphs import (Graph, degeneracy, enumerate_labeled_graphs,
                     has_cycle_of_length, induced_subgraph,
                     is_complete_multipartite, parse_graph6, subset_degeneracy,
                     write_graph6)
from .coloring import (SubsetChi, chromatic_number, clique_number,
                       enumerate_proper_partitions, local_chromatic_number,
                       local_colourability)
from .discrepancy import (chromatic_discrepancy, chromatic_discrepancy_bruteforce)
from .certificates import (GuaranteeViolation, LocalityError,
                           bounded_rainbow_cover, pigeonhole_vertex,
                           rainbow_closed_neighbourhood)
from .balls import colour_ball, layer_degeneracy_report

PHI_CAP_DEFAULT = 10
PSI_CAP = 10
LOCAL_S_CAP = 32
PARTITION_EXHAUSTIVE_N = 5
PARTITION_SAMPLE_PER_P = 150
COVER_BOUND_N_CAP = 6
COVER_BOUND_K_CAP = 2

PROVEN_CHECKS = ("thm1.1", "thm1.2", "thm1.8", "thm1.9", "thm3.3",
                 "prop2.1", "prop2.2", "lem3.4", "lem4.3", "lem4.4",
                 "lem5.1", "lem5.3", "thm7.1", "lem7.3")
CONJECTURE_CHECKS = ("conj1.5", "conj1.7", "conj1.8")
ALL_CHECKS = PROVEN_CHECKS + CONJECTURE_CHECKS


@dataclass(frozen=True)
class CheckSpec:
    """One check to run: the id plus its locality and cycle parameters.

    s = None means each graph is measured at its own minimal locality
    (the strongest instance of the statement); an explicit s restricts
    scope to graphs that are locally s-colourable and uses that s.
    """

    check_id: str
    s: Optional[int] = None
    ell: int = 3

    def __post_init__(self):
        if self.check_id not in ALL_CHECKS:
            raise ValueError(f"unknown check id: {self.check_id!r}")
        if self.s is not None and self.s < 2:
            raise ValueError("s must be at least 2")
        if self.ell < 2:
            raise ValueError("ell must be at least 2")


class _Ctx:
    """Per-graph computation context shared by all checks."""

    def __init__(self, g: Graph, phi_cap: int):
        self.g = g
        self.phi_cap = phi_cap
        self.cache = SubsetChi(g) if g.n else None
        self._cycle = {}
        self.chi = self.cache.chi(g.vertices) if g.n else 0
        self.omega = clique_number(g) if g.n else 0
        self.local_s: Optional[int] = (
            local_colourability(g) if 0 < g.n <= LOCAL_S_CAP else None)
        self.psi: Optional[int] = (
            local_chromatic_number(g) if 0 < g.n <= PSI_CAP else None)
        self.phi: Optional[int] = None
        self.phi_p: Optional[int] = None
        if 0 < g.n <= phi_cap:
            res = chromatic_discrepancy(g)
            self.phi = res.phi
            self.phi_p = len(res.witness_coloring.classes)

    def cycle_free(self, length: int) -> bool:
        if length not in self._cycle:
            self._cycle[length] = not has_cycle_of_length(self.g, length)
        return self._cycle[length]

    def is_complete_on(self, size: int) -> bool:
        g = self.g
        return g.n == size and all(
            g.adj[v] == g.vertices & ~(1 << v) for v in range(g.n))


Outcome = tuple[str, str, Optional[int]]  # verdict, reason, margin


def _na(reason: str) -> Outcome:
    return "na", reason, None


def _skip(reason: str) -> Outcome:
    return "skip", reason, None


def _phi_or_skip(ctx: _Ctx) -> Optional[Outcome]:
    if ctx.phi is None:
        return _skip(f"discrepancy infeasible above n={ctx.phi_cap}")
    return None


def _effective_s(ctx: _Ctx, spec: CheckSpec) -> tuple[Optional[int], Optional[Outcome]]:
    """Locality parameter for this graph, or the outcome ruling it out."""
    if ctx.local_s is None:
        return None, _skip(f"locality measurement capped at n={LOCAL_S_CAP}")
    if spec.s is None:
        return max(ctx.local_s, 2), None
    if ctx.local_s > spec.s:
        return None, _na(f"not locally {spec.s}-colourable")
    return spec.s, None


# -- proven bounds on phi ---------------------------------------------------


def _check_thm1_1(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    if not ctx.cycle_free(3):
        return _na("not triangle-free")
    gate = _phi_or_skip(ctx)
    if gate:
        return gate
    margin = ctx.phi - (ctx.chi - 2)
    ok = ctx.chi - 2 <= ctx.phi <= ctx.chi - 1
    return ("pass" if ok else "fail"), "", margin


def _check_thm1_2(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    s, out = _effective_s(ctx, spec)
    if out:
        return out
    if not 6 * ctx.chi < 11 * s + 16:
        return _na("chromatic number outside the statement's range")
    gate = _phi_or_skip(ctx)
    if gate:
        return gate
    margin = ctx.phi - (ctx.chi - s)
    return ("pass" if margin >= 0 else "fail"), "", margin


def _check_thm1_8(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    if not ctx.cycle_free(4):
        return _na("contains a 4-cycle")
    if ctx.is_complete_on(3):
        return _skip("excluded by the statement")
    gate = _phi_or_skip(ctx)
    if gate:
        return gate
    margin = ctx.phi - (ctx.chi - 2)
    return ("pass" if margin >= 0 else "fail"), "", margin


def _check_thm1_9(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    ell = spec.ell
    if ell < 3:
        return _na("statement needs ell >= 3")
    if not ctx.cycle_free(ell + 1):
        return _na(f"contains a {ell + 1}-cycle")
    if ctx.is_complete_on(ell):
        return _skip("excluded by the statement")
    if not 3 * ctx.chi < 5 * ell + 2:
        return _na("chromatic number outside the statement's range")
    gate = _phi_or_skip(ctx)
    if gate:
        return gate
    margin = ctx.phi - (ctx.chi - ell + 1)
    return ("pass" if margin >= 0 else "fail"), "", margin


# -- structural statements ----------------------------------------------------


def _iter_partitions_budgeted(g: Graph, p_lo: int, p_hi: int,
                              budget: Optional[int]):
    """Partitions for each p in [p_lo, p_hi]; at most budget per p when
    one is given (enumeration order, so deterministic)."""
    truncated = False
    for p in range(p_lo, p_hi + 1):
        count = 0
        for pc in enumerate_proper_partitions(g, p):
            if budget is not None and count >= budget:
                truncated = True
                break
            count += 1
            yield p, pc
    if truncated:
        raise _Truncated


class _Truncated(Exception):
    pass


def _default_budget(g: Graph) -> Optional[int]:
    return None if g.n <= PARTITION_EXHAUSTIVE_N else PARTITION_SAMPLE_PER_P


def _partition_sweep(ctx: _Ctx, p_lo: int, p_hi: int, body: Callable,
                     budget: Optional[int]) -> Outcome:
    note = ""
    try:
        for p, pc in _iter_partitions_budgeted(ctx.g, p_lo, p_hi, budget):
            bad = body(p, pc)
            if bad:
                return bad
    except _Truncated:
        note = f"sampled first {budget} partitions per class count"
    return "pass", note, None


def _check_thm3_3(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    if ctx.g.n > COVER_BOUND_N_CAP:
        return _skip(f"partition sweep capped at n={COVER_BOUND_N_CAP}")
    s, out = _effective_s(ctx, spec)
    if out:
        return out

    def body(p, pc):
        try:
            bounded_rainbow_cover(ctx.g, pc, s, ctx.cache)
        except (GuaranteeViolation, LocalityError) as e:
            return "fail", f"p={p}: {e}", None
        return None

    hi = min(ctx.chi + COVER_BOUND_K_CAP, ctx.g.n)
    return _partition_sweep(ctx, ctx.chi, hi, body, budget=None)


def _check_prop2_1(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n < 2:
        return _na("needs at least two vertices")
    gate = _phi_or_skip(ctx)
    if gate:
        return gate
    g = ctx.g
    rng = random.Random(zlib.crc32(write_graph6(g).encode()))
    size = rng.randint(1, g.n - 1)
    mask = 0
    for v in rng.sample(range(g.n), size):
        mask |= 1 << v
    h = induced_subgraph(g, mask)
    phi_h = chromatic_discrepancy(h).phi
    margin = ctx.phi - phi_h
    return ("pass" if margin >= 0 else "fail"), f"subgraph n={size}", margin


def _check_prop2_2(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    ell = spec.ell
    if not ctx.cycle_free(ell + 1):
        return _na(f"contains a {ell + 1}-cycle")
    for v in range(ctx.g.n):
        d = subset_degeneracy(ctx.g, ctx.g.adj[v])
        if d > ell - 2:
            return "fail", f"neighbourhood of {v} is {d}-degenerate", None
    return "pass", "", None


def _check_lem3_4(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")

    def body(p, pc):
        for u in range(len(pc.classes)):
            try:
                cert = rainbow_closed_neighbourhood(ctx.g, pc, u, ctx.cache)
            except GuaranteeViolation as e:
                return "fail", f"p={p} class={u}: {e}", None
            flags = cert.invariants(ctx.g, pc)
            if not all(flags.values()):
                broken = [k for k, ok in flags.items() if not ok]
                return "fail", f"p={p} class={u}: {broken}", None
        return None

    return _partition_sweep(ctx, ctx.chi, ctx.g.n, body,
                            budget=_default_budget(ctx.g))


def _check_lem4_3(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    if ctx.local_s is None:
        return _skip(f"locality measurement capped at n={LOCAL_S_CAP}")
    s = max(ctx.local_s, 2)
    bound = max(s, 3 * ctx.g.n // 5)
    return ("pass" if ctx.chi <= bound else "fail"), "", bound - ctx.chi


def _check_lem4_4(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    if ctx.local_s is None:
        return _skip(f"locality measurement capped at n={LOCAL_S_CAP}")
    s = max(ctx.local_s, 2)
    bound = max(s + 1, 6 * ctx.g.n // 11)
    return ("pass" if ctx.chi <= bound else "fail"), "", bound - ctx.chi


def _check_lem5_1(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    if ctx.local_s is None:
        return _skip(f"locality measurement capped at n={LOCAL_S_CAP}")
    s = max(ctx.local_s, 2)
    ok = ctx.chi * ctx.chi <= 2 * s * ctx.g.n
    return ("pass" if ok else "fail"), "", 2 * s * ctx.g.n - ctx.chi * ctx.chi


def _check_lem5_3(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")

    def body(p, pc):
        try:
            pigeonhole_vertex(ctx.g, pc, ctx.cache)
        except GuaranteeViolation as e:
            return "fail", f"p={p}: {e}", None
        return None

    return _partition_sweep(ctx, ctx.chi, ctx.g.n, body,
                            budget=_default_budget(ctx.g))


def _check_thm7_1(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    ell = spec.ell
    if not ctx.cycle_free(ell + 1):
        return _na(f"contains a {ell + 1}-cycle")
    for v in range(ctx.g.n):
        try:
            bc = colour_ball(ctx.g, v, ell, skip_cycle_check=True)
        except GuaranteeViolation as e:
            return "fail", f"centre {v}: {e}", None
        if bc.colours_used() > 2 * ell:
            return "fail", f"centre {v}: {bc.colours_used()} colours", None
    return "pass", "", None


def _check_lem7_3(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    ell = spec.ell
    if not ctx.cycle_free(ell + 1):
        return _na(f"contains a {ell + 1}-cycle")
    for v in range(ctx.g.n):
        for r, d in layer_degeneracy_report(ctx.g, v, ell, skip_cycle_check=True):
            if d > ell - 1:
                return "fail", f"layer {r} around {v} is {d}-degenerate", None
    return "pass", "", None


# -- conjectures (margins only, never asserted) -----------------------------------


def _conjecture_margin(ctx: _Ctx, bound: int, label: str) -> Outcome:
    gate = _phi_or_skip(ctx)
    if gate:
        return gate
    margin = ctx.phi - bound
    if margin >= 0:
        return "pass", "", margin
    slow = chromatic_discrepancy_bruteforce(ctx.g)
    if slow != ctx.phi:
        raise RuntimeError(
            f"discrepancy searchers disagree on {write_graph6(ctx.g)}: "
            f"{ctx.phi} vs {slow}")
    return "counterexample", f"{label}: margin {margin} re-verified", margin


def _check_conj1_5(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    s, out = _effective_s(ctx, spec)
    if out:
        return out
    return _conjecture_margin(ctx, ctx.chi - s, f"phi < chi - {s}")


def _check_conj1_7(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    ell = spec.ell
    if not ctx.cycle_free(ell + 1):
        return _na(f"contains a {ell + 1}-cycle")
    return _conjecture_margin(ctx, ctx.chi - ell, f"phi < chi - {ell}")


def _check_conj1_8(ctx: _Ctx, spec: CheckSpec) -> Outcome:
    if ctx.g.n == 0:
        return _na("empty graph")
    ell = spec.ell
    if ell < 3:
        return _na("statement needs ell >= 3")
    if not ctx.cycle_free(ell + 1):
        return _na(f"contains a {ell + 1}-cycle")
    if ctx.is_complete_on(ell):
        return _skip("excluded by the statement")
    return _conjecture_margin(ctx, ctx.chi - ell + 1, f"phi < chi - {ell} + 1")


_CHECK_FUNCTIONS: dict[str, Callable[[_Ctx, CheckSpec], Outcome]] = {
    "thm1.1": _check_thm1_1,
    "thm1.2": _check_thm1_2,
    "thm1.8": _check_thm1_8,
    "thm1.9": _check_thm1_9,
    "thm3.3": _check_thm3_3,
    "prop2.1": _check_prop2_1,
    "prop2.2": _check_prop2_2,
    "lem3.4": _check_lem3_4,
    "lem4.3": _check_lem4_3,
    "lem4.4": _check_lem4_4,
    "lem5.1": _check_lem5_1,
    "lem5.3": _check_lem5_3,
    "thm7.1": _check_thm7_1,
    "lem7.3": _check_lem7_3,
    "conj1.5": _check_conj1_5,
    "conj1.7": _check_conj1_7,
    "conj1.8": _check_conj1_8,
}


# -- corpus scanning -----------------------------------------------------------


def _scan_one(item: tuple[int, str, tuple, int]) -> dict:
    index, line, spec_blob, phi_cap = item
    specs = [CheckSpec(*t) for t in spec_blob]
    g = parse_graph6(line)
    ctx = _Ctx(g, phi_cap)
    record = {
        "index": index,
        "graph6": line,
        "n": g.n,
        "m": sum(g.degree(v) for v in range(g.n)) // 2,
        "chi": ctx.chi,
        "omega": ctx.omega,
        "psi": ctx.psi,
        "phi": ctx.phi,
        "degeneracy": degeneracy(g)[0] if g.n else 0,
        "local_s": ctx.local_s,
        "triangle_free": ctx.cycle_free(3) if g.n else True,
        "complete_multipartite": is_complete_multipartite(g) if g.n else False,
        "checks": {},
    }
    for spec in specs:
        verdict, reason, margin = _CHECK_FUNCTIONS[spec.check_id](ctx, spec)
        record["checks"][spec.check_id] = {
            "verdict": verdict, "reason": reason, "margin": margin}
    return record


@dataclass
class Report:
    checks: tuple[str, ...]
    params: dict
    records: list[dict] = field(default_factory=list)
    runtime_seconds: float = 0.0
    jobs: int = 1

    def summary(self) -> dict:
        counts = {cid: {"pass": 0, "fail": 0, "skip": 0, "na": 0,
                        "counterexample": 0} for cid in self.checks}
        failures, candidates = [], []
        for rec in self.records:
            for cid, res in rec["checks"].items():
                counts[cid][res["verdict"]] += 1
                entry = {"graph6": rec["graph6"], "check": cid,
                         "reason": res["reason"], "margin": res["margin"]}
                if res["verdict"] == "fail":
                    failures.append(entry)
                elif res["verdict"] == "counterexample":
                    candidates.append(entry)
        return {
            "graphs": len(self.records),
            "per_check": counts,
            "proven_failures": failures,
            "counterexample_candidates": candidates,
            "runtime_seconds": round(self.runtime_seconds, 3),
            "jobs": self.jobs,
        }

    def exit_code(self) -> int:
        s = self.summary()
        if s["proven_failures"]:
            return 1
        if s["counterexample_candidates"]:
            return 3
        return 0

    def to_json(self) -> dict:
        return {"params": self.params, "summary": self.summary(),
                "records": self.records}

    def write_json(self, path: str):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)

    def write_csv(self, path: str):
        fields = ["index", "graph6", "n", "m", "chi", "omega", "psi", "phi",
                  "degeneracy", "local_s", "triangle_free",
                  "complete_multipartite"]
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(fields + list(self.checks))
            for rec in self.records:
                row = [rec[f] for f in fields]
                row += [rec["checks"][cid]["verdict"] for cid in self.checks]
                w.writerow(row)


def default_jobs() -> int:
    env = os.environ.get("CHROMADISC_JOBS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def scan_corpus(lines: Sequence[str], checks: Sequence[CheckSpec],
                jobs: int = 1, phi_cap: int = PHI_CAP_DEFAULT) -> Report:
    """Run every check on every graph; verdict order follows input order
    no matter how many workers run."""
    if not checks:
        raise ValueError("no checks requested")
    seen = set()
    for spec in checks:
        if spec.check_id in seen:
            raise ValueError(f"duplicate check id: {spec.check_id}")
        seen.add(spec.check_id)
    spec_blob = tuple((s.check_id, s.s, s.ell) for s in checks)
    items = [(i, line, spec_blob, phi_cap) for i, line in enumerate(lines)]
    start = time.monotonic()
    if jobs <= 1:
        records = [_scan_one(item) for item in items]
    else:
        chunk = max(1, len(items) // (jobs * 8))
        with Pool(jobs) as pool:
            records = list(pool.imap(_scan_one, items, chunksize=chunk))
    report = Report(
        checks=tuple(s.check_id for s in checks),
        params={"s": checks[0].s, "ell": checks[0].ell, "phi_cap": phi_cap},
        records=records,
        runtime_seconds=time.monotonic() - start,
        jobs=jobs,
    )
    return report


def exhaustive_corpus(n: int) -> list[str]:
    """graph6 lines for every labeled graph on exactly n vertices."""
    return [write_graph6(g) for g in enumerate_labeled_graphs(n)]


def read_corpus(path: str) -> list[str]:
    with open(path) as fh:
        return [ln.strip() for ln in fh if ln.strip()]


# -- conjecture hunting --------------------------------------------------------


@dataclass
class HuntFindings:
    conjecture: str
    ell: int
    budget: int
    seed: int
    attempts: int = 0
    accepted: int = 0
    skipped_excluded: int = 0
    margins: list[int] = field(default_factory=list)
    candidates: list[dict] = field(default_factory=list)
    runtime_seconds: float = 0.0

    def exit_code(self) -> int:
        return 3 if self.candidates else 0

    def to_json(self) -> dict:
        hist = {}
        for m in self.margins:
            hist[m] = hist.get(m, 0) + 1
        return {
            "conjecture": self.conjecture,
            "ell": self.ell,
            "budget": self.budget,
            "seed": self.seed,
            "attempts": self.attempts,
            "accepted": self.accepted,
            "skipped_excluded": self.skipped_excluded,
            "margin_histogram": {str(k): hist[k] for k in sorted(hist)},
            "min_margin": min(self.margins) if self.margins else None,
            "candidates": self.candidates,
            "runtime_seconds": round(self.runtime_seconds, 3),
        }


def counterexample_hunt(ell: int, conjecture: str = "conj1.8",
                        budget: int = 200, seed: int = 0,
                        n_min: int = 4, n_max: int = 9) -> HuntFindings:
    """Rejection-sample random graphs without (ell+1)-cycles and record
    the margin of each against the requested conjecture.

    A negative margin is only reported as a candidate after the
    from-the-definition discrepancy confirms the fast search; at that
    point it is a finding worth publishing, not a test failure.
    """
    if conjecture not in ("conj1.7", "conj1.8"):
        raise ValueError("conjecture must be conj1.7 or conj1.8")
    if ell < (3 if conjecture == "conj1.8" else 2):
        raise ValueError(f"ell too small for {conjecture}")
    if not 1 <= n_min <= n_max <= PHI_CAP_DEFAULT:
        raise ValueError(f"need 1 <= n_min <= n_max <= {PHI_CAP_DEFAULT}")
    rng = random.Random(seed)
    out = HuntFindings(conjecture=conjecture, ell=ell, budget=budget, seed=seed)
    start = time.monotonic()
    max_attempts = budget * 500
    while out.accepted < budget and out.attempts < max_attempts:
        out.attempts += 1
        n = rng.randint(n_min, n_max)
        p_edge = rng.uniform(0.1, 0.5)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p_edge]
        g = Graph.from_edges(n, edges)
        if has_cycle_of_length(g, ell + 1):
            continue
        if conjecture == "conj1.8" and g.n == ell and all(
                g.adj[v] == g.vertices & ~(1 << v) for v in range(g.n)):
            out.skipped_excluded += 1
            continue
        out.accepted += 1
        chi = chromatic_number(g)
        phi = chromatic_discrepancy(g).phi
        bound = chi - ell if conjecture == "conj1.7" else chi - ell + 1
        margin = phi - bound
        out.margins.append(margin)
        if margin < 0:
            slow = chromatic_discrepancy_bruteforce(g)
            if slow != phi:
                raise RuntimeError(
                    f"discrepancy searchers disagree on {write_graph6(g)}")
            out.candidates.append({
                "graph6": write_graph6(g), "n": g.n, "chi": chi,
                "phi": phi, "margin": margin})
    out.runtime_seconds = time.monotonic() - start
    return out
