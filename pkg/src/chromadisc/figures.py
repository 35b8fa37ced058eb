"""Figure rendering for scan reports and hunt findings.

Everything draws through the Agg backend straight to files; callers get
the list of paths written.
"""
from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  backend pinned first

VERDICT_COLOURS = {
    "pass": "#2a9d3f",
    "fail": "#d62728",
    "skip": "#8c8c8c",
    "na": "#d9d9d9",
    "counterexample": "#ff7f0e",
}


def _jitter(index: int) -> float:
    # deterministic pseudo-jitter in [-0.18, 0.18], stable across runs
    return ((index * 2654435761) % 1000) / 1000.0 * 0.36 - 0.18


def render_scan_figures(report, outdir: str) -> list[str]:
    """Two figures: discrepancy against chromatic number, and a stacked
    verdict bar per check."""
    os.makedirs(outdir, exist_ok=True)
    paths = []

    pts = [(r["chi"] + _jitter(r["index"]), r["phi"] + _jitter(r["index"] + 1), r)
           for r in report.records if r["phi"] is not None]
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    if pts:
        tri = [(x, y) for x, y, r in pts if r["triangle_free"]]
        rest = [(x, y) for x, y, r in pts if not r["triangle_free"]]
        if rest:
            ax.scatter(*zip(*rest), s=12, alpha=0.4, color="#5b7fa6",
                       label="with triangles", linewidths=0)
        if tri:
            ax.scatter(*zip(*tri), s=12, alpha=0.6, color="#c23b22",
                       label="triangle-free", linewidths=0)
        chis = [r["chi"] for r in report.records if r["phi"] is not None]
        lo, hi = min(chis), max(chis)
        xs = [lo - 0.5, hi + 0.5]
        ax.plot(xs, [x - 1 for x in xs], "--", color="#444444", lw=1,
                label="chi - 1 ceiling")
        ax.plot(xs, [x - 2 for x in xs], ":", color="#888888", lw=1,
                label="chi - 2")
        ax.legend(fontsize=8)
    ax.set_xlabel("chromatic number")
    ax.set_ylabel("discrepancy")
    ax.set_title("discrepancy vs chromatic number")
    fig.tight_layout()
    p = os.path.join(outdir, "phi_vs_chi.png")
    fig.savefig(p, dpi=130)
    plt.close(fig)
    paths.append(p)

    summary = report.summary()["per_check"]
    fig, ax = plt.subplots(figsize=(7.0, 0.45 * max(len(summary), 4) + 1.4))
    order = ["pass", "fail", "counterexample", "skip", "na"]
    names = list(report.checks)
    left = [0] * len(names)
    for verdict in order:
        vals = [summary[cid][verdict] for cid in names]
        ax.barh(names, vals, left=left, color=VERDICT_COLOURS[verdict],
                label=verdict, height=0.6)
        left = [a + b for a, b in zip(left, vals)]
    ax.invert_yaxis()
    ax.set_xlabel("graphs")
    ax.set_title("verdicts per check")
    ax.legend(fontsize=8, ncol=len(order))
    fig.tight_layout()
    p = os.path.join(outdir, "check_verdicts.png")
    fig.savefig(p, dpi=130)
    plt.close(fig)
    paths.append(p)
    return paths


def render_hunt_figures(findings, outdir: str) -> list[str]:
    """Histogram of conjecture margins over the sampled corpus."""
    os.makedirs(outdir, exist_ok=True)
    hist = {}
    for m in findings.margins:
        hist[m] = hist.get(m, 0) + 1
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    if hist:
        ks = sorted(hist)
        colours = ["#d62728" if k < 0 else "#2a9d3f" for k in ks]
        ax.bar([str(k) for k in ks], [hist[k] for k in ks], color=colours)
    ax.set_xlabel(f"margin of {findings.conjecture} (ell={findings.ell})")
    ax.set_ylabel("graphs")
    ax.set_title(f"margins over {findings.accepted} sampled graphs")
    fig.tight_layout()
    p = os.path.join(outdir, "hunt_margins.png")
    fig.savefig(p, dpi=130)
    plt.close(fig)
    return [p]
