"""Command line front end.

Exit codes: 0 all good, 1 a proven statement failed on some graph (an
implementation bug), 2 input or usage error, 3 a conjecture
counterexample candidate survived re-verification.
"""
from __future__ import annotations

import argparse
import json
import sys

from .graphs import Graph6Error, parse_graph6, write_graph6
from .coloring import chromatic_number
from .discrepancy import chromatic_discrepancy
from .balls import ForbiddenCycleError, colour_ball
from .constructions import generalized_mycielski, mycielski_graph
from .harness import (ALL_CHECKS, CheckSpec, PHI_CAP_DEFAULT, Report,
                      counterexample_hunt, default_jobs, exhaustive_corpus,
                      read_corpus, scan_corpus)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="chromadisc",
        description="exact chromatic discrepancy toolkit")
    sub = top.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="run checks over a graph corpus")
    src = scan.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="graph6 file, one graph per line")
    src.add_argument("--exhaustive", type=int, metavar="N",
                     help="all labeled graphs on exactly N vertices (N <= 7)")
    scan.add_argument("--checks", default="all",
                      help="comma separated check ids, or 'all'")
    scan.add_argument("--s", type=int, default=None,
                      help="locality parameter (default: per-graph minimum)")
    scan.add_argument("--ell", type=int, default=3,
                      help="forbidden cycle parameter, cycles of length ell+1")
    scan.add_argument("--jobs", type=int, default=None,
                      help="worker processes (default: CHROMADISC_JOBS or 1)")
    scan.add_argument("--phi-cap", type=int, default=PHI_CAP_DEFAULT,
                      help="largest n for exact discrepancy")
    scan.add_argument("--out", help="write full JSON report here")
    scan.add_argument("--csv", help="write per-graph CSV summary here")
    scan.add_argument("--figures", help="render figures into this directory")
    scan.set_defaults(func=_cmd_scan)

    phi = sub.add_parser("phi", help="exact discrepancy per graph")
    phi.add_argument("--input", required=True, help="graph6 file")
    phi.add_argument("--phi-cap", type=int, default=PHI_CAP_DEFAULT)
    phi.add_argument("--json", action="store_true",
                     help="JSON lines instead of tab separated columns")
    phi.set_defaults(func=_cmd_phi)

    ball = sub.add_parser("ball", help="colour balls with two parity palettes")
    ball.add_argument("--ell", type=int, required=True)
    ball.add_argument("--input", required=True, help="graph6 file")
    ball.add_argument("--center", type=int, default=None,
                      help="single centre (default: every vertex)")
    ball.add_argument("--out", help="write JSON lines here instead of stdout")
    ball.set_defaults(func=_cmd_ball)

    gen = sub.add_parser("gen", help="generate extremal constructions")
    gensub = gen.add_subparsers(dest="family", required=True)
    myc = gensub.add_parser("mycielski", help="iterated twin-plus-apex tower")
    myc.add_argument("--k", type=int, required=True)
    myc.add_argument("--out", help="write graph6 here instead of stdout")
    myc.add_argument("--colors", help="write the canonical colouring JSON here")
    myc.add_argument("--json", action="store_true",
                     help="print graph6 plus classes as JSON")
    myc.set_defaults(func=_cmd_gen_myc)
    gmyc = gensub.add_parser("generalized",
                             help="tower over a complete base graph")
    gmyc.add_argument("--k", type=int, required=True)
    gmyc.add_argument("--s", type=int, required=True)
    gmyc.add_argument("--out", help="write graph6 here instead of stdout")
    gmyc.add_argument("--colors", help="write the canonical colouring JSON here")
    gmyc.add_argument("--json", action="store_true")
    gmyc.set_defaults(func=_cmd_gen_gmyc)

    hunt = sub.add_parser("hunt", help="sample graphs against a conjecture")
    hunt.add_argument("--ell", type=int, required=True)
    hunt.add_argument("--conjecture", choices=("conj1.7", "conj1.8"),
                      default="conj1.8")
    hunt.add_argument("--budget", type=int, default=200)
    hunt.add_argument("--seed", type=int, default=0)
    hunt.add_argument("--n-min", type=int, default=4)
    hunt.add_argument("--n-max", type=int, default=9)
    hunt.add_argument("--out", help="write findings JSON here")
    hunt.add_argument("--figures", help="render the margin histogram here")
    hunt.set_defaults(func=_cmd_hunt)

    return top


def _cmd_scan(args) -> int:
    if args.exhaustive is not None:
        if not 1 <= args.exhaustive <= 7:
            raise ValueError("--exhaustive takes N between 1 and 7")
        lines = exhaustive_corpus(args.exhaustive)
    else:
        lines = read_corpus(args.input)
    ids = ALL_CHECKS if args.checks == "all" else tuple(
        c.strip() for c in args.checks.split(",") if c.strip())
    specs = [CheckSpec(cid, s=args.s, ell=args.ell) for cid in ids]
    jobs = args.jobs if args.jobs else default_jobs()
    report = scan_corpus(lines, specs, jobs=jobs, phi_cap=args.phi_cap)
    if args.out:
        report.write_json(args.out)
    if args.csv:
        report.write_csv(args.csv)
    if args.figures:
        from .figures import render_scan_figures
        for p in render_scan_figures(report, args.figures):
            print(f"figure: {p}")
    _print_scan_summary(report)
    return report.exit_code()


def _print_scan_summary(report: Report):
    s = report.summary()
    print(f"graphs: {s['graphs']}  jobs: {s['jobs']}  "
          f"runtime: {s['runtime_seconds']}s")
    for cid in report.checks:
        c = s["per_check"][cid]
        print(f"  {cid:8s} pass={c['pass']} fail={c['fail']} "
              f"counterexample={c['counterexample']} skip={c['skip']} "
              f"na={c['na']}")
    for f in s["proven_failures"]:
        print(f"  FAIL {f['check']} on {f['graph6']}: {f['reason']}")
    for c in s["counterexample_candidates"]:
        print(f"  CANDIDATE {c['check']} on {c['graph6']}: {c['reason']}")


def _cmd_phi(args) -> int:
    for line in read_corpus(args.input):
        g = parse_graph6(line)
        if not 1 <= g.n <= args.phi_cap:
            if args.json:
                print(json.dumps({"graph6": line, "skipped":
                                  f"n={g.n} outside [1, {args.phi_cap}]"}))
            else:
                print(f"{line}\tskipped: n={g.n} outside [1, {args.phi_cap}]")
            continue
        res = chromatic_discrepancy(g)
        payload = res.to_json(g)
        payload["graph6"] = line
        payload["n"] = g.n
        payload["chi"] = chromatic_number(g)
        if args.json:
            print(json.dumps(payload))
        else:
            wit = ",".join(str(v) for v in payload["witness_set"])
            print(f"{line}\t{g.n}\t{payload['chi']}\t{payload['phi']}\t"
                  f"{payload['p']}\t{payload['f']}\t{wit}")
    return 0


def _cmd_ball(args) -> int:
    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        for idx, line in enumerate(read_corpus(args.input)):
            g = parse_graph6(line)
            centers = [args.center] if args.center is not None else range(g.n)
            for v in centers:
                try:
                    bc = colour_ball(g, v, args.ell)
                except ForbiddenCycleError as e:
                    row = {"graph6": line, "index": idx, "center": v,
                           "error": str(e), "cycle": list(e.cycle)}
                    print(json.dumps(row), file=sink)
                    break  # same refusal for every centre
                row = bc.to_json()
                row["graph6"] = line
                row["index"] = idx
                print(json.dumps(row), file=sink)
    finally:
        if args.out:
            sink.close()
    return 0


def _emit_construction(args, built) -> int:
    line = write_graph6(built.graph)
    if args.json:
        print(json.dumps(built.to_json()))
    elif args.out:
        with open(args.out, "w") as fh:
            fh.write(line + "\n")
        print(f"wrote {args.out}")
    else:
        print(line)
    if args.colors:
        with open(args.colors, "w") as fh:
            json.dump({"classes": built.canonical.to_vertex_lists()}, fh)
    return 0


def _cmd_gen_myc(args) -> int:
    return _emit_construction(args, mycielski_graph(args.k))


def _cmd_gen_gmyc(args) -> int:
    return _emit_construction(args, generalized_mycielski(args.k, args.s))


def _cmd_hunt(args) -> int:
    findings = counterexample_hunt(
        ell=args.ell, conjecture=args.conjecture, budget=args.budget,
        seed=args.seed, n_min=args.n_min, n_max=args.n_max)
    payload = findings.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=1)
    if args.figures:
        from .figures import render_hunt_figures
        for p in render_hunt_figures(findings, args.figures):
            print(f"figure: {p}")
    print(f"accepted {findings.accepted}/{findings.attempts} attempts, "
          f"margins {payload['margin_histogram']}, "
          f"candidates: {len(findings.candidates)}")
    for c in findings.candidates:
        print(f"  CANDIDATE {c['graph6']} chi={c['chi']} phi={c['phi']}")
    return findings.exit_code()


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, Graph6Error, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
