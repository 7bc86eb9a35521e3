"""Command-line front end.

Subcommands: design, verify, gen, oracle, export-ilp, bench.
Exit codes: 0 success, 2 validation error, 3 infeasible budget
(fewer interventions than the minimum separating size), 4 size guard of the
exhaustive oracle.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bench import ALGORITHMS, rows_to_csv, run_benchmark
from .design import (
    design_exact,
    design_greedy_chordal,
    design_greedy_interval,
    design_unbounded_optimal,
    export_ilp,
    min_separating_size,
)
from .errors import CausalSepError, InsufficientInterventions, TooLarge
from .graph import graph_from_json, graph_to_json
from .oracle import design_learns_all
from .randgen import COST_DISTS, GenConfig, sample_chordal, sampler_meta
from .sepsys import design_from_json, design_to_dict, verify_graph_separating

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INFEASIBLE = 3
EXIT_TOO_LARGE = 4

DESIGN_MODES = {
    "unbounded": lambda G, m: design_unbounded_optimal(G),
    "greedy": design_greedy_chordal,
    "greedy-interval": design_greedy_interval,
    "exact": design_exact,
}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _load_graph(path: str):
    return graph_from_json(_read(path))


def _cmd_design(args) -> int:
    G = _load_graph(args.input)
    mode = DESIGN_MODES[args.mode]
    if args.mode == "unbounded":
        result = mode(G, None)
    else:
        if args.max_interventions is None:
            raise CausalSepError(
                "--max-interventions is required for bounded modes")
        result = mode(G, m=args.max_interventions)
    out = design_to_dict(result.design, G.weights)
    out["algorithm"] = result.algorithm
    out["optimal"] = result.optimal
    _write(args.output, json.dumps(out, indent=2))
    return EXIT_OK


def _cmd_verify(args) -> int:
    G = _load_graph(args.graph)
    design = design_from_json(_read(args.design))
    report = verify_graph_separating(G, design)
    _write(args.output, json.dumps({
        "separating": report.separating,
        "violations": [list(e) for e in report.violations],
    }, indent=2))
    return EXIT_OK


def _cmd_gen(args) -> int:
    cfg = GenConfig(n=args.n, d=args.d, seed=args.seed, cost_dist=args.dist)
    G = sample_chordal(cfg)
    _write(args.output, graph_to_json(G, meta=sampler_meta(cfg)))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    G = _load_graph(args.graph)
    design = design_from_json(_read(args.design))
    report = design_learns_all(G, design)
    out: dict = {"learns_all": report.learns_all}
    if report.counterexample is not None:
        dag, edge = report.counterexample
        out["counterexample"] = {
            "dag": [list(a) for a in dag.arcs],
            "unoriented_edge": list(edge),
        }
    out["min_separating_size"] = min_separating_size(G)
    _write(args.output, json.dumps(out, indent=2))
    return EXIT_OK


def _cmd_export_ilp(args) -> int:
    G = _load_graph(args.graph)
    _write(args.output, export_ilp(G, m=args.m))
    return EXIT_OK


def _cmd_bench(args) -> int:
    lo, sep, hi = args.m_range.partition(":")
    try:
        m_range = range(int(lo), int(hi) + 1) if sep else [int(lo)]
    except ValueError as exc:
        raise CausalSepError(f"bad --m-range {args.m_range!r}: {exc}") from exc
    diagnostics: dict = {}
    rows = run_benchmark(n=args.n, d=args.d, m_range=m_range,
                         trials=args.trials, dist=args.dist, seed=args.seed,
                         algorithm=args.algorithm, jobs=args.jobs,
                         diagnostics=diagnostics)
    _write(args.output, rows_to_csv(rows))
    if diagnostics.get("skipped_m"):
        print(f"skipped m values (no feasible graphs): "
              f"{diagnostics['skipped_m']}", file=sys.stderr)
    if args.plot:
        _plot(rows, args.plot)
    return EXIT_OK


def _plot(rows, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_key: dict[tuple, list] = {}
    for r in rows:
        by_key.setdefault((r.algorithm, r.n, r.d, r.dist), []).append(r)
    fig, ax = plt.subplots()
    for (alg, n, d, dist), rs in sorted(by_key.items()):
        rs = sorted(rs, key=lambda r: r.m)
        ax.errorbar([r.m for r in rs], [r.mean_normalized_cost for r in rs],
                    yerr=[r.std_error for r in rs],
                    label=f"{alg} n={n} d={d} {dist}", marker="o")
    ax.set_xlabel("maximum number of interventions m")
    ax.set_ylabel("mean normalized cost")
    ax.legend()
    fig.savefig(path, dpi=150)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="causalsep",
        description="Cost-optimal intervention design on chordal skeletons")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("design", help="construct an intervention design")
    d.add_argument("--input", required=True, help="graph JSON file (- for stdin)")
    d.add_argument("--mode", choices=sorted(DESIGN_MODES), default="greedy")
    d.add_argument("--max-interventions", type=int, default=None, metavar="M")
    d.add_argument("--output", default=None, help="design JSON file (default stdout)")
    d.set_defaults(func=_cmd_design)

    v = sub.add_parser("verify", help="check a design separates a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--design", required=True)
    v.add_argument("--output", default=None)
    v.set_defaults(func=_cmd_verify)

    g = sub.add_parser("gen", help="sample a random chordal graph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--d", type=float, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--dist", choices=COST_DISTS, default="ones")
    g.add_argument("--output", default=None)
    g.set_defaults(func=_cmd_gen)

    o = sub.add_parser("oracle",
                       help="exhaustively check a design learns all causal graphs")
    o.add_argument("--graph", required=True)
    o.add_argument("--design", required=True)
    o.add_argument("--output", default=None)
    o.set_defaults(func=_cmd_oracle)

    e = sub.add_parser("export-ilp", help="write the integer program (LP format)")
    e.add_argument("--graph", required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--output", default=None)
    e.set_defaults(func=_cmd_export_ilp)

    b = sub.add_parser("bench", help="benchmark designers on random graphs")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--d", type=float, required=True)
    b.add_argument("--m-range", required=True, metavar="A:B",
                   help="inclusive range of m values, e.g. 1:10")
    b.add_argument("--trials", type=int, default=100)
    b.add_argument("--dist", choices=COST_DISTS, default="exp_mean1")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--algorithm", choices=sorted(ALGORITHMS), default="greedy")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--output", default=None, help="CSV file (default stdout)")
    b.add_argument("--plot", default=None, metavar="FILE",
                   help="also write a PNG of the curves")
    b.set_defaults(func=_cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InsufficientInterventions as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (CausalSepError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
