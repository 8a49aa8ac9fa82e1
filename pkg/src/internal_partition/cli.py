"""Command-line entry point: ``internal-partition <command> ...``.

Exit status: 0 on success, 1 when a solver finds no partition (or a
partition/graph fails a check), 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import constructive, experiments, generation, graph, heuristic, oracle

EXIT_OK, EXIT_NOT_FOUND, EXIT_INPUT = 0, 1, 2


def _load_demands(args, g: graph.Graph) -> graph.DemandFunctions:
    if args.demands:
        rows = [ln.split() for ln in Path(args.demands).read_text().splitlines() if ln.strip()]
        if len(rows) != g.n or any(len(r) != 2 for r in rows):
            raise ValueError(f"demand file needs {g.n} lines of 'a b'")
        return graph.DemandFunctions(tuple(int(r[0]) for r in rows), tuple(int(r[1]) for r in rows))
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise ValueError("--a and --b go together")
        return graph.DemandFunctions.constant(g.n, args.a, args.b)
    return graph.DemandFunctions.half_degree(g)


def _add_demand_args(p):
    p.add_argument("--a", type=int, help="constant A-side demand")
    p.add_argument("--b", type=int, help="constant B-side demand")
    p.add_argument("--demands", help="file with one 'a b' line per vertex")


def cmd_generate(args):
    g = generation.random_regular(generation.GenSpec(args.n, args.d, args.seed, args.max_attempts, args.method))
    if args.out:
        graph.write_edge_list(g, args.out)
    else:
        sys.stdout.write(graph.format_edge_list(g))
    return EXIT_OK


def cmd_check(args):
    g = graph.read_edge_list(args.input)
    degs = g.degrees()
    info = {"n": g.n, "m": g.m, "min_degree": min(degs, default=0), "max_degree": max(degs, default=0)}
    status = EXIT_OK
    if args.sparse:
        ok, witness = graph.is_four_sparse(g)
        info["four_sparse"] = ok
        info["witness"] = list(witness) if witness else None
        status = EXIT_OK if ok else EXIT_NOT_FOUND
    print(json.dumps(info))
    return status


def cmd_solve(args):
    g = graph.read_edge_list(args.input)
    dem = _load_demands(args, g)
    trace_rows = []
    if args.algorithm == "constructive":
        res = constructive.find_internal_partition_4sparse(g, dem, force=args.force)
        p = res.partition
        trace_rows = [s.to_dict() for s in res.trace]
        summary = {"steps": len(res.trace)}
    elif args.algorithm == "heuristic":
        cfg = heuristic.HeuristicConfig(seed=args.seed, max_iters=args.max_iters,
                                        balance_slack=args.slack, record_trace=bool(args.trace))
        res = heuristic.local_search(g, dem, cfg)
        p = res.partition
        trace_rows = [{"kind": k, "vertex": v, "objective": o} for k, v, o in res.trace]
        summary = {"iterations": res.iterations, "converged": res.converged,
                   "final_objective": res.final_objective}
    else:
        p = oracle.brute_force_partition(g, dem)
        summary = {}
    if args.trace:
        with open(args.trace, "w") as fh:
            for row in trace_rows:
                fh.write(json.dumps(row) + "\n")
    summary["found"] = p is not None
    print(json.dumps(summary), file=sys.stderr)
    if p is None:
        return EXIT_NOT_FOUND
    text = graph.format_partition(p)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args):
    g = graph.read_edge_list(args.input)
    p = graph.parse_partition(Path(args.partition).read_text(), g.n)
    report = graph.verify_internal(g, p, _load_demands(args, g))
    for v in report.violations:
        print(f"violation vertex={v.vertex} side={v.side} required={v.required} actual={v.actual}")
    print("ok" if report.ok else "not ok")
    return EXIT_OK if report.ok else EXIT_NOT_FOUND


def cmd_sweep(args):
    spec = experiments.SweepSpec.from_file(args.spec)
    records = experiments.run_sweep(spec, workers=args.workers)
    text = experiments.records_to_csv(records, args.out)
    if not args.out:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_sparsity(args):
    freq = experiments.sparsity_frequency(args.n_values, args.d, args.runs, args.seed)
    text = experiments.sparsity_to_csv(freq, args.d, args.runs, args.out)
    if not args.out:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="internal-partition",
                                     description="Find and check (a,b)-internal graph partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="random d-regular graph as an edge list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-attempts", type=int, default=1000)
    p.add_argument("--method", choices=["auto", "pairing", "repair"], default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="graph statistics and 4-sparsity")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--sparse", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="search for an (a,b)-internal partition")
    p.add_argument("--algorithm", choices=["constructive", "heuristic", "brute"], required=True)
    p.add_argument("--in", dest="input", required=True)
    _add_demand_args(p)
    p.add_argument("--force", action="store_true", help="constructive: skip the 4-sparsity check")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int)
    p.add_argument("--slack", type=int)
    p.add_argument("--trace", help="write one JSON step record per line")
    p.add_argument("--out", help="partition file (default: stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a partition file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--partition", required=True)
    _add_demand_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="batch experiment from a JSON spec")
    p.add_argument("--spec", required=True)
    p.add_argument("--out")
    p.add_argument("--workers", type=int, help=f"default: ${experiments.WORKERS_ENV} or 1")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("sparsity", help="fraction of random regular graphs that are 4-sparse")
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--n-values", type=int, nargs="+", default=[100, 1000])
    p.add_argument("--runs", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sparsity)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, generation.GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except constructive.DichotomyFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps(exc.to_dict()), file=sys.stderr)
        return EXIT_NOT_FOUND


if __name__ == "__main__":
    sys.exit(main())
