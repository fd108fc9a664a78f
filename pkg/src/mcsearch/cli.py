"""Command-line interface.

Subcommands: solve, order, gen, oracle, bench buckets, bench orderings.
Graph inputs are native-format files (see formats.py); files ending in
.mol or .sdf are read as V2000 connection tables.  Exit codes: 0 success,
2 time limit exceeded, 3 parse error.

Environment: MCS_THREADS sets the default worker count and
MCS_TIME_LIMIT_SECS the default solve time limit.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import bench as bench_mod
from .clique import backend_name
from .formats import ParseError, emit_results, parse_mol, parse_native, serialize_native
from .generator import generate_corpus, generate_instances
from .oracle import SizeLimitError, oracle_mecs, oracle_mvcs
from .similarity import MEASURES, greedy_order, similarity_matrix
from .solver import ORDERINGS, EmbeddingResult, SolveConfig, SolveTimeout, solve_detailed

EXIT_OK = 0
EXIT_TIMEOUT = 2
EXIT_PARSE = 3


def _env_int(name, default):
    raw = os.environ.get(name, "")
    return int(raw) if raw else default


def _env_float(name, default):
    raw = os.environ.get(name, "")
    return float(raw) if raw else default


def _load_graph_files(paths):
    graphs = []
    for path in paths:
        with open(path) as fh:
            text = fh.read()
        if path.endswith((".mol", ".sdf")):
            graphs.append(parse_mol(text, strip_hydrogens=True))
        else:
            graphs.extend(parse_native(text))
    return graphs


def _add_solve_flags(sub):
    sub.add_argument("--mode", choices=("mvcs", "mecs"), default="mvcs",
                     help="maximize common vertices (mvcs) or edges (mecs)")
    sub.add_argument("--connected", action="store_true",
                     help="restrict to connected common subgraphs")
    sub.add_argument("--ignore-labels", action="store_true",
                     help="treat all vertex and edge labels as equal")
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("-o", "--output", default=None,
                     help="write the result document to a file")


def _write_out(text, output):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config_from_args(args):
    return SolveConfig(
        mode=args.mode,
        connected=args.connected,
        labeled=not args.ignore_labels,
        ordering=args.ordering,
        seed=args.seed,
        prune_type0=not args.no_prune_type0,
        path_cap=args.path_cap,
        bound_pruning=not args.no_bound_pruning,
        time_limit=args.time_limit,
        parallelism=args.threads,
    )


def cmd_solve(args):
    graphs = _load_graph_files(args.files)
    config = _config_from_args(args)
    report = solve_detailed(graphs, config)
    text = emit_results(report.results, args.format, mode=config.mode,
                        connected=config.connected, labeled=config.labeled)
    _write_out(text, args.output)
    return EXIT_OK


def cmd_order(args):
    graphs = _load_graph_files(args.files)
    matrix = similarity_matrix(graphs, args.measure, mode=args.mode)
    ordering = greedy_order(matrix)
    names = [graphs[i].name or f"g{i}" for i in ordering.sequence]
    print(f"measure: {args.measure}")
    print("order: " + " ".join(names))
    print("indices: " + " ".join(str(i) for i in ordering.sequence))
    print("trace: " + " ".join(f"{t:.4f}" for t in ordering.trace))
    return EXIT_OK


def cmd_gen(args):
    lo_hi = args.vertices.split(":")
    vertex_count = (int(lo_hi[0]), int(lo_hi[-1]))
    atoms = tuple(args.atoms.split(","))
    bonds = tuple(args.bonds.split(","))
    if args.graphs_per_instance:
        instances = generate_instances(args.count, args.graphs_per_instance,
                                       vertex_count, atoms, bonds, args.seed)
        os.makedirs(args.output, exist_ok=True)
        for i, graphs in enumerate(instances):
            path = os.path.join(args.output, f"instance_{i:03d}.graph")
            with open(path, "w") as fh:
                fh.write(serialize_native(graphs))
        print(f"wrote {len(instances)} instance files to {args.output}")
    else:
        corpus = generate_corpus(args.count, vertex_count, atoms, bonds,
                                 args.seed)
        _write_out(serialize_native(corpus), args.output)
    return EXIT_OK


def cmd_oracle(args):
    graphs = _load_graph_files(args.files)
    fn = oracle_mvcs if args.mode == "mvcs" else oracle_mecs
    result = fn(graphs, connected=args.connected,
                labeled=not args.ignore_labels)
    adapted = [
        EmbeddingResult(result.class_graphs[i], result.max_size,
                        result.witnesses[i])
        for i in range(len(result.classes))
    ]
    text = emit_results(adapted, args.format, mode=args.mode,
                        connected=args.connected,
                        labeled=not args.ignore_labels)
    _write_out(text, args.output)
    return EXIT_OK


def cmd_bench_buckets(args):
    corpus = _load_graph_files(args.files)
    measures = tuple(args.measures.split(","))
    rows, meta = bench_mod.bench_buckets(corpus, measures, args.mode,
                                         args.pair_time_limit)
    meta["backend"] = backend_name()
    text = bench_mod.write_csv(args.out, bench_mod.BUCKET_FIELDS, rows, meta)
    if args.out:
        print(f"wrote {len(rows)} bucket rows to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench_orderings(args):
    instances = [_load_graph_files([path]) for path in args.files]
    base = SolveConfig(mode=args.mode, connected=args.connected,
                       labeled=not args.ignore_labels,
                       time_limit=args.run_time_limit,
                       parallelism=args.threads)
    rows = bench_mod.bench_orderings(instances, base,
                                     include_baselines=args.include_baselines,
                                     seed=args.seed)
    meta = {
        "experiment": "orderings",
        "mode": args.mode,
        "instances": str(len(instances)),
        "backend": backend_name(),
    }
    text = bench_mod.write_csv(args.out, bench_mod.ORDERING_FIELDS, rows, meta)
    if args.out:
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mcsearch",
        description="Exact maximum common subgraph enumeration over "
                    "collections of labeled graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="enumerate all maximum common "
                                           "subgraphs of the input graphs")
    p_solve.add_argument("files", nargs="+")
    _add_solve_flags(p_solve)
    p_solve.add_argument("--ordering", choices=ORDERINGS, default="minmax")
    p_solve.add_argument("--seed", type=int, default=None)
    p_solve.add_argument("--no-prune-type0", action="store_true")
    p_solve.add_argument("--path-cap", type=int, default=6)
    p_solve.add_argument("--no-bound-pruning", action="store_true")
    p_solve.add_argument("--time-limit", type=float,
                         default=_env_float("MCS_TIME_LIMIT_SECS", None))
    p_solve.add_argument("--threads", type=int,
                         default=_env_int("MCS_THREADS", 1))
    p_solve.set_defaults(func=cmd_solve)

    p_order = sub.add_parser("order", help="print the greedy processing "
                                           "order for a set of graphs")
    p_order.add_argument("files", nargs="+")
    p_order.add_argument("--measure", choices=MEASURES, default="minmax")
    p_order.add_argument("--mode", choices=("mvcs", "mecs"), default="mvcs")
    p_order.set_defaults(func=cmd_order)

    p_gen = sub.add_parser("gen", help="generate molecule-like random graphs")
    p_gen.add_argument("--count", type=int, default=10)
    p_gen.add_argument("--graphs-per-instance", type=int, default=0,
                       help="when set, write instance files to the output "
                            "directory instead of one corpus file")
    p_gen.add_argument("--vertices", default="10:14",
                       help="vertex count or inclusive range lo:hi")
    p_gen.add_argument("--atoms", default=",".join(("C", "N", "O")))
    p_gen.add_argument("--bonds", default=",".join(("1", "2")))
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("-o", "--output", default=None)
    p_gen.set_defaults(func=cmd_gen)

    p_oracle = sub.add_parser("oracle", help="brute-force reference answer "
                                             "(small graphs only)")
    p_oracle.add_argument("files", nargs="+")
    _add_solve_flags(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle)

    p_bench = sub.add_parser("bench", help="benchmark harnesses")
    bench_sub = p_bench.add_subparsers(dest="bench_command", required=True)

    p_buckets = bench_sub.add_parser(
        "buckets", help="similarity vs clique-count bucket sweep")
    p_buckets.add_argument("files", nargs="+",
                           help="corpus file(s) with the graphs to pair up")
    p_buckets.add_argument("--measures", default=",".join(MEASURES))
    p_buckets.add_argument("--mode", choices=("mvcs", "mecs"), default="mecs")
    p_buckets.add_argument("--pair-time-limit", type=float, default=None)
    p_buckets.add_argument("--out", default=None)
    p_buckets.set_defaults(func=cmd_bench_buckets)

    p_ord = bench_sub.add_parser(
        "orderings", help="runtime sweep over ordering configurations")
    p_ord.add_argument("files", nargs="+",
                       help="instance files (one instance per file)")
    p_ord.add_argument("--mode", choices=("mvcs", "mecs"), default="mecs")
    p_ord.add_argument("--connected", action="store_true")
    p_ord.add_argument("--ignore-labels", action="store_true")
    p_ord.add_argument("--include-baselines", action="store_true",
                       help="also run input-order and seeded random-order")
    p_ord.add_argument("--run-time-limit", type=float,
                       default=_env_float("MCS_TIME_LIMIT_SECS", None))
    p_ord.add_argument("--threads", type=int,
                       default=_env_int("MCS_THREADS", 1))
    p_ord.add_argument("--seed", type=int, default=0)
    p_ord.add_argument("--out", default=None)
    p_ord.set_defaults(func=cmd_bench_orderings)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeLimitError as exc:
        print(f"oracle limit: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SolveTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT


if __name__ == "__main__":
    sys.exit(main())
