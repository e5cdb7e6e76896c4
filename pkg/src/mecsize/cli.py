"""Command-line interface.

Subcommands: count, sample, enumerate, parent-sets, intervene,
intervene-greedy, sde-experiment, gen-random, verify, bench, clique-tree.

Exit codes: 0 success, 1 usage error, 2 invalid input (graph or
constraint file), 3 unrealizable prior (sampling), 4 verification
failure. Errors go to stderr as `error: <category>: <message>`.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io, kernels
from .bench import bench as run_bench
from .clique_tree import build_clique_tree, compute_emission_sets, dump_rooted_tree, root_tree
from .count import MemoStore, mec_size
from .errors import (
    EnumerationLimitError,
    InfeasibleParameterError,
    InvalidGraphError,
    MalformedHypothesisError,
    MecError,
    UnknownVertexError,
    UnrealizableHypothesisError,
)
from .generate import random_uccg
from .graph import MixedGraph
from .intervention import evaluate_targets, expected_resolved_mc, greedy_select, sde_experiment
from .oracle import enumerate_mec
from .prior import parent_set_counts, sample_many_with_prior, size_with_prior
from .sample import sample_many
from .verify import run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_UNREALIZABLE = 3
EXIT_VERIFY_FAILED = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"error: usage: {message}", file=sys.stderr)
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fail(category, message, code):
    print(f"error: {category}: {message}", file=sys.stderr)
    return code


def _load_graph(path):
    try:
        return io.load_graph(path)
    except OSError as exc:
        raise InvalidGraphError(f"cannot read {path!r}: {exc}") from exc


def _load_prior(path):
    try:
        return io.load_constraints(path)
    except OSError as exc:
        raise InvalidGraphError(f"cannot read {path!r}: {exc}") from exc


def _print_memo_stats(memo):
    s = memo.stats()
    print(
        f"# memo: hits={s['hits']} misses={s['misses']} "
        f"rs_invocations={s['rs_invocations']} entries="
        f"{s['component_entries'] + s['subtree_entries']}",
        file=sys.stderr,
    )


def _emit_samples(samples, fmt):
    if fmt == "json":
        obj = {
            "spec_version": io.SPEC_VERSION,
            "samples": [io.graph_to_obj(d) for d in samples],
        }
        print(json.dumps(obj, indent=2))
    else:
        blocks = []
        for d in samples:
            order = {v: i for i, v in enumerate(d.vertices)}
            lines = [
                f"{a} -> {b}"
                for a, b in sorted(d.directed_edges, key=lambda e: (order[e[0]], order[e[1]]))
            ]
            blocks.append("\n".join(lines) if lines else "# (no edges)")
        print("\n\n".join(blocks))


def _rational_obj(x: Fraction):
    return {
        "rational": f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator),
        "decimal": float(f"{float(x):.15g}"),
    }


def cmd_count(args):
    g = _load_graph(args.graph)
    memo = MemoStore()
    if args.prior:
        size = size_with_prior(g, _load_prior(args.prior), memo)
    else:
        size = mec_size(g, memo)
    print(size)
    if args.memo_stats:
        _print_memo_stats(memo)
    return EXIT_OK


def cmd_sample(args):
    g = _load_graph(args.graph)
    memo = MemoStore()
    if args.prior:
        samples = sample_many_with_prior(g, _load_prior(args.prior), args.n, args.seed, memo)
    else:
        samples = sample_many(g, args.n, args.seed, memo)
    _emit_samples(samples, args.format)
    if args.memo_stats:
        _print_memo_stats(memo)
    return EXIT_OK


def cmd_enumerate(args):
    g = _load_graph(args.graph)
    mec = enumerate_mec(g, limit=args.limit)
    _emit_samples(list(mec.members), args.format)
    return EXIT_OK


def cmd_parent_sets(args):
    g = _load_graph(args.graph)
    counts = parent_set_counts(g, args.target)
    items = sorted(counts.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    if args.format == "json":
        obj = {
            "spec_version": io.SPEC_VERSION,
            "target": args.target,
            "parent_sets": [
                {"parents": sorted(ps), "count": str(c)} for ps, c in items
            ],
        }
        print(json.dumps(obj, indent=2))
    else:
        for ps, c in items:
            print("{" + ",".join(sorted(ps)) + "}: " + str(c))
    return EXIT_OK


def cmd_intervene(args):
    g = _load_graph(args.graph)
    targets = [t for t in args.targets.split(",") if t]
    if not targets:
        raise InfeasibleParameterError("no targets given")
    memo = MemoStore()
    report = evaluate_targets(g, targets, memo)
    obj = {
        "spec_version": io.SPEC_VERSION,
        "targets": list(report.targets),
        "expected_resolved": _rational_obj(report.expected),
        "configurations": [
            {
                "orientations": [f"{u} -> {v}" for u, v in rec.orientations],
                "weight": _rational_obj(rec.weight),
                "resolved": rec.resolved,
            }
            for rec in report.records
        ],
    }
    if args.mc:
        est, se = expected_resolved_mc(g, targets, args.mc, args.seed, memo)
        obj["mc"] = {"estimate": est, "stderr": se, "samples": args.mc}
    print(json.dumps(obj, indent=2))
    return EXIT_OK


def cmd_intervene_greedy(args):
    g = _load_graph(args.graph)
    picked = greedy_select(g, args.budget)
    print(",".join(picked))
    return EXIT_OK


def cmd_sde(args):
    grid = [int(x) for x in args.grid.split(",") if x]
    rows = sde_experiment(args.p, args.r, args.trials, args.targets, grid, args.seed)
    print("N,SDE")
    for n, sde in rows:
        print(f"{n},{sde:.6g}")
    return EXIT_OK


def cmd_gen_random(args):
    g = random_uccg(args.p, args.r, args.seed)
    if args.format == "json":
        sys.stdout.write(io.serialize_graph_json(g))
    else:
        sys.stdout.write(io.serialize_graph_text(g))
    return EXIT_OK


def cmd_verify(args):
    results = run_verification(quick=args.quick)
    ok = True
    for name, passed, detail in results:
        print(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
        ok = ok and passed
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_bench(args):
    p_list = [int(x) for x in args.p_list.split(",") if x]
    r_list = [float(x) for x in args.r_list.split(",") if x]
    out = run_bench(
        p_list, r_list, args.trials, args.seed,
        impl=args.impl, threads=args.threads, collect_stats=args.memo_stats,
    )
    if args.memo_stats:
        header, rows, stats = out
    else:
        header, rows = out
        stats = None
    print(",".join(header))
    for row in rows:
        print(",".join(f"{x:.6g}" if isinstance(x, float) else str(x) for x in row))
    if stats:
        for s in stats:
            print(f"# memo: {s}", file=sys.stderr)
    return EXIT_OK


def cmd_clique_tree(args):
    g = _load_graph(args.graph)
    tree = build_clique_tree(g)
    rooted = compute_emission_sets(root_tree(tree, args.root))
    print(dump_rooted_tree(rooted))
    return EXIT_OK


def build_parser():
    top = _Parser(prog="mecsize", description=__doc__)
    top.add_argument(
        "--kernel", choices=["auto", "python", "cython"], default="auto",
        help="kernel implementation (default: compiled when available)",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("count", cmd_count, help="exact class size of an essential graph")
    p.add_argument("graph")
    p.add_argument("--prior", help="constraint file of required orientations")
    p.add_argument("--memo-stats", action="store_true")

    p = add("sample", cmd_sample, help="uniform member DAGs")
    p.add_argument("graph")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prior")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--memo-stats", action="store_true")

    p = add("enumerate", cmd_enumerate, help="list every member (small classes)")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=10**6)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = add("parent-sets", cmd_parent_sets, help="consistent counts per parent set")
    p.add_argument("graph")
    p.add_argument("--target", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = add("intervene", cmd_intervene, help="expected resolved edges of a target set")
    p.add_argument("graph")
    p.add_argument("--targets", required=True, help="comma-separated vertices")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", help="exact only (default)")
    group.add_argument("--mc", type=int, metavar="N", help="add a Monte-Carlo estimate")
    p.add_argument("--seed", type=int, default=0)

    p = add("intervene-greedy", cmd_intervene_greedy, help="greedy budgeted target set")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, required=True)

    p = add("sde-experiment", cmd_sde, help="Monte-Carlo error spread vs sample size")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=float, default=0.2)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--targets", type=int, default=2)
    p.add_argument("--grid", default="10,20,40,80")
    p.add_argument("--seed", type=int, default=0)

    p = add("gen-random", cmd_gen_random, help="random connected chordal graph")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = add("verify", cmd_verify, help="cross-validate against brute-force enumeration")
    p.add_argument("--quick", action="store_true")

    p = add("bench", cmd_bench, help="counting throughput on random graphs")
    p.add_argument("--p-list", default="20,30,40")
    p.add_argument("--r-list", default="0.2")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--impl", choices=["auto", "python", "cython", "both"], default="auto")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--memo-stats", action="store_true")

    p = add("clique-tree", cmd_clique_tree, help="dump a rooted clique tree")
    p.add_argument("graph")
    p.add_argument("--root", required=True)

    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.kernel != "auto":
            try:
                kernels.use(args.kernel)
            except (RuntimeError, ValueError) as exc:
                return _fail("usage", str(exc), EXIT_USAGE)
        return args.fn(args)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    except UnrealizableHypothesisError as exc:
        return _fail("unrealizable", str(exc), EXIT_UNREALIZABLE)
    except (InvalidGraphError, UnknownVertexError, MalformedHypothesisError) as exc:
        return _fail("invalid-input", str(exc), EXIT_INVALID)
    except EnumerationLimitError as exc:
        return _fail("limit", str(exc), EXIT_INVALID)
    except InfeasibleParameterError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    except MecError as exc:
        return _fail("internal", str(exc), EXIT_INVALID)


if __name__ == "__main__":
    sys.exit(main())
