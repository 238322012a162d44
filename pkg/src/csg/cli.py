"""Command-line interface.

Subcommands: ``gen`` (write a benchmark graph file), ``solve`` (run one
algorithm on one instance), ``bench`` (counter/runtime grid to CSV plus
figures), ``hcs`` (DOT export of the hierarchical CS graph), ``verify``
(cross-algorithm agreement suite).
"""

from __future__ import annotations

import argparse
import sys

from . import fileio
from .bench import BENCH_SOLVERS, run_bench
from .dype import solve_dype, solve_dype_multi
from .generators import generate, spec_parse
from .hcs import hcs_dot
from .pseudotree import build_pseudotree, default_root
from .values import parse_value_spec
from .verify import run_verification


def _parse_sizes(text: str) -> list[int]:
    """Sizes as comma-separated ints and/or a..b ranges: "5..8,12"."""
    out = []
    for token in text.split(","):
        token = token.strip()
        if ".." in token:
            lo, hi = token.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(token))
    return out


def cmd_gen(args) -> int:
    spec = spec_parse(args.model, args.n, args.seed)
    g = generate(spec)
    fileio.write_graph(g, args.out)
    print(f"wrote {args.out}: {spec.label()} n={g.n} edges={len(g.edges)}")
    return 0


def cmd_solve(args) -> int:
    g = fileio.read_graph(args.graph)
    model = parse_value_spec(args.values)
    if args.alg not in BENCH_SOLVERS:
        print(f"unknown algorithm {args.alg!r}", file=sys.stderr)
        return 2
    root = args.root
    ordering = None
    if args.alg == "dype":
        if g.is_connected():
            pt = build_pseudotree(g, root)
            ordering = list(pt.order)
            result = solve_dype(g, model, pt=pt)
            root = pt.root
        else:
            result = solve_dype_multi(g, model)
    else:
        result = BENCH_SOLVERS[args.alg](g, model)
    print(f"optimal value: {result.optimal_value!r}")
    print(f"optimal cs: {result.optimal_cs.as_lists()}")
    print(
        f"subproblems: {result.subproblems_stored}  "
        f"subspaces: {result.subspaces_evaluated}  "
        f"elapsed: {result.elapsed * 1000.0:.2f} ms"
    )
    if args.out:
        doc = fileio.result_document(
            result, str(args.graph), args.values, root, ordering
        )
        fileio.save_result(doc, args.out)
        print(f"wrote {args.out}")
    return 0


def cmd_bench(args) -> int:
    manifest = run_bench(
        models=[m.strip() for m in args.models.split(",")],
        sizes=_parse_sizes(args.n),
        seeds_per_point=args.seeds,
        algs=[a.strip() for a in args.algs.split(",")],
        out_csv=args.out,
        timeout=args.timeout,
        base_seed=args.seed,
        plot=not args.no_plot,
    )
    print(f"wrote {manifest['raw_csv']} ({manifest['rows']} rows)")
    print(f"wrote {manifest['summary_csv']}")
    for fig in manifest["figures"]:
        print(f"wrote {fig}")
    return 0


def cmd_hcs(args) -> int:
    g = fileio.read_graph(args.graph)
    if not g.is_connected():
        print("hcs export needs a connected graph", file=sys.stderr)
        return 2
    root = args.root if args.root is not None else default_root(g)
    pt = build_pseudotree(g, root)
    dot = hcs_dot(g, pt)
    with open(args.out, "w", encoding="utf-8") as f:
        f.write(dot)
    print(f"wrote {args.out}")
    return 0


def cmd_verify(args) -> int:
    ok = run_verification(n_max=args.n_max, instances=args.instances, seed=args.seed)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="csg",
        description="Optimal coalition structure generation over synergy graphs",
    )
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a benchmark graph file")
    g.add_argument("--model", required=True,
                   help="tree | btree:<d> | ba:<k> | complete | path")
    g.add_argument("--n", type=int, required=True, help="agent count")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True, help="edge-list output path")
    g.set_defaults(fn=cmd_gen)

    s = sub.add_parser("solve", help="solve one instance")
    s.add_argument("--graph", required=True, help="edge-list graph file")
    s.add_argument("--values", required=True,
                   help="seed:<s> | edgesum:<path> | table:<path>")
    s.add_argument("--alg", default="dype",
                   help="dype | dp | idp | dyce | bruteforce")
    s.add_argument("--root", type=int, default=None,
                   help="pseudotree root (default: max degree)")
    s.add_argument("--out", default=None, help="result document path (JSON)")
    s.set_defaults(fn=cmd_solve)

    b = sub.add_parser("bench", help="run the benchmark grid")
    b.add_argument("--models", required=True,
                   help="comma list, e.g. tree,ba:2,complete")
    b.add_argument("--n", required=True,
                   help="sizes: comma list and/or a..b ranges")
    b.add_argument("--seeds", type=int, default=10, help="instances per point")
    b.add_argument("--seed", type=int, default=0, help="base instance seed")
    b.add_argument("--algs", default="dype,dyce,idp", help="comma list")
    b.add_argument("--timeout", type=float, default=None,
                   help="per-run timeout in seconds")
    b.add_argument("--out", required=True, help="raw CSV path")
    b.add_argument("--no-plot", action="store_true",
                   help="skip the matplotlib figures")
    b.set_defaults(fn=cmd_bench)

    h = sub.add_parser("hcs", help="export the hierarchical CS graph as DOT")
    h.add_argument("--graph", required=True)
    h.add_argument("--root", type=int, default=None)
    h.add_argument("--out", required=True, help="DOT output path")
    h.set_defaults(fn=cmd_hcs)

    v = sub.add_parser("verify", help="cross-algorithm agreement suite")
    v.add_argument("--n-max", type=int, default=10)
    v.add_argument("--instances", type=int, default=200)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(fn=cmd_verify)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
