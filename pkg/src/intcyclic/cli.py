"""Command-line surface: file-based, deterministic workflows over the graph
and coloring JSON formats.

Exit codes: 0 success/valid/feasible, 1 invalid/infeasible/rejected,
2 usage or format error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import constructions as cons
from . import solver
from .coloring import EdgeColoring, validate_cyclic, validate_interval
from .graphs import (
    Graph,
    GraphError,
    canonical_json,
    make_complete,
    make_complete_bipartite,
    make_complete_tripartite,
    make_cycle,
    make_gdn,
    make_hub_tree,
    make_hypercube,
    make_kstar,
    make_path,
    make_tree_hat,
)
from .noncolorable import Certificate, build_certified_kstar, build_certified_tree_hat

EXIT_OK = 0
EXIT_NEGATIVE = 1  # invalid / infeasible / rejected
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _load_graph(path: str) -> Graph:
    try:
        return Graph.from_json(Path(path).read_text())
    except FileNotFoundError:
        raise CliError(f"graph file not found: {path}")
    except (GraphError, ValueError) as exc:
        raise CliError(f"bad graph file {path}: {exc}")


def _load_coloring(path: str) -> EdgeColoring:
    try:
        return EdgeColoring.from_json(Path(path).read_text())
    except FileNotFoundError:
        raise CliError(f"coloring file not found: {path}")
    except ValueError as exc:
        raise CliError(f"bad coloring file {path}: {exc}")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _int_params(params: list[str], family: str, arity: int) -> list[int]:
    if len(params) != arity:
        raise CliError(f"{family} takes {arity} integer parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise CliError(f"{family} parameters must be integers: {params}")


_GEN_FAMILIES = {
    "cycle": (1, lambda p: make_cycle(p[0])),
    "path": (1, lambda p: make_path(p[0])),
    "complete": (1, lambda p: make_complete(p[0])),
    "complete-bipartite": (2, lambda p: make_complete_bipartite(p[0], p[1])),
    "complete-tripartite": (3, lambda p: make_complete_tripartite(p[0], p[1], p[2])),
    "hypercube": (1, lambda p: make_hypercube(p[0])),
    "gdn": (2, lambda p: make_gdn(p[0], p[1])),
    "kstar": (2, lambda p: make_kstar(p[0], p[1])),
    "hub-tree": (2, lambda p: make_hub_tree(p[0], p[1])),
}


def _cmd_gen(args) -> int:
    if args.family == "tree-hat":
        if not args.graph:
            raise CliError("gen tree-hat needs a tree file via -g")
        g = make_tree_hat(_load_graph(args.graph))
        _write(args.output, g.to_json())
        return EXIT_OK
    if args.family == "noncolorable":
        return _cmd_gen_noncolorable(args)
    if args.family not in _GEN_FAMILIES:
        raise CliError(f"unknown family: {args.family}")
    arity, build = _GEN_FAMILIES[args.family]
    try:
        g = build(_int_params(args.params, args.family, arity))
    except GraphError as exc:
        raise CliError(str(exc))
    _write(args.output, g.to_json())
    return EXIT_OK


def _cmd_gen_noncolorable(args) -> int:
    if args.rule == "kstar":
        if args.n is not None and args.m is not None:
            p = [args.n, args.m]
        else:
            p = _int_params(args.params, "noncolorable --rule kstar", 2)
        try:
            g, cert = build_certified_kstar(p[0], p[1])
        except ValueError as exc:
            raise CliError(str(exc))
    elif args.rule == "tree-hat":
        if args.graph:
            tree = _load_graph(args.graph)
        elif args.hubs and args.leaves:
            tree = make_hub_tree(args.hubs, args.leaves)
        else:
            raise CliError("noncolorable --rule tree-hat needs -g TREE or --hubs/--leaves")
        try:
            g, cert = build_certified_tree_hat(tree)
        except GraphError as exc:
            raise CliError(str(exc))
    else:
        raise CliError("gen noncolorable needs --rule kstar|tree-hat")
    _write(args.output, g.to_json())
    _write(args.cert, canonical_json(cert.to_dict()))
    return EXIT_OK if cert.passed else EXIT_NEGATIVE


def _cmd_color(args) -> int:
    name = args.construction
    classes = None
    if name == "mod-reduce":
        if not (args.graph and args.coloring_in and args.t):
            raise CliError("color mod-reduce needs -g GRAPH --input-coloring ALPHA --t T")
        g = _load_graph(args.graph)
        alpha = _load_coloring(args.coloring_in)
        try:
            coloring = cons.mod_reduce(g, alpha, args.t)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_NEGATIVE)
    else:
        try:
            params = tuple(int(x) for x in args.params)
        except ValueError:
            raise CliError(f"construction parameters must be integers: {args.params}")
        if name == "hypercube-interval":
            # handled apart so the spectrum-class map stays visible
            if len(params) != 1:
                raise CliError(f"{name} takes 1 parameter, got {len(params)}")
            try:
                g, coloring, classes = cons.hypercube_base_interval(params[0])
            except ValueError as exc:
                raise CliError(str(exc))
        else:
            try:
                g, coloring = cons.build_construction(
                    cons.ConstructionRequest(name, params, args.t))
            except ValueError as exc:
                raise CliError(str(exc))
    if args.output:
        _write(args.output, g.to_json())
    if args.coloring:
        _write(args.coloring, coloring.to_json())
    summary = {"t": coloring.t, "edges": g.edge_count}
    if classes is not None:
        summary["classes"] = list(classes)
    sys.stdout.write(canonical_json(summary))
    return EXIT_OK


def _cmd_check(args) -> int:
    g = _load_graph(args.graph)
    coloring = _load_coloring(args.coloring)
    if len(coloring.colors) != g.edge_count:
        raise CliError(
            f"coloring has {len(coloring.colors)} colors but graph has {g.edge_count} edges")
    validator = validate_cyclic if args.mode == "cyclic" else validate_interval
    result = validator(g, coloring)
    sys.stdout.write(canonical_json(result.to_dict()))
    return EXIT_OK if result.valid else EXIT_NEGATIVE


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    if args.t is not None:
        out = solver.decide(g, args.t, args.budget)
        sys.stdout.write(canonical_json(out.to_dict()))
        if out.decision == solver.FEASIBLE:
            return EXIT_OK
        if out.decision == solver.INFEASIBLE:
            return EXIT_NEGATIVE
        return EXIT_BUDGET
    fs = solver.feasible_set(g, t_hi=args.t_hi, node_budget=args.budget, jobs=args.jobs)
    sys.stdout.write(canonical_json(fs.to_dict()))
    return EXIT_OK if fs.exhausted else EXIT_BUDGET


def _cmd_bounds(args) -> int:
    g = _load_graph(args.graph)
    rep = bounds_mod.report(g)
    sys.stdout.write(rep.table() + "\n")
    sys.stdout.write(canonical_json(rep.to_dict()))
    return EXIT_OK


def _cmd_certify(args) -> int:
    g = _load_graph(args.graph)
    res = solver.certify_noncolorable(g, node_budget=args.budget)
    if isinstance(res, EdgeColoring):
        sys.stdout.write(canonical_json(
            {"status": "colorable", "witness": res.to_dict()}))
        return EXIT_OK
    assert isinstance(res, Certificate)
    status = "inconclusive" if res.inconclusive else "noncolorable"
    sys.stdout.write(canonical_json({"status": status, "certificate": res.to_dict()}))
    return EXIT_BUDGET if res.inconclusive else EXIT_NEGATIVE


def _cmd_scan(args) -> int:
    corpus_dir = Path(args.corpus)
    if not corpus_dir.is_dir():
        raise CliError(f"not a directory: {args.corpus}")
    graphs = []
    for path in sorted(corpus_dir.glob("*.json")):
        graphs.append(_load_graph(str(path)))
    report = solver.conjecture_scan(graphs, node_budget=args.budget, jobs=args.jobs)
    sys.stdout.write(canonical_json(report.to_dict()))
    return EXIT_NEGATIVE if report.counterexamples else EXIT_OK


def _hsv_ramp(c: int, t: int) -> str:
    return f"{(c - 1) / max(t, 1):.3f} 0.900 0.800"


def _cmd_export_dot(args) -> int:
    g = _load_graph(args.graph)
    coloring = _load_coloring(args.coloring) if args.coloring else None
    if coloring is not None and len(coloring.colors) != g.edge_count:
        raise CliError("coloring does not match the graph's edge count")
    lines = ["graph {"]
    for v in range(g.vertex_count):
        label = g.labels[v] if g.labels else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for i, (u, v) in enumerate(g.edges):
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            c = coloring.colors[i]
            lines.append(
                f'  {u} -- {v} [label="{c}", color="{_hsv_ramp(c, coloring.t)}"];')
    lines.append("}")
    _write(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intcyclic",
        description="Interval cyclic edge-colorings: generators, colorers, "
                    "validator, exact solver, bounds, and certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph")
    p.add_argument("family", help="cycle|path|complete|complete-bipartite|"
                   "complete-tripartite|hypercube|gdn|kstar|hub-tree|tree-hat|noncolorable")
    p.add_argument("params", nargs="*", help="integer family parameters")
    p.add_argument("-o", "--output", default=None, help="output graph file (default stdout)")
    p.add_argument("-g", "--graph", default=None, help="input tree file (tree-hat rules)")
    p.add_argument("--rule", choices=["kstar", "tree-hat"], default=None,
                   help="rule for the noncolorable family")
    p.add_argument("--n", type=int, default=None, help="clique parameter (kstar rule)")
    p.add_argument("--m", type=int, default=None, help="pendant count (kstar rule)")
    p.add_argument("--hubs", type=int, default=None)
    p.add_argument("--leaves", type=int, default=None)
    p.add_argument("--cert", default=None, help="certificate output (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("color", help="run an explicit coloring construction")
    p.add_argument("construction", help="gdn|complete-odd|bipartite-cyclic|"
                   "bipartite-interval|tripartite|hypercube-cyclic|hypercube-interval|mod-reduce")
    p.add_argument("params", nargs="*", help="integer construction parameters")
    p.add_argument("-o", "--output", default=None, help="output graph file")
    p.add_argument("-c", "--coloring", default=None, help="output coloring file")
    p.add_argument("-g", "--graph", default=None, help="input graph (mod-reduce)")
    p.add_argument("--input-coloring", dest="coloring_in", default=None,
                   help="input coloring (mod-reduce)")
    p.add_argument("--t", type=int, default=None,
                   help="target color count (mod-reduce, or fold an interval construction)")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("check", help="validate a coloring against a graph")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-c", "--coloring", required=True)
    p.add_argument("--mode", choices=["cyclic", "interval"], default="cyclic")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="decide one t or compute the feasible set")
    p.add_argument("-g", "--graph", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--t", type=int, default=None, help="decide this color count")
    group.add_argument("--feasible-set", action="store_true")
    p.add_argument("--t-hi", type=int, default=None, help="cap the searched range")
    p.add_argument("--budget", type=int, default=None,
                   help=f"search node budget per t (default {solver.DEFAULT_NODE_BUDGET})")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers over t values")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("bounds", help="print the bound report for a graph")
    p.add_argument("-g", "--graph", required=True)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("certify", help="witness coloring or non-colorability certificate")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("scan", help="conjecture scan over a directory of graph files")
    p.add_argument("--corpus", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("export-dot", help="emit DOT with edge color labels")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-c", "--coloring", default=None)
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (GraphError, ValueError) as exc:
        # bad parameters or malformed inputs that slipped past a verb's own
        # checks are still usage/format errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
