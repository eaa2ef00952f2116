"""Command-line front end.

Exit status: 0 success, 1 the checked property or suite failed, 2 bad
arguments or input, 3 precondition failure, 4 search budget exhausted,
5 construction defect.  PROPERCONN_BUDGET sets the default node budget.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Sequence

from . import constructions as C
from .errors import BudgetExceeded, ConstructionDefect, GraphFormatError, PreconditionError
from .families import FAMILIES, FamilySpec
from .graph import Graph, to_graph6
from .io import dumps, format_coloring, read_coloring, read_graphs, report_dict, report_text
from .paths import EdgeColoring, has_strong_property, is_k_proper_connected, is_proper_connected
from .solver import DEFAULT_NODE_BUDGET, pc_exact, pc_k_exact

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION, EXIT_BUDGET, EXIT_DEFECT = 0, 1, 2, 3, 4, 5


def _default_budget() -> int:
    raw = os.environ.get("PROPERCONN_BUDGET")
    if raw is None:
        return DEFAULT_NODE_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise GraphFormatError(f"PROPERCONN_BUDGET must be an integer, got {raw!r}") from None


def _params(items: Sequence[str] | None) -> tuple[tuple[str, int], ...]:
    out = []
    for item in items or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise GraphFormatError(f"parameter {item!r} is not of the form key=value")
        try:
            out.append((key, int(val)))
        except ValueError:
            raise GraphFormatError(f"parameter {key} needs an integer value") from None
    return tuple(out)


def _family(tag: str, items: Sequence[str] | None) -> Graph:
    params = _params(items)
    names = FAMILIES[tag][1]
    if sorted(k for k, _ in params) != sorted(names):
        raise GraphFormatError(f"family {tag} takes parameters {list(names)}")
    return FamilySpec(tag, params).build()


def _graphs(args: argparse.Namespace) -> list[Graph]:
    if args.family is not None:
        if args.input is not None:
            raise GraphFormatError("give either an input file or --family, not both")
        return [_canonical(_family(args.family, args.params))]
    src = args.input or "-"
    text = sys.stdin.read() if src == "-" else open(src).read()
    return read_graphs(text)


def _canonical(g: Graph) -> Graph:
    # edge ids in graph6 order, so colourings line up with `gen` output
    return Graph.canonical(g.n, g.edges)


def _reindex(g: Graph, c: EdgeColoring) -> tuple[Graph, EdgeColoring]:
    h = _canonical(g)
    colors = [0] * h.m
    for e, (a, b) in enumerate(g.edges):
        colors[h.edge_id(a, b)] = c.colors[e]
    return h, EdgeColoring(tuple(colors), c.k)


def _single(args: argparse.Namespace) -> Graph:
    gs = _graphs(args)
    if len(gs) != 1:
        raise GraphFormatError(f"expected one graph, input holds {len(gs)}")
    return gs[0]


def _emit_coloring(args: argparse.Namespace, c: EdgeColoring) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(format_coloring(c))


def cmd_pc(args: argparse.Namespace) -> int:
    for g in _graphs(args):
        res = pc_exact(g, args.budget) if args.k == 1 else pc_k_exact(g, args.k, args.budget)
        _emit_coloring(args, res.witness)
        if args.json:
            sys.stdout.write(dumps({
                "graph6": to_graph6(g),
                "k": args.k,
                "value": res.value,
                "coloring": list(res.witness.colors),
                "stats": {"nodes": res.stats.nodes, "colorings": res.stats.colorings,
                          "seconds": round(res.stats.seconds, 4)},
            }))
        else:
            print(res.value)
    return EXIT_OK


def cmd_pck(args: argparse.Namespace) -> int:
    try:
        return cmd_pc(args)
    except PreconditionError as exc:
        if "connected" in str(exc) and args.k >= 2:
            print(f"undefined: not {args.k}-connected")
            return EXIT_PRECONDITION
        raise


def cmd_verify(args: argparse.Namespace) -> int:
    g = _single(args)
    c = read_coloring(args.coloring)
    c.check_against(g)
    if args.strong:
        rep = has_strong_property(g, c, witnesses=args.witnesses)
    elif args.k and args.k > 1:
        rep = is_k_proper_connected(g, c, args.k, witnesses=args.witnesses)
    else:
        rep = is_proper_connected(g, c, witnesses=args.witnesses)
    sys.stdout.write(dumps(report_dict(rep)) if args.json else report_text(rep))
    return EXIT_OK if rep.holds else EXIT_FAIL


THEOREMS: dict[str, tuple[Callable[..., object], str]] = {
    "tree": (lambda g, tr, b: C.color_tree(g, tr), "proper"),
    "bridgeless": (lambda g, tr, b: C.color_bridgeless(g, tr, b).coloring, "strong"),
    "general": (lambda g, tr, b: C.color_general(g, tr, b), "proper"),
    "cycle-chord": (None, "k2"),  # built from --params n=...
    "dirac-pc2": (lambda g, tr, b: C.color_dirac_pc2(g, tr), "k2"),
    "ore-pc2": (lambda g, tr, b: C.color_ore_pc2(g, tr), "k2"),
    "dense2": (lambda g, tr, b: C.color_dense_two(g, tr, b), "proper"),
    "dense3": (lambda g, tr, b: C.color_dense_three(g, tr, b), "proper"),
}


def cmd_color(args: argparse.Namespace) -> int:
    trace: list[str] = []
    fn, mode = THEOREMS[args.theorem]
    if args.theorem == "cycle-chord":
        params = dict(_params(args.params))
        if set(params) != {"n"}:
            raise GraphFormatError("cycle-chord takes --params n=<int>")
        g, c = _reindex(*C.color_cycle_chord(params["n"]))
        trace.append(f"cycle plus chord on {params['n']} vertices")
    else:
        g = _single(args)
        try:
            c = fn(g, trace, args.budget)
        except PreconditionError as exc:
            if not args.fallback_exact:
                raise
            res = pc_exact(g, args.budget) if mode != "k2" else pc_k_exact(g, 2, args.budget)
            c = res.witness
            trace.append(f"precondition failed ({exc}); exact search instead")
    _emit_coloring(args, c)
    if args.json:
        sys.stdout.write(dumps({
            "graph6": to_graph6(g),
            "theorem": args.theorem,
            "verified_as": mode,
            "palette": max(c.colors, default=0),
            "coloring": list(c.colors),
            "provenance": trace,
        }))
    else:
        if not args.out:
            sys.stdout.write(format_coloring(c))
        for line in trace:
            print(f"provenance: {line}", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    g = _family(args.family, args.params)
    print(to_graph6(g))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    from .sweeps import SUITES

    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        res = SUITES[name]()
        ok &= res.passed
        if args.json:
            sys.stdout.write(dumps(res.to_dict()))
            continue
        print(f"== {name}: {'PASS' if res.passed else 'FAIL'} ({res.seconds:.1f}s)")
        for case, good, detail in res.rows:
            print(f"  {'pass' if good else 'FAIL'}  {case:<48} {detail}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    from .sweeps import SUITES

    p = argparse.ArgumentParser(prog="properconn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("input", nargs="?", help="graph6 lines or an edge list; '-' or omitted reads stdin")
        sp.add_argument("--family", choices=sorted(FAMILIES), help="build the input from a named family")
        sp.add_argument("--params", nargs="*", metavar="KEY=INT", help="family parameters")
        sp.add_argument("--budget", type=int, default=None, help="search node budget")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("pc", help="exact proper connection number")
    graph_input(sp)
    sp.add_argument("--out", help="write the witness colouring here")
    sp.set_defaults(func=cmd_pc, k=1)

    sp = sub.add_parser("pck", help="exact k-proper connection number")
    graph_input(sp)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--out", help="write the witness colouring here")
    sp.set_defaults(func=cmd_pck)

    sp = sub.add_parser("verify", help="check a colouring")
    graph_input(sp)
    sp.add_argument("--coloring", required=True, help="colouring file ('m k' then one colour per line)")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--k", type=int, default=1)
    mode.add_argument("--strong", action="store_true")
    sp.add_argument("--witnesses", action="store_true", help="include witness paths")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("color", help="run a construction")
    graph_input(sp)
    sp.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    sp.add_argument("--out", help="write the colouring here instead of stdout")
    sp.add_argument("--fallback-exact", action="store_true",
                    help="use exact search when the construction's precondition fails")
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("gen", help="emit a family member as graph6")
    sp.add_argument("--family", required=True, choices=sorted(FAMILIES))
    sp.add_argument("--params", nargs="*", metavar="KEY=INT")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("sweep", help="run a named validation suite")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if hasattr(args, "budget") and args.budget is None:
            args.budget = _default_budget()
        return args.func(args)
    except (GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ConstructionDefect as exc:
        print(f"construction defect: {exc}", file=sys.stderr)
        return EXIT_DEFECT


if __name__ == "__main__":
    sys.exit(main())
