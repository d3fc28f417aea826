"""``nutgraphs`` command-line tool.

Graphs travel as graph6 on stdin/stdout so commands compose with pipes.
Exit status: 0 success, 1 domain rejection, 2 malformed input. Timings and
commentary go to stderr; stdout is deterministic.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import catalog, enumeration, synthesis
from .constructions import CirculantSpec, antiprism, circulant, fowler, subdivide_4fold
from .graph import Graph, Graph6Error, GraphError, parse_graph6, write_dot, write_graph6
from .kernel import Tag, classify, kernel

EXIT_OK = 0
EXIT_REJECT = 1
EXIT_MALFORMED = 2


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read_graphs(source: Optional[str]) -> list[Graph]:
    if source is None or source == "-":
        text = sys.stdin.read()
    else:
        text = source
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise _Fail(EXIT_MALFORMED, "no graph6 input")
    try:
        return [parse_graph6(ln) for ln in lines]
    except (Graph6Error, GraphError) as exc:
        raise _Fail(EXIT_MALFORMED, f"bad graph6: {exc}") from None


def _read_one(source: Optional[str]) -> Graph:
    graphs = _read_graphs(source)
    if len(graphs) != 1:
        raise _Fail(EXIT_MALFORMED, f"expected one graph, got {len(graphs)}")
    return graphs[0]


def _emit_graph(g: Graph, dot: bool) -> None:
    print(write_graph6(g))
    if dot:
        sys.stdout.write(write_dot(g))


def _verify_text(g: Graph) -> str:
    cls = classify(g)
    cert = kernel(g)
    return f"{cls.tag.value}, nullity {cls.nullity}\n" + cert.to_text()


def cmd_verify(args) -> int:
    for g in _read_graphs(args.graph6):
        sys.stdout.write(_verify_text(g))
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        g, cert, plan = synthesis.construct_regular_nut(args.degree, args.order)
    except synthesis.SynthesisError as exc:
        v = exc.verdict
        raise _Fail(EXIT_REJECT, f"{v.status.value}: {v.reason}") from None
    print(
        f"seed {plan.seed_name} (order {plan.seed_order}), {plan.steps} Fowler step(s) at {plan.vertex_rule}",
        file=sys.stderr,
    )
    if args.emit == "graph6":
        print(write_graph6(g))
    elif args.emit == "dot":
        sys.stdout.write(write_dot(g))
    else:
        print("nullity 1")
        print(" ".join(map(str, cert.vector)))
    return EXIT_OK


def cmd_fowler(args) -> int:
    g = _read_one(args.graph6)
    if not 0 <= args.vertex < g.order:
        raise _Fail(EXIT_MALFORMED, f"vertex {args.vertex} out of range 0..{g.order - 1}")
    try:
        h = fowler(g, args.vertex)
    except ValueError as exc:
        raise _Fail(EXIT_REJECT, str(exc)) from None
    _emit_graph(h, args.dot)
    return EXIT_OK


def cmd_subdivide(args) -> int:
    g = _read_one(args.graph6)
    u, v = args.edge
    if not (0 <= u < g.order and 0 <= v < g.order):
        raise _Fail(EXIT_MALFORMED, f"edge ({u}, {v}) has a label outside 0..{g.order - 1}")
    try:
        h = subdivide_4fold(g, (u, v))
    except ValueError as exc:
        raise _Fail(EXIT_REJECT, str(exc)) from None
    _emit_graph(h, args.dot)
    return EXIT_OK


def cmd_antiprism(args) -> int:
    try:
        g = antiprism(args.n)
    except ValueError as exc:
        raise _Fail(EXIT_REJECT, str(exc)) from None
    _emit_graph(g, args.dot)
    return EXIT_OK


def cmd_circulant(args) -> int:
    try:
        g = circulant(CirculantSpec(args.order, tuple(args.offsets)))
    except ValueError as exc:
        raise _Fail(EXIT_REJECT, str(exc)) from None
    _emit_graph(g, args.dot)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        report = enumeration.run_census(
            args.order,
            args.regular,
            long_run=args.long_run,
            jobs=args.jobs,
            keep_nuts=args.emit_nuts is not None,
        )
    except enumeration.EnumerationBoundError as exc:
        raise _Fail(EXIT_REJECT, str(exc)) from None
    sys.stdout.write(report.to_table())
    if args.emit_nuts is not None:
        with open(args.emit_nuts, "w") as fh:
            fh.writelines(s + "\n" for s in report.nuts)
    print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK


def cmd_seeds(args) -> int:
    if args.action == "list":
        for e in catalog.all_seeds():
            rho = "-" if e.expected_degree is None else e.expected_degree
            print(f"{e.name}\t{e.expected_order}\t{rho}\t{e.expected_class.value}")
        return EXIT_OK
    if args.name is None:
        raise _Fail(EXIT_MALFORMED, "seeds show needs a name")
    try:
        e = catalog.seed(args.name)
    except KeyError as exc:
        raise _Fail(EXIT_REJECT, exc.args[0]) from None
    print(e.graph6)
    sys.stdout.write(_verify_text(e.graph))
    if e.graph6 != write_graph6(e.graph) or classify(e.graph).tag is not Tag.NUT:
        print(f"warning: {e.name} does not classify as {e.expected_class.value}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nutgraphs", description="Nut graph verification, construction and census.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="classify graph6 input and print a kernel certificate")
    s.add_argument("graph6", nargs="?", help="graph6 string; '-' or omitted reads stdin")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("construct", help="build a regular nut graph of given degree and order")
    s.add_argument("--degree", "-r", type=int, required=True)
    s.add_argument("--order", "-n", type=int, required=True)
    s.add_argument("--emit", choices=("graph6", "dot", "certificate"), default="graph6")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("fowler", help="apply the Fowler construction at a vertex")
    s.add_argument("graph6", nargs="?")
    s.add_argument("--vertex", "-v", type=int, required=True)
    s.add_argument("--dot", action="store_true", help="also print DOT")
    s.set_defaults(func=cmd_fowler)

    s = sub.add_parser("subdivide", help="replace an edge by a path with four inner vertices")
    s.add_argument("graph6", nargs="?")
    s.add_argument("--edge", "-e", type=int, nargs=2, required=True, metavar=("U", "V"))
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_subdivide)

    s = sub.add_parser("antiprism", help="antiprism on 2n vertices")
    s.add_argument("n", type=int)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_antiprism)

    s = sub.add_parser("circulant", help="circulant graph with given offsets")
    s.add_argument("order", type=int)
    s.add_argument("offsets", type=int, nargs="+")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_circulant)

    s = sub.add_parser("enumerate", help="census of nut graphs of a given order")
    s.add_argument("--order", "-n", type=int, required=True)
    s.add_argument("--regular", "-r", type=int, default=None)
    s.add_argument("--long-run", action="store_true")
    s.add_argument("--emit-nuts", metavar="FILE", default=None)
    s.add_argument("--jobs", "-j", type=int, default=1)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("seeds", help="list or show the built-in seed graphs")
    s.add_argument("action", choices=("list", "show"))
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_seeds)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
