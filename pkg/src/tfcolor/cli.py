"""Command line entry point.

Exit codes: 0 success, 1 I/O, parse or verification failure, 2 the input is
not a triangle-free sphere embedding, 3 ``extend`` input is not a valid pair.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .discharging import audit
from .errors import NotSphere, ParseError, SpecOutOfRange, TFColorError, TriangleFound
from .formats import format_coloring, format_trace, parse_coloring, read_graph, serialize
from .generators import FAMILIES, GenSpec, generate
from .oracle import brute_force_3color, first_violation
from .solver import SolverConfig, extend, three_color
from .validity import ValidPair, valid_pair_problem

EXIT_OK, EXIT_ERROR, EXIT_EMBEDDING, EXIT_INVALID_PAIR = 0, 1, 2, 3

# families taking (n, seed); the rest take explicit parameters
_SEEDED = {"random_insertion", "random_chorded", "random_core"}


def _err(msg: str) -> None:
    print(f"tfcolor: {msg}", file=sys.stderr)


def _cfg(args) -> SolverConfig:
    return SolverConfig(use_brute_base=not args.no_base_shortcut, emit_trace=bool(args.trace))


def _write_trace(path: str | None, lines) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(format_trace(lines))


def cmd_color(args) -> int:
    gf = read_graph(args.file)
    col, trace = three_color(gf.graph, _cfg(args))
    _write_trace(args.trace, trace.lines())
    sys.stdout.write(format_coloring(col))
    return EXIT_OK


def cmd_extend(args) -> int:
    gf = read_graph(args.file)
    if gf.boundary is None:
        _err("extend needs 'color' lines for the outer cycle")
        return EXIT_INVALID_PAIR
    why = valid_pair_problem(gf.graph, gf.boundary)
    if why:
        _err(f"not a valid pair: {why}")
        return EXIT_INVALID_PAIR
    col, trace = extend(ValidPair(gf.graph, gf.boundary), _cfg(args))
    _write_trace(args.trace, trace.lines())
    sys.stdout.write(format_coloring(col))
    return EXIT_OK


def cmd_verify(args) -> int:
    gf = read_graph(args.file)
    with open(args.coloring, encoding="utf-8") as fh:
        col = parse_coloring(fh.read(), gf.graph.n)
    pre = gf.boundary.as_dict() if gf.boundary else None
    bad = first_violation(gf.graph, col, pre)
    if bad is None:
        print("OK")
        return EXIT_OK
    if len(bad) == 2:
        u, v = bad
        print(f"VIOLATION edge {u} {v} color {col[u]}")
    elif col[bad[0]] not in (1, 2, 3):
        print(f"VIOLATION vertex {bad[0]} color {col[bad[0]]} not in 1..3")
    else:
        print(f"VIOLATION vertex {bad[0]} color {col[bad[0]]} boundary {pre[bad[0]]}")
    return EXIT_ERROR


def cmd_audit(args) -> int:
    gf = read_graph(args.file)
    sys.stdout.write(audit(gf.graph).text())
    return EXIT_OK


def cmd_oracle(args) -> int:
    gf = read_graph(args.file)
    col = brute_force_3color(gf.graph, gf.boundary.as_dict() if gf.boundary else None)
    sys.stdout.write("UNCOLORABLE\n" if col is None else format_coloring(col))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.params:
        params = tuple(int(p) for p in args.params.split(","))
    elif args.n is not None:
        params = (args.n, args.n) if args.family == "grid" else (args.n,)
    else:
        params = ()
    spec = GenSpec(args.family, params, args.seed)
    g = generate(spec)
    text = f"# {spec.manifest_line()}\n" + serialize(g)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tfcolor",
                                 description="3-colouring of triangle-free plane graphs")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, fn, hlp in (("color", cmd_color, "3-colour a graph file"),
                          ("extend", cmd_extend, "extend the outer-cycle colouring")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("file")
        p.add_argument("--no-base-shortcut", action="store_true",
                       help="reduce all the way down instead of brute forcing small pieces")
        p.add_argument("--trace", metavar="OUT", help="write reduction steps to OUT")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="check a colouring file against a graph file")
    p.add_argument("file")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="print the discharging report")
    p.add_argument("file")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("oracle", help="brute-force colouring (respects colour lines)")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a generated graph file")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--params", help="comma separated family parameters, e.g. 3,4 for grid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True, help="output path, '-' for stdout")
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotSphere, TriangleFound) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_EMBEDDING
    except (ParseError, SpecOutOfRange, TFColorError, OSError) as exc:
        _err(f"{type(exc).__name__}: {exc}")
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
