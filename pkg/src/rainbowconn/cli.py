"""Command-line front end.

Exit codes: 0 success, 1 verification or sweep failure, 2 solver size
limit, 64 unreadable input or bad usage, 65 precondition violation,
70 internal inconsistency.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import io
from .audit import audit_lower_bound
from .coloring import rc_coloring, src_coloring
from .errors import (
    ArithmeticInconsistencyError,
    AuditInconsistencyError,
    BindingError,
    BoundTooSmallError,
    GraphFormatError,
    InvalidParameterError,
    PreconditionError,
    SizeLimitError,
)
from .solver import DEFAULT_MAX_EDGES, rc_exact, src_exact
from .sweep import sweep
from .verify import verify
from .witness import WitnessParams, build_witness

EXIT_FAIL = 1
EXIT_SIZE_LIMIT = 2
EXIT_PARSE = 64
EXIT_PRECONDITION = 65
EXIT_INTERNAL = 70


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _construct(args) -> int:
    wg = build_witness(WitnessParams(args.a, args.b))
    io.write_atomic(args.out, io.dumps(io.witness_to_json(wg)))
    return 0


def _color(args) -> int:
    wg = io.witness_from_json(io.read_json(args.graph))
    c = rc_coloring(wg) if args.scheme == "rc" else src_coloring(wg)
    io.write_atomic(args.out, io.dumps(io.coloring_to_json(c)))
    return 0


def _verify(args) -> int:
    g = io.graph_from_json(io.read_json(args.graph))
    c = io.coloring_from_json(io.read_json(args.coloring), g)
    report = verify(g, c, args.mode)
    io.write_atomic(args.report, io.dumps(report.to_json()))
    return 0 if report.passed else EXIT_FAIL


def _solve(args) -> int:
    g = io.graph_from_json(io.read_json(args.graph))
    fn = rc_exact if args.kind == "rc" else src_exact
    result = fn(g, args.k_max, max_edges=args.max_edges)
    io.write_atomic(args.out, io.dumps(result.to_json()))
    return 0


def _audit(args) -> int:
    wg = build_witness(WitnessParams(args.a, args.b))
    c = io.coloring_from_json(io.read_json(args.coloring), wg.graph)
    result = audit_lower_bound(wg, c)
    io.write_atomic(args.out, io.dumps(result.to_json()))
    return 0


def _sweep(args) -> int:
    points = sweep(args.a_max, args.b_max, args.samples, args.seed)
    ok = all(p.ok for p in points)
    report = {
        "seed": args.seed,
        "samples": args.samples,
        "all_passed": ok,
        "points": [p.to_json() for p in points],
    }
    io.write_atomic(args.report, io.dumps(report))
    return 0 if ok else EXIT_FAIL


def _export(args) -> int:
    obj = io.read_json(args.graph)
    g = io.graph_from_json(obj)
    c = io.coloring_from_json(io.read_json(args.coloring), g) if args.coloring else None
    if args.format == "dot":
        text = io.to_dot(g, c)
    else:
        text = io.dumps(io.witness_to_json(io.witness_from_json(obj)) if "labels" in obj else io.graph_to_json(g))
    io.write_atomic(args.out, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbowconn", description="Rainbow connection toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="write the witness graph G(a, b)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_construct)

    p = sub.add_parser("color", help="write the rc or src coloring of a witness")
    p.add_argument("--graph", required=True)
    p.add_argument("--scheme", choices=("rc", "src"), required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_color)

    p = sub.add_parser("verify", help="check (strong) rainbow connectivity")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--mode", choices=("rainbow", "strong"), required=True)
    p.add_argument("--report", required=True)
    p.set_defaults(func=_verify)

    p = sub.add_parser("solve", help="exact rc or src of a small graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=("rc", "src"), required=True)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_solve)

    p = sub.add_parser("audit", help="refute a (b-1)-coloring of G(a, b)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_audit)

    p = sub.add_parser("sweep", help="grid check over 3 <= a <= b")
    p.add_argument("--a-max", type=int, required=True)
    p.add_argument("--b-max", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--report", required=True)
    p.set_defaults(func=_sweep)

    p = sub.add_parser("export", help="re-emit a graph as JSON or DOT")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", default=None)
    p.add_argument("--format", choices=("json", "dot"), default="dot")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_export)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE_LIMIT
    except (GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidParameterError, BindingError, PreconditionError, BoundTooSmallError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (AuditInconsistencyError, ArithmeticInconsistencyError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
