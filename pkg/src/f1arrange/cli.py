"""Command line entry point.

Exit codes: 0 success, 1 a self-check failed (implementation bug), 2 bad
input, 3 a computation budget was exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .arrangement import format_arrangement, read_arrangement
from .errors import BudgetError, InputError, InternalTheoremViolation
from .graphs import read_graph
from .reports import Report, charpoly_report, count_report, f1_report, graph_report

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _prime(text: str) -> int:
    from .oracle import is_prime

    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the machine-readable report")

    parser = _Parser(
        prog="f1arrange",
        description="Characteristic polynomials and F1-structures of hyperplane arrangement complements.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial of an arrangement file")
    p.add_argument("file")
    p.add_argument("--method", choices=("mobius", "delres", "both"), default=None,
                   help="default: both for central input, mobius for affine input")

    p = sub.add_parser("f1", parents=[common], help="torification verdict for an arrangement file")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="cross-check by counting points over a prime field")
    p.add_argument("--q", type=_prime, default=None, help="prime for the oracle (implies --oracle)")

    p = sub.add_parser("graph", parents=[common], help="cycle-space arrangement of a graph file")
    p.add_argument("file")
    p.add_argument("--emit-arrangement", metavar="OUT", default=None,
                   help="write A_G in the arrangement file format")
    p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("count", parents=[common], help="enumerate the complement over F_q")
    p.add_argument("file")
    p.add_argument("--q", type=_prime, required=True)
    return parser


def _run(args) -> Report:
    if args.command == "charpoly":
        a = read_arrangement(args.file)
        method = args.method or ("both" if a.is_central else "mobius")
        if method != "mobius" and not a.is_central:
            raise InputError("deletion-restriction needs a central arrangement; use --method mobius")
        return charpoly_report(a, method)
    if args.command == "f1":
        return f1_report(read_arrangement(args.file), oracle=args.oracle, q=args.q)
    if args.command == "graph":
        rep, arr = graph_report(read_graph(args.file), oracle=args.oracle)
        if args.emit_arrangement:
            with open(args.emit_arrangement, "w", encoding="utf-8") as fh:
                fh.write(format_arrangement(arr, comment=f"cycle-space arrangement of {args.file}"))
        return rep
    if args.command == "count":
        return count_report(read_arrangement(args.file), args.q)
    raise AssertionError(args.command)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        rep = _run(args)
    except InternalTheoremViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, OSError, UnicodeDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(rep.to_json() if args.json else rep.to_text())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
