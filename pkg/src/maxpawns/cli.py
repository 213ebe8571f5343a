"""Command-line front end.

Exit codes: 0 on success, 1 on bad flags or bad input, 2 when ``verify``
finds a failing identity.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijection, board, oracle, strips, verify


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _even_halves(rows, cols):
    if rows < 1 or cols < 1:
        raise UsageError(f"sizes must be positive, got {rows}x{cols}")
    if rows % 2 or cols % 2:
        raise UsageError(f"odd dimensions {rows}x{cols}: rows and cols must be even")
    return rows // 2, cols // 2


def _read_board(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    try:
        return board.load_board(text)
    except board.BoardError as exc:
        raise UsageError(f"parse error: {exc}")


def _format_board(b, fmt):
    if fmt == "json":
        return board.to_json(b) + "\n"
    return board.render_ascii(b)


def cmd_count(args, out):
    if args.method == "dp":
        result = oracle.count_max_arrangements(args.rows, args.cols)
        out.write(f"{result.num_max_arrangements}\n")
        return 0
    n, m = _even_halves(args.rows, args.cols)
    if args.method == "formula":
        value = bijection.arrangement_count(n, m)
    else:
        value = oracle.count_via_strip_chains(n, m)
    out.write(f"{value}\n")
    return 0


def cmd_decode(args, out):
    n, m = _even_halves(args.rows, args.cols)
    if len(args.R) != len(args.C):
        raise UsageError(f"R has {len(args.R)} elements but C has {len(args.C)}")
    p = bijection.SubsetPair(n, m, tuple(args.R), tuple(args.C))
    out.write(_format_board(bijection.phi(p), args.format))
    return 0


def cmd_encode(args, out):
    b = _read_board(args.board)
    out.write(bijection.phi_inverse(b).to_json() + "\n")
    return 0


def cmd_rank(args, out):
    b = _read_board(args.board)
    out.write(f"{bijection.rank(b)}\n")
    return 0


def cmd_unrank(args, out):
    n, m = _even_halves(args.rows, args.cols)
    out.write(_format_board(bijection.unrank(args.index, n, m), args.format))
    return 0


def cmd_strips(args, out):
    M = strips.build_strip_matrix(args.m)
    if args.format == "json":
        grid = [[str(s) for s in row] for row in M.entries]
        out.write(json.dumps({"m": args.m, "entries": grid}, separators=(",", ":")) + "\n")
    else:
        out.write("\n".join(" ".join(str(s) for s in row) + "\n" for row in M.entries))
    return 0


def cmd_enumerate(args, out):
    if args.limit is not None and args.limit < 0:
        raise UsageError("--limit must be non-negative")
    boards = oracle.enumerate_max_arrangements(args.rows, args.cols)
    if args.limit is not None:
        boards = boards[:args.limit]
    if args.format == "json":
        out.write("".join(board.to_json(b) + "\n" for b in boards))
    else:
        out.write("\n".join(board.render_ascii(b) for b in boards))
    return 0


def cmd_verify(args, out):
    if not 2 <= args.max_semi <= verify.MAX_SEMI_LIMIT:
        raise UsageError(f"--max-semi must be in 2..{verify.MAX_SEMI_LIMIT}")
    results = verify.run_checks(args.max_semi)
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'} {r.name}"
        out.write(line + (f": {r.detail}" if r.detail else "") + "\n")
    failed = [r for r in results if not r.passed]
    if failed:
        sys.stderr.write(f"verification failed: {failed[0].name}: {failed[0].detail}\n")
        return 2
    return 0


def build_parser():
    parser = _Parser(prog="maxpawns",
                     description="Maximum nonattacking pawn arrangements on even boards.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def sizes(p):
        p.add_argument("--rows", type=int, required=True)
        p.add_argument("--cols", type=int, required=True)

    def fmt(p):
        p.add_argument("--format", choices=("ascii", "json"), default="ascii")

    p = sub.add_parser("count", help="count maximum arrangements")
    sizes(p)
    p.add_argument("--method", choices=("formula", "dp", "chains"), default="dp")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("decode", help="subset pair -> board")
    sizes(p)
    p.add_argument("--R", type=_int_list, required=True, metavar="r1,r2,...")
    p.add_argument("--C", type=_int_list, required=True, metavar="c1,c2,...")
    fmt(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("encode", help="board file -> subset pair JSON")
    p.add_argument("board", help="board file (JSON or ASCII), '-' for stdin")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("rank", help="board file -> rank")
    p.add_argument("board", help="board file (JSON or ASCII), '-' for stdin")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("unrank", help="rank -> board")
    sizes(p)
    p.add_argument("--index", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_unrank)

    p = sub.add_parser("strips", help="print the strip matrix")
    p.add_argument("--m", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_strips)

    p = sub.add_parser("enumerate", help="list maximum arrangements by brute force")
    sizes(p)
    p.add_argument("--limit", type=int, default=None)
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="cross-check constructions against brute force")
    p.add_argument("--max-semi", type=int, default=5)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"maxpawns {args.command}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
