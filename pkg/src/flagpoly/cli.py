"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 oracle resource refusal.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from flagpoly import grouporders, verify
from flagpoly.errors import FlagPolyError, ResourceLimit
from flagpoly.fforacle.linalg import check_prime
from flagpoly.flagcount import dims_from_blocks, f_count
from flagpoly.polyring import Polynomial, to_json_obj, to_latex, to_text
from flagpoly.qcombinatorics import Partition

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_REFUSED = 0, 1, 2, 3

log = logging.getLogger("flagpoly")


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return values


def _partition(n: int, parts: Sequence[int]) -> Partition:
    if any(x <= 0 for x in parts):
        raise UsageError(f"partition parts must be positive: {list(parts)}")
    pi = Partition(tuple(parts))
    if pi.n != n:
        raise UsageError(f"partition {list(parts)} does not sum to n = {n}")
    return pi


def _blocks(n: int, blocks: Sequence[int]) -> tuple[int, ...]:
    if not blocks or any(x <= 0 for x in blocks):
        raise UsageError(f"blocks must be positive: {list(blocks)}")
    if sum(blocks) != n:
        raise UsageError(f"blocks {list(blocks)} do not sum to n = {n}")
    return tuple(blocks)


def render(p: Polynomial, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_json_obj(p), separators=(",", ":"))
    if fmt == "latex":
        return f"${to_latex(p)}$"
    return to_text(p)


def cmd_fpoly(args) -> int:
    pi = _partition(args.n, args.partition)
    blocks = _blocks(args.n, args.blocks)
    print(render(f_count(pi, dims_from_blocks(blocks)), args.format))
    return EXIT_OK


def cmd_kpoly(args) -> int:
    blocks = _blocks(args.n, args.blocks)
    print(render(grouporders.k_poly(args.n, blocks, args.flavor), args.format))
    return EXIT_OK


def table1_rows(max_n: int) -> list[tuple[int, Polynomial]]:
    cache: dict = {}
    return [(n, grouporders.k_poly(n, (1,) * n, "pgl", cache)) for n in range(2, max_n + 1)]


def format_table1(rows: list[tuple[int, Polynomial]], fmt: str) -> str:
    if fmt == "json":
        return "\n".join(
            json.dumps({"n": n, **to_json_obj(p)}, separators=(",", ":")) for n, p in rows
        )
    if fmt == "latex":
        lines = [
            r"\begin{tabular}{|l|p{400pt}|}",
            r"\hline $n$ & $k(U_n(q),\mathrm{PGL}_n(q))$ \\",
        ]
        for i, (n, p) in enumerate(rows):
            sep = r"\hline\hline" if i == 0 else r"\hline"
            lines.append(f"{sep} {n} & ${to_latex(p)}$ \\\\")
        lines.append(r"\hline")
        lines.append(r"\end{tabular}")
        return "\n".join(lines)
    width = len(str(rows[-1][0])) if rows else 1
    lines = [f"{'n':>{width}}  k(U_n(q),PGL_n(q))"]
    lines += [f"{n:>{width}}  {to_text(p)}" for n, p in rows]
    return "\n".join(lines)


def cmd_table1(args) -> int:
    if not 2 <= args.max_n:
        raise UsageError("--max-n must be at least 2")
    print(format_table1(table1_rows(args.max_n), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    for prime in args.primes:
        try:
            check_prime(prime)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    failures = refusals = total = 0
    for rec in verify.run_suite(args.suite, args.max_n, args.primes):
        print(json.dumps(rec, separators=(",", ":")), flush=True)
        f, r, t = verify.summarize([rec])
        failures, refusals, total = failures + f, refusals + r, total + t
    print(f"{total} checks, {failures} failed, {refusals} refused", file=sys.stderr)
    return verify.exit_code(failures, refusals)


def betti_numbers(pi: Partition, blocks: Sequence[int]) -> tuple[list[tuple[int, int]], int]:
    f = f_count(pi, dims_from_blocks(blocks))
    return [(2 * i, c) for i, c in enumerate(f.coeffs)], f(1)


def cmd_betti(args) -> int:
    pi = _partition(args.n, args.partition)
    blocks = _blocks(args.n, args.blocks)
    numbers, euler = betti_numbers(pi, blocks)
    if args.format == "json":
        print(json.dumps({"betti": {f"b_{k}": v for k, v in numbers}, "euler": euler}))
    else:
        for k, v in numbers:
            print(f"b_{k} = {v}")
        print(f"euler = {euler}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagpoly",
        description="Flag counts and unipotent-radical class counts for GL_n as polynomials in q.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def shape_args(p, with_partition=True):
        p.add_argument("--n", type=int, required=True)
        if with_partition:
            p.add_argument("--partition", type=_int_list, required=True, help="parts, e.g. 2,1")
        p.add_argument("--blocks", type=_int_list, required=True, help="block sizes, e.g. 1,1,1")

    fmt = dict(choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("fpoly", help="number of radical conjugates containing a unipotent")
    shape_args(p)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_fpoly)

    p = sub.add_parser("kpoly", help="number of U-conjugacy classes in GL_n or PGL_n")
    shape_args(p, with_partition=False)
    p.add_argument("--flavor", choices=("gl", "pgl"), default="gl")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_kpoly)

    p = sub.add_parser("table1", help="k(U_n(q), PGL_n(q)) for n = 2..max_n")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("verify", help="run verification suites, one JSON record per line")
    p.add_argument("--suite", choices=("appendix", "oracle", "all"), default="all")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--primes", type=_int_list, default=(2, 3, 5))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("betti", help="coefficients read as Betti numbers")
    shape_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_betti)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"flagpoly: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (UsageError, FlagPolyError) as exc:
        print(f"flagpoly: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
