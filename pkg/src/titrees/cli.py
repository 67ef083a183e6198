"""Command line entry point.

Usage:
    titrees <mode> <n_max> [m] [--threads T] [--deterministic]
            [--verify-against-oracle] [--output PATH]

The mode comes first and is one of -c/count (per-order census), -g/graph6,
-s/sparse6, -p/parent-list (one encoded tree per line) or verify (compare
generator output against the brute-force oracle).  n_max bounds the tree
order and the optional m bounds the maximum vertex degree.

Exit status: 0 success, 1 usage error, 2 verification mismatch, 3 I/O
failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from collections import Counter
from typing import BinaryIO, Sequence

from .formats import graph6_line, parent_list_line, sparse6_line, to_edge_list
from .generation import generate_ti_trees, generate_ti_trees_parallel
from .oracle import (
    MAX_ENUMERATION_ORDER,
    AdjacencyTree,
    canonical_form,
    enumerate_free_trees,
    is_ti_graph,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_MISMATCH = 2
EXIT_IO = 3

_MODE_ALIASES = {
    "-c": "count",
    "-g": "graph6",
    "-s": "sparse6",
    "-p": "parent-list",
    "--count": "count",
    "--graph6": "graph6",
    "--sparse6": "sparse6",
    "--parent-list": "parent-list",
}

_ENCODERS = {
    "graph6": graph6_line,
    "sparse6": sparse6_line,
    "parent-list": parent_list_line,
}


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on bad usage; we reserve that."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="titrees",
        description="Generate all transmission irregular trees up to a given order.",
    )
    parser.add_argument(
        "mode",
        choices=["count", "graph6", "sparse6", "parent-list", "verify"],
        help="count (-c), graph6 (-g), sparse6 (-s), parent-list (-p), or verify",
    )
    parser.add_argument("n_max", type=int, help="maximum tree order, >= 1")
    parser.add_argument(
        "m",
        type=int,
        nargs="?",
        default=None,
        help="maximum vertex degree, >= 2 (default: unbounded)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes for phase 2 (default: available parallelism)",
    )
    parser.add_argument(
        "--deterministic",
        action="store_true",
        help="single-threaded run with canonical output ordering",
    )
    parser.add_argument(
        "--verify-against-oracle",
        action="store_true",
        help="cross-check against brute-force enumeration (implies verify mode)",
    )
    parser.add_argument(
        "--output",
        default=None,
        metavar="PATH",
        help="write results to PATH instead of standard output",
    )
    return parser


def _run_verify(n_max: int, m: int | None, out: BinaryIO) -> int:
    """Compare canonical-form multisets of generator and oracle per order."""
    generated: dict[int, Counter] = {k: Counter() for k in range(1, n_max + 1)}

    def collect(tree) -> None:
        adjacency = AdjacencyTree.from_edges(tree.order, to_edge_list(tree))
        generated[tree.order][canonical_form(adjacency)] += 1

    generate_ti_trees(n_max, m, collect)

    status = EXIT_OK
    for order in range(1, n_max + 1):
        expected: Counter = Counter()

        def check(tree: AdjacencyTree) -> None:
            if m is not None and any(len(ns) > m for ns in tree.adjacency):
                return
            if is_ti_graph(tree):
                expected[canonical_form(tree)] += 1

        enumerate_free_trees(order, check)
        if generated[order] == expected:
            out.write(f"order {order}: OK ({sum(expected.values())} trees)\n".encode())
        else:
            out.write(
                f"order {order}: MISMATCH (generator {sum(generated[order].values())}, "
                f"oracle {sum(expected.values())})\n".encode()
            )
            status = EXIT_VERIFY_MISMATCH
    return status


def _run(args: argparse.Namespace, out: BinaryIO) -> int:
    mode = "verify" if args.verify_against_oracle else args.mode
    parallel = not args.deterministic and args.threads > 1

    if mode == "verify":
        return _run_verify(args.n_max, args.m, out)

    if mode == "count":
        if parallel:
            census = generate_ti_trees_parallel(args.n_max, args.m, workers=args.threads)
        else:
            census = generate_ti_trees(args.n_max, args.m)
        for order, count in census.items():
            out.write(f"{order} {count}\n".encode())
        return EXIT_OK

    encoder = _ENCODERS[mode]
    if parallel:
        generate_ti_trees_parallel(
            args.n_max,
            args.m,
            workers=args.threads,
            encoder=encoder,
            write=lambda line: out.write(line + b"\n"),
        )
    else:
        generate_ti_trees(args.n_max, args.m, lambda tree: out.write(encoder(tree) + b"\n"))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] in _MODE_ALIASES:
        argv[0] = _MODE_ALIASES[argv[0]]
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.n_max < 1:
        parser.error(f"n_max must be >= 1, got {args.n_max}")
    if args.m is not None and args.m < 2:
        parser.error(f"m must be >= 2, got {args.m}")
    if args.threads < 1:
        parser.error(f"--threads must be >= 1, got {args.threads}")
    mode = "verify" if args.verify_against_oracle else args.mode
    if mode == "verify" and args.n_max > MAX_ENUMERATION_ORDER:
        parser.error(f"verify mode is limited to n_max <= {MAX_ENUMERATION_ORDER}")

    try:
        if args.output is not None:
            with open(args.output, "wb") as out:
                return _run(args, out)
        status = _run(args, sys.stdout.buffer)
        sys.stdout.buffer.flush()
        return status
    except OSError as exc:
        print(f"titrees: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
