"""Command-line front end.

``run(argv)`` does all the work and returns ``(exit_code, output_bytes)``
without touching the real stdout/stderr, which keeps it testable;
``main()`` wires it to the process.

Exit codes: 0 success, 1 error raised by a library module (reported with its
kind and location), 2 usage error.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from typing import BinaryIO, List, Optional, Sequence, Tuple

from .automata import letter_power_closure
from .counting import count_paths
from .errors import CyclicInput, SelfLoop, SemipathError, SizeLimitExceeded
from .graphs import arcs_from_matrix, find_cycle
from .graphio import GraphDocument, MatrixReport, Route, SubwordsReport, parse_graph, parse_transition_table, render
from .paths import enumerate_paths
from .relations import transitive_closure
from .shortest import distance_matrix, floyd_warshall, longest_paths_dag, reconstruct_path
from .subwords import check_rainbow, enumerate_m_subwords, m_complexity, m_subword_matrix, subword_order


@dataclass(frozen=True)
class Limits:
    max_input_bytes: int = 64 * 1024 * 1024
    enumerate_max_n: int = 12
    enumerate_max_paths_per_cell: int = 100_000


DEFAULTS = Limits()


class UsageError(Exception):
    pass


class InputTooLarge(SemipathError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}")


def _gap_list(text: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semipath", description="Warshall-style closures over pluggable semirings.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--max-input-bytes", type=_positive, default=DEFAULTS.max_input_bytes,
                        help="refuse inputs larger than this (default 64 MiB)")
    graph_input = argparse.ArgumentParser(add_help=False)
    graph_input.add_argument("input", help="input file, or '-' for stdin")
    graph_input.add_argument("--format", choices=("auto", "edge-list", "json"), default="auto")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    sub.add_parser("closure", parents=[common, graph_input], help="transitive closure")
    p = sub.add_parser("shortest", parents=[common, graph_input], help="all-pairs shortest distances")
    p.add_argument("--path", nargs=2, action="append", metavar=("FROM", "TO"), default=[],
                   help="also print one shortest path (repeatable)")
    sub.add_parser("longest", parents=[common, graph_input], help="longest distances in a DAG")
    sub.add_parser("count", parents=[common, graph_input], help="number of paths in a DAG")
    p = sub.add_parser("enumerate", parents=[common, graph_input], help="all simple paths")
    p.add_argument("--max-n", type=_positive, default=DEFAULTS.enumerate_max_n,
                   help=f"largest vertex count accepted (default {DEFAULTS.enumerate_max_n})")
    p.add_argument("--max-paths-per-cell", type=_positive, default=DEFAULTS.enumerate_max_paths_per_cell)
    p = sub.add_parser("subwords", parents=[common], help="M-complexity of rainbow words")
    p.add_argument("--n", type=_positive, help="word length")
    p.add_argument("--word", help="rainbow word (its length is used as n)")
    p.add_argument("--gaps", type=_gap_list, required=True, help="gap set M, e.g. 2,3,4,5")
    p.add_argument("--list", action="store_true", help="list the M-subwords (needs --word)")
    p.add_argument("--with-singletons", action="store_true", help="include single letters in --list")
    sub.add_parser("automata", parents=[common], help="letter-power reachability").add_argument(
        "input", help="automaton JSON file, or '-' for stdin")
    return parser


def _read_input(path: str, limit: int, stdin: Optional[BinaryIO]) -> bytes:
    if path == "-":
        stream = stdin if stdin is not None else sys.stdin.buffer
        data = stream.read(limit + 1)
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read(limit + 1)
        except OSError as exc:
            raise UsageError(f"semipath: error: cannot read {path!r}: {exc.strerror}") from None
    if len(data) > limit:
        raise InputTooLarge(f"input exceeds {limit} bytes")
    return data


def _validate(args: argparse.Namespace) -> None:
    if args.command == "subwords":
        if (args.n is None) == (args.word is None):
            raise UsageError("semipath subwords: error: give exactly one of --n or --word")
        if args.list and args.word is None:
            raise UsageError("semipath subwords: error: --list needs --word")
        if args.with_singletons and not args.list:
            raise UsageError("semipath subwords: error: --with-singletons needs --list")


def _require_acyclic(doc: GraphDocument) -> None:
    cycle = find_cycle(arcs_from_matrix(doc.adjacency(), bool))
    if cycle is not None:
        raise CyclicInput("digraph has a cycle: " + " -> ".join(doc.vertices[v] for v in cycle))


def _execute(args: argparse.Namespace, stdin: Optional[BinaryIO]) -> bytes:
    cmd = args.command
    if cmd == "subwords":
        return _subwords(args)
    data = _read_input(args.input, args.max_input_bytes, stdin)
    if cmd == "automata":
        table = parse_transition_table(data)
        report = MatrixReport("letters", table.states, letter_power_closure(table))
        return render(report, args.output)

    doc = parse_graph(data, args.format)
    names = doc.vertices
    if cmd == "closure":
        report = MatrixReport("relation", names, transitive_closure(doc.adjacency()))
    elif cmd == "count":
        _require_acyclic(doc)
        report = MatrixReport("count", names, count_paths(doc.adjacency()))
    elif cmd == "enumerate":
        if doc.n > args.max_n:
            raise SizeLimitExceeded(f"{doc.n} vertices exceeds --max-n {args.max_n}; output grows factorially")
        loops = doc.self_loops()
        if loops:
            raise SelfLoop(f"self-loop at vertex {loops[0]!r}; simple paths cannot use it")
        paths = enumerate_paths(doc.adjacency(), max_paths_per_cell=args.max_paths_per_cell)
        report = MatrixReport("paths", names, paths)
    elif cmd == "shortest":
        # resolve --path names before the cubic run
        queries = [(doc.index(a), doc.index(b)) for a, b in args.path]
        D, nxt = floyd_warshall(distance_matrix(doc.n, doc.weighted_arcs()))
        routes = tuple(
            Route(names[i], names[j], D[i][j], tuple(names[v] for v in reconstruct_path(nxt, i, j)))
            for i, j in queries
        )
        report = MatrixReport("distance", names, D, routes)
    elif cmd == "longest":
        _require_acyclic(doc)
        report = MatrixReport("longest", names, longest_paths_dag(distance_matrix(doc.n, doc.weighted_arcs())))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown command {cmd!r}")
    return render(report, args.output)


def _subwords(args: argparse.Namespace) -> bytes:
    word = args.word
    if word is not None:
        check_rainbow(word)
    n = len(word) if word is not None else args.n
    complexity = m_complexity(n, args.gaps)
    report = SubwordsReport(complexity)
    if args.list:
        listed = enumerate_m_subwords(word, args.gaps, include_singletons=args.with_singletons)
        report = SubwordsReport(
            complexity,
            word=word,
            matrix=m_subword_matrix(word, args.gaps),
            subwords=tuple(sorted(listed, key=subword_order(word))),
            with_singletons=args.with_singletons,
        )
    elif word is not None:
        report = SubwordsReport(complexity, word=word)
    return render(report, args.output)


def _error_bytes(exc: SemipathError, mode: str) -> bytes:
    if mode == "json":
        err = {"kind": exc.kind, "message": exc.message}
        if exc.line is not None:
            err["line"] = exc.line
        if exc.column is not None:
            err["column"] = exc.column
        return (json.dumps({"error": err}, separators=(",", ":")) + "\n").encode("utf-8")
    where = exc.location()
    suffix = f" ({where})" if where else ""
    return f"error: {exc.kind}: {exc.message}{suffix}\n".encode("utf-8")


def run(argv: Sequence[str], stdin: Optional[BinaryIO] = None) -> Tuple[int, bytes]:
    """Parse ``argv``, run the subcommand and return ``(exit_code, output)``."""
    parser = build_parser()
    captured = io.StringIO()
    try:
        with contextlib.redirect_stdout(captured), contextlib.redirect_stderr(captured):
            args = parser.parse_args(list(argv))
        _validate(args)
    except UsageError as exc:
        return 2, (parser.format_usage() + str(exc) + "\n").encode("utf-8")
    except SystemExit as exc:  # --help
        code = exc.code if isinstance(exc.code, int) else 2
        return code, captured.getvalue().encode("utf-8")
    try:
        return 0, _execute(args, stdin)
    except UsageError as exc:
        return 2, (str(exc) + "\n").encode("utf-8")
    except SemipathError as exc:
        return 1, _error_bytes(exc, args.output)
    except RecursionError:
        return 1, _error_bytes(SemipathError("input too deeply nested"), args.output)


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout.buffer if code == 0 else sys.stderr.buffer
    stream.write(out)
    stream.flush()
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
