"""Command-line front end: ``braidsig <subcommand> ...``.

Output is JSON by default and CSV with ``--csv``. Exit codes: 0 on success,
1 when ``verify`` finds a counterexample, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Callable, Sequence
from typing import Any

import structlog

from .lab.verify import BOUND_FAMILIES
from .tools import bounds, braids
from .utils.exceptions import BraidsigError
from .utils.logging import setup_logging

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _word_command(
    sub: argparse._SubParsersAction, name: str, help_text: str, strands: bool = True
) -> argparse.ArgumentParser:
    parser = sub.add_parser(name, help=help_text)
    parser.add_argument("word", help='braid word, e.g. "a1 a2 A1" or "1 2 -1"')
    if strands:
        parser.add_argument("-b", "--strands", type=int, required=True)
    parser.add_argument("--csv", action="store_true", help="print CSV instead of JSON")
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="braidsig",
        description="Exact signatures and signature bounds of positive braids",
    )
    parser.add_argument("--log-level", default=None, help="override LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _word_command(sub, "invariants", "b1, c, signature and nullity")
    _word_command(sub, "sigma", "signature of the closure")
    _word_command(sub, "betti", "b1 and c, with the fence-graph count")
    _word_command(sub, "normal-form", "Garside left normal form")
    _word_command(sub, "rotate", "180 degree rotation")
    _word_command(sub, "seifert", "Seifert matrix in the brick basis")

    equal = _word_command(sub, "equal", "braid group equality of two words")
    equal.add_argument("other", help="second braid word")

    torus = sub.add_parser("torus", help="signature of the torus link T(p, q)")
    torus.add_argument("p", type=int)
    torus.add_argument("q", type=int)
    torus.add_argument("--csv", action="store_true")

    asym = _word_command(sub, "asymptotic", "asymptotic signature estimate")
    asym.add_argument("-n", "--power", type=int, default=8)

    reduce = _word_command(sub, "reduce", "reduction to fewer strands")
    reduce.add_argument("-t", "--target", type=int, required=True, help="target braid index")

    _word_command(sub, "complete-block", "complete a length-4 4-braid block", strands=False)

    cert = _word_command(sub, "certificate", "block-completion certificate", strands=False)
    cert.add_argument("-n", "--power", type=int, default=4)

    verify = sub.add_parser("verify", help="exhaustive check of a linear bound")
    verify.add_argument("-b", "--strands", type=int, required=True)
    verify.add_argument("-l", "--max-length", type=int, required=True)
    verify.add_argument("--bound", help="factor p/q")
    verify.add_argument("--offset", help="additive constant p/q")
    verify.add_argument("--strict", action="store_true")
    verify.add_argument("--family", choices=sorted(BOUND_FAMILIES))
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--csv", action="store_true")

    serve = sub.add_parser("serve", help="run the MCP server")
    serve.add_argument("--stdio", action="store_true", help="use stdio transport")

    return parser


def _flatten(value: Any) -> Any:
    if isinstance(value, dict | list):
        return json.dumps(value, ensure_ascii=False)
    return value


def _emit(data: Any, as_csv: bool) -> None:
    if not as_csv:
        print(json.dumps(data, ensure_ascii=False))
        return
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if isinstance(data, dict):
        writer.writerow(list(data))
        writer.writerow([_flatten(v) for v in data.values()])
    else:
        writer.writerow([data])
    sys.stdout.write(buffer.getvalue())


def _verify(args: argparse.Namespace) -> int:
    if args.family is None and args.bound is None:
        raise BraidsigError("verify needs --bound or --family", "USAGE_ERROR")
    report = bounds.run_verify(
        args.strands,
        args.max_length,
        bound=args.bound,
        strict=args.strict,
        offset=args.offset,
        family=args.family,
        jobs=args.jobs,
    )
    if args.csv:
        sys.stdout.write(report.to_csv())
    else:
        print(report.to_json())
    return EXIT_OK if report.holds else EXIT_COUNTEREXAMPLE


def _serve(args: argparse.Namespace) -> int:
    from .core.server import run_server

    run_server("stdio" if args.stdio else "streamable-http")
    return EXIT_OK


_SIMPLE: dict[str, Callable[[argparse.Namespace], Any]] = {
    "invariants": lambda a: braids.braid_invariants(a.word, a.strands),
    "sigma": lambda a: braids.braid_signature(a.word, a.strands),
    "betti": lambda a: braids.braid_betti(a.word, a.strands),
    "normal-form": lambda a: braids.braid_normal_form(a.word, a.strands),
    "equal": lambda a: braids.braids_equal(a.word, a.other, a.strands),
    "rotate": lambda a: braids.braid_rotate(a.word, a.strands),
    "seifert": lambda a: braids.braid_seifert(a.word, a.strands),
    "torus": lambda a: braids.torus_signature(a.p, a.q)["sigma"],
    "asymptotic": lambda a: bounds.asymptotic_estimate(a.word, a.strands, a.power),
    "reduce": lambda a: bounds.reduce_braid(a.word, a.strands, a.target),
    "complete-block": lambda a: bounds.complete_length4_block(a.word),
    "certificate": lambda a: bounds.prop_certificate(a.word, a.power),
}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and dispatch; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_USAGE

    # verify reports enumeration progress on stderr unless told otherwise
    default_level = "INFO" if args.command == "verify" else None
    setup_logging(args.log_level or default_level)

    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "serve":
            return _serve(args)
        _emit(_SIMPLE[args.command](args), args.csv)
        return EXIT_OK
    except BraidsigError as e:
        logger.debug("Command failed", command=args.command, error_code=e.error_code)
        print(f"braidsig {args.command}: error: {e.message}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
