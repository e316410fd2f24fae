"""Command-line entry point: ``python -m src.cli.main <command> [options]``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

import orjson

from src.config import settings
from src.errors import CountingError, InvalidInput, ResourceLimitExceeded
from src.families.complete import FAMILY_NAMES, FamilySpec

from . import commands
from .documents import parse

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="GraphDocument path; standard input when omitted or '-'")
    common.add_argument("--limit-flats", type=int, default=None)
    common.add_argument("--limit-points", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="gaincount",
        description="Exact chromatic counts of integral gain graphs and affinographic arrangements",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="integral chromatic function at m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=commands.INTEGRAL_METHODS, default="mobius")

    sub.add_parser("pieces", parents=[common], help="piecewise-polynomial term sum")
    sub.add_parser("charpoly", parents=[common], help="characteristic polynomial, ascending")
    sub.add_parser("regions", parents=[common], help="number of regions of the arrangement")

    p = sub.add_parser("modular", parents=[common], help="modular chromatic function at m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=commands.MODULAR_METHODS, default="flats")

    p = sub.add_parser("family", parents=[common], help="closed form against the engine")
    p.add_argument("--name", choices=FAMILY_NAMES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="agreement of every method on 0..m-max")
    p.add_argument("--m-max", type=int, default=8)
    return parser


def _read_document(path: Optional[str]) -> bytes:
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from exc


def _emit(payload: Dict[str, Any], stream: Any) -> None:
    stream.write(orjson.dumps(payload, option=orjson.OPT_SORT_KEYS).decode() + "\n")


def run(args: argparse.Namespace) -> Dict[str, Any]:
    limits = commands.Limits(flats=args.limit_flats, points=args.limit_points)
    if args.command == "family":
        spec = FamilySpec(name=args.name, n=args.n, a=args.a, b=args.b, s=args.s)
        return commands.family_command(spec, args.m, limits)

    graph = parse(_read_document(args.input))
    if args.command == "eval":
        return commands.eval_command(graph, args.m, args.method, limits)
    if args.command == "pieces":
        return commands.pieces_command(graph, limits)
    if args.command == "charpoly":
        return commands.charpoly_command(graph, limits)
    if args.command == "regions":
        return commands.regions_command(graph, limits)
    if args.command == "modular":
        return commands.modular_command(graph, args.m, args.method, limits)
    if args.command == "verify":
        return commands.verify_command(graph, args.m_max, limits)
    raise InvalidInput(f"unknown command {args.command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
    )
    args = build_parser().parse_args(argv)
    try:
        payload = run(args)
    except ResourceLimitExceeded as exc:
        _emit({"ok": False, "error": exc.as_payload()}, sys.stderr)
        return EXIT_LIMIT
    except CountingError as exc:
        _emit({"ok": False, "error": exc.as_payload()}, sys.stderr)
        return EXIT_INPUT
    _emit(payload, sys.stdout)
    if args.command == "verify" and not payload["ok"]:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
