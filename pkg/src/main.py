# src/main.py
"""
Command-line entry point.

    python -m src.main classify  FILE [--json]
    python -m src.main certify   FILE [--b B --wbeta W] [--json]
    python -m src.main invariants FILE [--json]
    python -m src.main braid     FILE [--json]
    python -m src.main scan      [--table CSV] [--two-bridge N] [--workers K] [--output PATH]
    python -m src.main gen two-bridge A1 A2 ... [--json]

Exit codes: 0 completed (any verdict), 1 input error, 2 internal failure.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from src.cli.commands import (
    cmd_braid,
    cmd_certify,
    cmd_classify,
    cmd_gen_two_bridge,
    cmd_invariants,
    cmd_scan,
)
from src.config.settings import load_config
from src.errors import InputError, InternalError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON on standard output")
    common.add_argument("--config", default=None, help="YAML configuration file")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized spanning-tree checks")
    common.add_argument("--verbose", action="store_true", help="log progress (INFO)")
    common.add_argument("--debug", action="store_true", help="log details (DEBUG)")

    parser = argparse.ArgumentParser(prog="knot-qp", description="Quasipositivity certificates for alternating links")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="Seifert data and diagram flags")
    p.add_argument("input")

    p = sub.add_parser("certify", parents=[common], help="quasipositivity verdict with certificate")
    p.add_argument("input")
    p.add_argument("--b", type=int, default=None, help="braid index of the link")
    p.add_argument("--wbeta", type=int, default=None, help="writhe of a minimal braid")

    p = sub.add_parser("invariants", parents=[common], help="signature, nullity, determinant")
    p.add_argument("input")

    p = sub.add_parser("braid", parents=[common], help="braid word with s(D) strands and writhe w(D)")
    p.add_argument("input")

    p = sub.add_parser("scan", parents=[common], help="tree-sign inequality scan")
    p.add_argument("--table", default=None, help="CSV/JSON knot table")
    p.add_argument("--two-bridge", dest="two_bridge", type=int, default=None, metavar="MAX_SUM",
                   help="add two-bridge diagrams with up to MAX_SUM crossings")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--output", default=None, help="report file path")

    gen = sub.add_parser("gen", help="diagram generators")
    gen_sub = gen.add_subparsers(dest="generator", required=True)
    p = gen_sub.add_parser("two-bridge", parents=[common], help="two-bridge diagram from continued fraction terms")
    p.add_argument("terms", type=int, nargs="+")
    return parser


def _text(result: dict) -> str:
    lines = []
    for key, value in result.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(args: argparse.Namespace) -> dict:
    config = load_config(args.config)
    logger.debug(f"Running {args.command} with config sections {sorted(config)}")
    if args.command == "classify":
        return cmd_classify(args.input, config, seed=args.seed)
    if args.command == "certify":
        return cmd_certify(args.input, args.b, args.wbeta, config)
    if args.command == "invariants":
        return cmd_invariants(args.input, config)
    if args.command == "braid":
        return cmd_braid(args.input, config)
    if args.command == "scan":
        two_bridge_max = args.two_bridge
        if args.table is not None and two_bridge_max is None:
            two_bridge_max = 0
        return cmd_scan(config, args.table, two_bridge_max, args.workers, args.output, args.seed, quiet=args.json)
    if args.command == "gen":
        return cmd_gen_two_bridge(args.terms)
    raise InputError(f"unknown command {args.command}")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)

    try:
        result = run(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if args.command == "scan" and not args.json:
        summary = result["summary"]
        print(
            f"scan: {summary['total']} entries, {summary['evaluated']} evaluated, "
            f"{summary['violations']} violations, {summary['skipped']} skipped -> {result['report']}"
        )
    elif args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        print(_text(result))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
