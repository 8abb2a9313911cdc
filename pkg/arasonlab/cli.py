"""Command-line entry point: ``python -m arasonlab <group> <op> <json>...``.

Exit codes: 0 success, 1 precondition violated, 2 usage error, 3 check
failures (or an internal two-path disagreement).
"""
import argparse
import json
import os
import re
import sys
from typing import Any, List, Optional, Sequence

from arasonlab import __version__
from arasonlab.commands import GROUPS, execute, operations_in
from arasonlab.exceptions import PreconditionError, TheoremViolation, UsageError, WitnessNotFoundError
from arasonlab.services.lab import CHECKS, CheckRunner, GenConfig, replay
from arasonlab.utils.logger import setup_logger
from arasonlab.utils.timing import timed

EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, EXIT_FAILURES = 0, 1, 2, 3

logger = setup_logger("cli")

# Tokens that may be passed without JSON quoting.
_BARE_TOKEN = re.compile(r"^(-?\d+/\d+|[A-Za-z]+)$")


class _Parser(argparse.ArgumentParser):
    """argparse raises instead of exiting so ``run`` owns every exit code."""

    def error(self, message):
        raise UsageError(message)


def decode_argument(text: str, position: int) -> Any:
    """A JSON literal, a path to a JSON file, or a bare rational/place token."""
    source = f"argument {position}"
    if os.path.isfile(text):
        source = f"{text}"
        try:
            with open(text, encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise UsageError(f"cannot read {source}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        if _BARE_TOKEN.match(text.strip()):
            return text.strip()
        raise UsageError(f"malformed JSON in {source}: {e.msg} at line {e.lineno} column {e.colno} (char {e.pos})") from e


def _delta_pool(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"--delta-pool expects comma separated integers, got '{text}'") from e


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arasonlab", description="Invariants of unitary involutions over Q(sqrt(delta)).")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--timing", action="store_true", help="add elapsed time to the output")
    parser.add_argument("--verbose", action="store_true", help="log progress to the console")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for group in GROUPS:
        names = [op.name for op in operations_in(group)]
        p = sub.add_parser(group, help=f"{group} operations: {', '.join(names)}")
        p.add_argument("op", choices=names)
        p.add_argument("args", nargs="*", help="JSON values or paths to JSON files")

    p = sub.add_parser("check", help="run theorem checks, or 'replay <name> <instance>'")
    p.add_argument("target", nargs="+", help=f"check name, 'all' or 'replay' (checks: {', '.join(sorted(CHECKS))})")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--height", type=int, dest="height_bound")
    p.add_argument("--delta-pool", type=_delta_pool)
    p.add_argument("--no-failure-log", action="store_true", help="do not write check_failures_<timestamp>.json")
    p.add_argument("--exhaustive", action="store_true",
                   help="run on every instance up to --height instead of random trials (hm_bruteforce)")

    sub.add_parser("version", help="print the package version")
    return parser


def render(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2)
    return "\n".join(_text_lines(result))


def _text_lines(node: Any, prefix: str = "") -> List[str]:
    if isinstance(node, dict):
        lines: List[str] = []
        for key in sorted(node):
            lines.extend(_text_lines(node[key], f"{prefix}{key}." if isinstance(node[key], dict) else f"{prefix}{key}"))
        return lines
    return [f"{prefix.rstrip('.')}: {json.dumps(node)}"]


def _run_check(args: argparse.Namespace) -> tuple:
    target = args.target
    if target[0] == "replay":
        if len(target) != 3:
            raise UsageError("usage: check replay <name> <instance>")
        instance = decode_argument(target[2], 2)
        try:
            result = replay(target[1], instance)
        except ValueError as e:
            raise UsageError(str(e)) from e
        return result, EXIT_OK if result["status"] == "pass" else EXIT_FAILURES

    try:
        cfg = GenConfig.from_defaults(
            seed=args.seed, trials=args.trials, height_bound=args.height_bound, delta_pool=args.delta_pool
        )
        runner = CheckRunner(cfg, timing=args.timing, write_failure_log=not args.no_failure_log,
                             exhaustive=args.exhaustive)
        result = runner.run(target)
    except PreconditionError:
        raise
    except ValueError as e:
        raise UsageError(str(e)) from e
    return result, EXIT_OK if result["status"] == "success" else EXIT_FAILURES


def _dispatch(args: argparse.Namespace) -> tuple:
    if args.command == "version":
        return {"version": __version__}, EXIT_OK
    if args.command == "check":
        return _run_check(args)
    decoded = [decode_argument(a, i + 1) for i, a in enumerate(args.args)]
    if args.timing:
        return timed(execute, args.command, args.op, decoded), EXIT_OK
    return execute(args.command, args.op, decoded), EXIT_OK


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Parse ``argv``, run the command and print its result. Returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        if args.verbose:
            setup_logger("cli", console_level="DEBUG")
        result, code = _dispatch(args)
    except PreconditionError as e:
        print(render(e.to_dict(), fmt), file=out)
        print(f"precondition violated: {e.invariant}", file=err)
        return EXIT_PRECONDITION
    except (UsageError, ValueError) as e:
        print(f"usage error: {e}", file=err)
        return EXIT_USAGE
    except TheoremViolation as e:
        logger.error(f"Internal consistency check failed: {e}")
        print(render({"status": "error", "error": "violation", "message": str(e), "details": e.details}, fmt), file=out)
        return EXIT_FAILURES
    except WitnessNotFoundError as e:
        print(render({"status": "error", "error": "witness", "message": str(e), "searched": e.searched}, fmt), file=out)
        return EXIT_FAILURES
    print(render(result, fmt), file=out)
    return code


def main() -> None:
    sys.exit(run())
