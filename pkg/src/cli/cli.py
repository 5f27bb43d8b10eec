"""Command-line entry point: ``combi <command> ...``.

Every subcommand prints plain text by default and a single JSON document
``{"command": ..., "result": ...}`` with ``--json``. Exit codes: 0 on success,
1 on a domain error, 2 on a usage error.
"""

import argparse
import logging
import sys
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence, TextIO

from pydantic import BaseModel

from config.config import Settings, load_config
from errors.errors import GraphFormatError
from graph import graph as named
from graph.graph import Graph
from graph.storage import parse_graph_text
from logs.logs import setup_logging
from utils.rational import format_float, format_rational

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE = 2


@dataclass
class Outcome:
    """What a command produced: text lines for humans and a JSON-ready result."""

    lines: list[str]
    result: Any = None


@dataclass
class Context:
    settings: Settings
    stdin: TextIO = field(default_factory=lambda: sys.stdin)


class CommandResult(BaseModel):
    command: str
    result: Any


def jsonable(value: Any) -> Any:
    """Exact rationals become "p/q" strings, complex numbers become {real, imag}."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, complex):
        return {"real": value.real, "imag": value.imag}
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return {str(jsonable(k)): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    return str(value)


def format_number(value: Any) -> str:
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        return format_rational(value)
    if isinstance(value, (float, complex)):
        return format_float(value)
    return str(value)


def named_graph(name: str) -> Graph:
    """Builds a graph from a name such as ``petersen``, ``complete:5`` or ``bipartite:3,3``."""
    kind, _, params = name.lower().partition(":")
    try:
        numbers = [int(p) for p in params.split(",")] if params else []
    except ValueError:
        raise ValueError(f"graph parameters must be integers, got {params!r}")

    def arity(count: int) -> list[int]:
        if len(numbers) != count:
            raise ValueError(f"graph '{kind}' takes {count} parameter(s), got {len(numbers)}")
        return numbers

    match kind:
        case "complete":
            return named.complete(*arity(1))
        case "cycle":
            return named.cycle(*arity(1))
        case "path":
            return named.path(*arity(1))
        case "empty":
            return named.empty(*arity(1))
        case "bipartite":
            return named.complete_bipartite(*arity(2))
        case "gp":
            return named.generalized_petersen(*arity(2))
        case "petersen":
            arity(0)
            return named.petersen()
        case "konigsberg":
            arity(0)
            return named.konigsberg()
        case "hamster":
            arity(0)
            return named.hamster_cage()
        case _ if kind in named.PLATONIC_NAMES:
            arity(0)
            return named.platonic(kind)
    raise ValueError(f"unknown graph name {name!r}")


def read_graph(source: str, stdin: Optional[TextIO] = None) -> tuple[Graph, list[Fraction] | None]:
    """Reads the graph text format from a path, or from stdin when source is ``-``."""
    if source == "-":
        text = (stdin or sys.stdin).read()
    else:
        path = Path(source)
        if not path.is_file():
            raise ValueError(f"graph file not found: {source}")
        text = path.read_text(encoding="utf-8")
    try:
        return parse_graph_text(text)
    except GraphFormatError as e:
        raise GraphFormatError(e.line, f"{source}: {str(e).split(': ', 1)[1]}")


def build_parser() -> argparse.ArgumentParser:
    from cli.commands import COMMANDS

    parser = argparse.ArgumentParser(prog="combi", description="Exact combinatorics and graph algorithms.")
    parser.add_argument("--json", action="store_true", help="emit one JSON document instead of text")
    parser.add_argument("--workers", type=int, default=None, help="worker processes for exhaustive searches")
    parser.add_argument("--log-level", default=None, help="overrides COMBI_LOG_LEVEL")
    subparsers = parser.add_subparsers(dest="command", metavar="command", required=True)
    for name, (configure, handler, summary) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=summary, description=summary)
        configure(sub)
        sub.set_defaults(handler=handler)
    return parser


def run(
    argv: Sequence[str],
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(stdout), redirect_stderr(stderr):
            args = parser.parse_args(list(argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    try:
        settings = load_config()
        overrides = {}
        if args.log_level is not None:
            overrides["log_level"] = args.log_level
        if args.workers is not None:
            if args.workers < 1:
                raise ValueError(f"--workers must be at least 1, got {args.workers}")
            overrides["workers"] = args.workers
        settings = settings.model_copy(update=overrides)
        setup_logging(settings)

        logger.debug("Running command %s", args.command)
        outcome: Outcome = args.handler(args, Context(settings, stdin or sys.stdin))
    except ValueError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_DOMAIN_ERROR

    if args.json:
        stdout.write(CommandResult(command=args.command, result=jsonable(outcome.result)).model_dump_json() + "\n")
    else:
        for line in outcome.lines:
            stdout.write(line + "\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))
