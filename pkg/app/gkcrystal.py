# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Gindikin-Karpelevich Crystal Engine

This is the main entry point of the command-line tool that checks the
Gindikin-Karpelevich identity in type A_r through the crystal B(infinity).

**Commands:**
- `enumerate` - one record per element of height <= D: b#, -wt, seg, string and Lusztig data
- `verify` - compare the positive-root product with every crystal sum (exit 2 on mismatch)
- `graph` - DOT document of the top of the crystal graph, optionally with coefficients
- `param` - every parametrization of one tableau, e.g. `param 2,3/3`
- `convert` - the element named by a Lusztig datum or string triangle, e.g. `convert "(1;1,1)"`

**Configuration:**
Defaults (depths, rank limit, strategy, cache size, log level, run ledger) are read from
`src/common/config.yaml` and may be overridden through GKCRYSTAL_* environment variables.

**Exit codes:**
0 success, 1 usage error, 2 verification mismatch, 3 parse error.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from src.cli import EXIT_USAGE, CommandError
from src.cli.commands import COMMANDS
from src.common.config import VALID_STRATEGIES, get_settings
from src.models.run_config import RunConfig
from src import logger


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors as CommandError instead of exiting."""

    def error(self, message):
        raise CommandError(EXIT_USAGE, f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gkcrystal", description="Gindikin-Karpelevich identity through B(infinity)")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub = subparsers.add_parser(name)
        sub.add_argument("--rank", "-r", type=int, default=None, help="Rank r of A_r")
        sub.add_argument("--depth", "-d", type=int, default=None, help="Truncation cap on the height of -wt(b)")
        sub.add_argument("--format", choices=("json", "tsv", "dot"), default=None)
        sub.add_argument("--strategy", choices=VALID_STRATEGIES, default=None)
        sub.add_argument("--output", "-o", default=None, help="Write to this file instead of standard output")
        if name == "graph":
            sub.add_argument("--coefficients", action="store_true", help="Label nodes with (1-u)^seg")
        if name == "convert":
            sub.add_argument("--kind", choices=("lusztig", "string"), default="lusztig")
        if name in ("param", "convert"):
            sub.add_argument("element", help="Tableau text (param) or datum text (convert)")
    return parser


def _default_depth(command: str) -> int:
    settings = get_settings()
    return {
        "verify": settings.VERIFY_DEPTH,
        "graph": settings.GRAPH_DEPTH,
        "enumerate": settings.ENUMERATE_DEPTH,
    }.get(command, 0)


def build_run_config(args: argparse.Namespace) -> RunConfig:
    settings = get_settings()
    return RunConfig(
        command=args.command,
        rank=args.rank,
        depth=args.depth if args.depth is not None else _default_depth(args.command),
        format=args.format or ("dot" if args.command == "graph" else "json"),
        strategy=args.strategy or settings.STRATEGY,
        coefficients=getattr(args, "coefficients", False),
        kind=getattr(args, "kind", "lusztig"),
        output=args.output,
        element=getattr(args, "element", None),
        max_rank=settings.MAX_RANK,
    )


def _configure_logging() -> None:
    level = getattr(logging, get_settings().LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code."""
    try:
        _configure_logging()
        args = build_parser().parse_args(argv)
        try:
            cfg = build_run_config(args)
        except ValidationError as e:
            raise CommandError(EXIT_USAGE, f"ValidationError: {e}")
        logger.info(f"gkcrystal: {cfg.command} r={cfg.rank} D={cfg.depth}")
        result = COMMANDS[cfg.command](cfg)
    except CommandError as e:
        print(e.detail, file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        print(f"ValueError: {e}", file=sys.stderr)
        return EXIT_USAGE

    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as handle:
            handle.write(result.text)
    else:
        sys.stdout.write(result.text)
    logger.info(f"gkcrystal: {cfg.command} finished with exit code {result.exit_code}")
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
