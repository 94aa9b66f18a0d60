"""
netgroups CLI Application
=========================

Builds the argument parser, configures logging and dispatches to the
sub-commands in `src.cli.commands`.

Flag values resolve as: command line > NETGROUPS_<FLAG> environment
variable > built-in default. Environment values go through the same
validators as command-line values.

Exit codes:
-----------
    0  success
    2  usage error (bad flag or parameter)
    3  I/O error (unreadable or malformed input, unwritable output)
    4  computation error
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, List, Optional, Tuple

from src.core.config import EXIT_COMPUTATION, EXIT_IO, EXIT_USAGE, SAMPLING_METHODS
from src.core.errors import (
    ContractViolation,
    EdgeListParseError,
    EmptyGraphError,
    NetGroupsError,
    ResultFormatError,
)
from src.utils.config_manager import env_default, env_var_name
from src.utils.logger import setup_logging, shutdown_logging

logger = logging.getLogger(__name__)

SWITCH_VALUES = {"1": True, "true": True, "yes": True, "on": True, "0": False, "false": False, "no": False, "off": False}


# ============================================================================
# ARGUMENT VALIDATORS
# ============================================================================


def _number(cast: Callable, text: str, what: str):
    try:
        return cast(text)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"{what} expected, got {text!r}")


def positive_int(text: str) -> int:
    value = _number(int, text, "integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def nonnegative_int(text: str) -> int:
    value = _number(int, text, "integer")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def seed_value(text: str) -> int:
    return _number(int, text, "integer seed")


def fraction_value(text: str) -> float:
    value = _number(float, text, "number")
    if not 0.0 < value <= 1.0:
        raise argparse.ArgumentTypeError(f"fraction must lie in (0, 1], got {value}")
    return value


def alpha_value(text: str) -> float:
    value = _number(float, text, "number")
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in (0, 1), got {value}")
    return value


def positive_float(text: str) -> float:
    value = _number(float, text, "number")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return value


def add_flag(parser: argparse.ArgumentParser, flag: str, default, **kwargs):
    """Add `--flag` whose default may be preset through the environment."""
    name = flag.lstrip("-")
    if default is not None and kwargs.get("type") is not None:
        default = str(default)
    kwargs.setdefault("help", "")
    kwargs["help"] = f"{kwargs['help']} (env {env_var_name(name)})".strip()
    short = kwargs.pop("short", None)
    names = [short, flag] if short else [flag]
    value = env_default(name, default)
    if kwargs.get("required") and value is not None:
        kwargs["required"] = False
    parser.add_argument(*names, default=value, **kwargs)


def add_switch(parser: argparse.ArgumentParser, flag: str, **kwargs):
    """Add an on/off `--flag` that NETGROUPS_<FLAG>=1 (or true/yes/on) turns on."""
    name = flag.lstrip("-")
    raw = env_default(name, None)
    default = False
    if raw is not None:
        if raw.strip().lower() not in SWITCH_VALUES:
            parser.error(f"{env_var_name(name)}: expected one of {sorted(SWITCH_VALUES)}, got {raw!r}")
        default = SWITCH_VALUES[raw.strip().lower()]
    kwargs.setdefault("help", "")
    kwargs["help"] = f"{kwargs['help']} (env {env_var_name(name)})".strip()
    short = kwargs.pop("short", None)
    names = [short, flag] if short else [flag]
    parser.add_argument(*names, action="store_true", default=default, **kwargs)


def method_list(text: str) -> Tuple[str, ...]:
    """Comma-separated sampling methods, e.g. 'rd,bf'."""
    methods = tuple(part.strip() for part in text.split(",") if part.strip())
    unknown = [m for m in methods if m not in SAMPLING_METHODS]
    if not methods or unknown:
        raise ContractViolation(f"sampling methods must be drawn from {SAMPLING_METHODS}, got {text!r}")
    return methods


# ============================================================================
# PARSER
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    from src.cli.commands import COMMANDS

    parser = argparse.ArgumentParser(
        prog="netgroups",
        description="Sample networks and extract significant node groups (communities, mixtures, modules).",
    )
    add_switch(parser, "--verbose", short="-v", help="Show debug messages on the console")
    add_flag(parser, "--log-file", None, help="Write a detailed log to this file")
    add_flag(parser, "--workers", 1, type=positive_int, help="Parallel workers")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def _exit_code_for(error: BaseException) -> int:
    if isinstance(error, ContractViolation):
        return EXIT_USAGE
    if isinstance(error, (OSError, EdgeListParseError, EmptyGraphError, ResultFormatError)):
        return EXIT_IO
    return EXIT_COMPUTATION


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse `argv`, run the selected command and return its exit code.
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors and 0 after --help
        return int(e.code or 0)

    setup_logging(
        console_level=logging.DEBUG if args.verbose else logging.INFO,
        log_file=Path(args.log_file) if args.log_file else None,
    )
    logger.debug(f"netgroups {args.command} invoked with {vars(args)}")

    try:
        return args.handler(args)
    except KeyboardInterrupt:
        logger.warning("Interrupted")
        return EXIT_COMPUTATION
    except (NetGroupsError, OSError) as e:
        code = _exit_code_for(e)
        logger.debug("Command failed", exc_info=True)
        logger.error(f"{args.command} failed: {e}")
        return code
    except Exception as e:
        logger.critical(f"Unexpected error in {args.command}: {e}", exc_info=True)
        return EXIT_COMPUTATION
    finally:
        shutdown_logging()


if __name__ == "__main__":
    sys.exit(main())
