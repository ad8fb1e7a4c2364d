import argparse
import logging
import sys
from typing import List, NoReturn, Optional
from uuid import uuid4

from carequeue_core import __version__
from carequeue_core.core.config import settings
from app.commands import COMMANDS
from app.exceptions import UsageError, report_error
from app.logging_config import setup_logging

logger = logging.getLogger(__name__)


class CliParser(argparse.ArgumentParser):
    """Argument errors raise UsageError instead of exiting with status 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = CliParser(
        prog="carequeue",
        description="Equilibrium of patient choice and congestion delays",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--log-format",
        choices=("json", "text"),
        default=settings.LOG_FORMAT,
        help="Log records on stderr as JSON lines or plain text",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        default=settings.LOG_LEVEL,
    )
    subparsers = parser.add_subparsers(
        dest="command", required=True, parser_class=CliParser
    )
    for command in COMMANDS:
        command.add_parser(subparsers)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; the return value is the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        return report_error(e)

    setup_logging(args.log_level, args.log_format)
    args.run_id = str(uuid4())
    logger.debug("Running %s (run %s)", args.command, args.run_id)
    try:
        return int(args.handler(args))
    except Exception as e:
        return report_error(e)


if __name__ == "__main__":
    sys.exit(main())
