import logging
import sys
from typing import Optional, TextIO

from carequeue_core.core.exceptions import CareQueueError, ScenarioValidationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1


class UsageError(CareQueueError):
    """Bad command-line arguments."""

    exit_code = EXIT_USAGE


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, CareQueueError):
        return exc.exit_code
    return EXIT_USAGE


def report_error(exc: BaseException, stream: Optional[TextIO] = None) -> int:
    """Write a one-line diagnostic (plus violations) and return the exit code."""
    stream = stream if stream is not None else sys.stderr
    code = exit_code_for(exc)
    if isinstance(exc, CareQueueError):
        logger.error("%s: %s", type(exc).__name__, exc)
    else:
        logger.error("Unexpected error: %s", exc, exc_info=True)
    print(f"error: {exc}", file=stream)
    if isinstance(exc, ScenarioValidationError):
        for violation in exc.violations:
            print(f"  - {violation.field}: {violation.rule}", file=stream)
    return code
