import logging
from typing import Dict

from .enums import EventLevel

logger = logging.getLogger("carequeue")


class Logger:
    """Run-scoped event log. Every event carries the run id and a payload."""

    @classmethod
    def _emit(cls, run_id: str, level: EventLevel, message: Dict) -> None:
        text = str(message.get("message", level.value))
        logger.log(
            level.log_level,
            text,
            extra={"run_id": str(run_id), "event": level.value, "payload": message},
        )

    @classmethod
    def info(cls, run_id: str, message: Dict) -> None:
        """Log an info message"""
        cls._emit(run_id, EventLevel.INFO, message)

    @classmethod
    def error(cls, run_id: str, message: Dict) -> None:
        """Log an error message"""
        cls._emit(run_id, EventLevel.FAILED, message)

    @classmethod
    def warn(cls, run_id: str, message: Dict) -> None:
        """Log a warning message"""
        cls._emit(run_id, EventLevel.WARNING, message)

    @classmethod
    def debug(cls, run_id: str, message: Dict) -> None:
        """Log a debug message"""
        cls._emit(run_id, EventLevel.DEBUG, message)

    @classmethod
    def success(cls, run_id: str, message: Dict) -> None:
        """Log a success message"""
        cls._emit(run_id, EventLevel.SUCCESS, message)

    @classmethod
    def completed(cls, run_id: str, message: Dict) -> None:
        """Log a completed message"""
        cls._emit(run_id, EventLevel.COMPLETED, message)

    @classmethod
    def pending(cls, run_id: str, message: Dict) -> None:
        """Log a pending message"""
        cls._emit(run_id, EventLevel.PENDING, message)

    @classmethod
    def running(cls, run_id: str, message: Dict) -> None:
        """Log a running message"""
        cls._emit(run_id, EventLevel.RUNNING, message)
