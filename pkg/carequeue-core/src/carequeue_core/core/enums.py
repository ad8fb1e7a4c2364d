import logging
from enum import Enum


class EventLevel(str, Enum):
    # Standard log levels
    INFO = "INFO"
    WARNING = "WARNING"
    FAILED = "FAILED"
    SUCCESS = "SUCCESS"
    DEBUG = "DEBUG"
    # Run statuses
    PENDING = "PENDING"
    RUNNING = "RUNNING"
    COMPLETED = "COMPLETED"

    @property
    def log_level(self) -> int:
        """Matching stdlib logging level"""
        if self is EventLevel.DEBUG:
            return logging.DEBUG
        if self is EventLevel.WARNING:
            return logging.WARNING
        if self is EventLevel.FAILED:
            return logging.ERROR
        return logging.INFO
