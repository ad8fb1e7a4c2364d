"""Tests for environment settings and the run event logger."""
import logging

import pytest

from carequeue_types import SolverSettings, StartMode
from carequeue_core.core.config import Settings
from carequeue_core.core.enums import EventLevel
from carequeue_core.core.logger import Logger as RunLogger


class TestSettings:
    def test_defaults(self, monkeypatch):
        for name in ("GRAD_TOL", "MAX_ITERS", "FEASIBILITY_CAP", "WORKERS"):
            monkeypatch.delenv(f"CAREQUEUE_{name}", raising=False)
        cfg = Settings().solver_settings()
        assert cfg == SolverSettings()

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("CAREQUEUE_GRAD_TOL", "1e-8")
        monkeypatch.setenv("CAREQUEUE_MAX_ITERS", "50")
        monkeypatch.setenv("CAREQUEUE_LOG_FORMAT", "TEXT")
        s = Settings()
        assert s.solver_settings().grad_tol == 1e-8
        assert s.solver_settings().max_iters == 50
        assert s.LOG_FORMAT == "text"

    def test_overrides(self, monkeypatch):
        monkeypatch.delenv("CAREQUEUE_MAX_ITERS", raising=False)
        cfg = Settings().solver_settings(
            max_iters=None, initial_waits=StartMode.REFERENCE
        )
        assert cfg.max_iters == 200
        assert cfg.initial_waits == StartMode.REFERENCE

    def test_snapshot(self):
        assert set(Settings().snapshot()) == {
            "grad_tol",
            "max_iters",
            "feasibility_cap",
            "hours_per_year",
            "workers",
        }


class TestLogger:
    """The run logger forwards events to the 'carequeue' stdlib logger."""

    def test_event_fields(self, caplog):
        with caplog.at_level(logging.DEBUG, logger="carequeue"):
            RunLogger.success("run-1", {"message": "solved", "iterations": 7})
        record = caplog.records[-1]
        assert record.getMessage() == "solved"
        assert record.run_id == "run-1"
        assert record.event == "SUCCESS"
        assert record.payload["iterations"] == 7

    @pytest.mark.parametrize(
        "method, level",
        [
            ("error", logging.ERROR),
            ("warn", logging.WARNING),
            ("debug", logging.DEBUG),
            ("pending", logging.INFO),
            ("running", logging.INFO),
        ],
    )
    def test_levels(self, caplog, method, level):
        with caplog.at_level(logging.DEBUG, logger="carequeue"):
            getattr(RunLogger, method)("run-2", {"message": method})
        assert caplog.records[-1].levelno == level

    def test_message_defaults_to_event(self, caplog):
        with caplog.at_level(logging.DEBUG, logger="carequeue"):
            RunLogger.completed("run-3", {"instances": 10})
        assert caplog.records[-1].getMessage() == EventLevel.COMPLETED.value

    def test_emits_while_module_name_is_patched(self, caplog, mock_logger):
        assert RunLogger is not mock_logger
        with caplog.at_level(logging.DEBUG, logger="carequeue"):
            RunLogger.info("run-4", {"message": "patched"})
            RunLogger.warn("run-4", {"message": "still real"})
        assert [r.event for r in caplog.records[-2:]] == ["INFO", "WARNING"]
        assert mock_logger.events == []
