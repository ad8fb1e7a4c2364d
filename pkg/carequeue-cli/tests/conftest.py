"""Pytest configuration for carequeue-cli tests."""
import json
import logging

import pytest

from carequeue_casestudy import bundled_path
from tests.logger import TestLogger

LOGGER_TARGETS = (
    "carequeue_core.core.logger.Logger",
    "carequeue_casestudy.experiment.harness.Logger",
    "app.commands.solve.Logger",
    "app.commands.calibrate.Logger",
    "app.commands.intervene.Logger",
)


@pytest.fixture(autouse=True)
def mock_logger(monkeypatch):
    """Replace the run event Logger with an in-memory TestLogger."""
    TestLogger.events = []
    for target in LOGGER_TARGETS:
        monkeypatch.setattr(target, TestLogger)
    return TestLogger


@pytest.fixture(autouse=True)
def restore_root_logging():
    """main() installs its own handler on the root logger."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers = handlers
    root.setLevel(level)


@pytest.fixture
def baseline_path():
    return bundled_path("baseline.json")


@pytest.fixture
def baseline_data(baseline_path):
    return json.loads(baseline_path.read_text(encoding="utf-8"))


@pytest.fixture
def write_scenario(tmp_path):
    """Write a scenario dict to a file and return its path."""

    def _write(data, name="scenario.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return _write
