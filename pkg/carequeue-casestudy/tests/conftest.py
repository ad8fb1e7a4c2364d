"""Pytest configuration for carequeue-casestudy tests."""
import pytest

from carequeue_casestudy import load_case_study
from tests.logger import TestLogger


@pytest.fixture(autouse=True)
def mock_logger(monkeypatch):
    """Replace the run event Logger with an in-memory TestLogger."""
    TestLogger.events = []
    monkeypatch.setattr("carequeue_core.core.logger.Logger", TestLogger)
    monkeypatch.setattr("carequeue_casestudy.experiment.harness.Logger", TestLogger)
    return TestLogger


@pytest.fixture(scope="session")
def case_study():
    """Calibrated baseline scenario and its calibration result."""
    return load_case_study(calibrated=True)


@pytest.fixture(scope="session")
def baseline(case_study):
    return case_study[0]
