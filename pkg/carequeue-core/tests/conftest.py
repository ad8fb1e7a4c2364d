"""Pytest configuration for carequeue-core tests."""
import numpy as np
import pytest

from tests.logger import TestLogger


@pytest.fixture(autouse=True)
def mock_logger(monkeypatch):
    """Replace the run event Logger with an in-memory TestLogger."""
    TestLogger.events = []
    monkeypatch.setattr("carequeue_core.core.logger.Logger", TestLogger)
    return TestLogger


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
