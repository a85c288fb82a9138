import logging
import os

import pytest

from lincode.config import LOG_LEVEL_VAR, THREADS_VAR, log_level, worker_count
from lincode.errors import ConfigError


def test_worker_count_default(monkeypatch):
    monkeypatch.delenv(THREADS_VAR, raising=False)
    assert worker_count() == (os.cpu_count() or 1)


def test_worker_count_from_env(monkeypatch):
    monkeypatch.setenv(THREADS_VAR, " 3 ")
    assert worker_count() == 3


@pytest.mark.parametrize("raw", ["0", "-2", "many"])
def test_worker_count_rejects(monkeypatch, raw):
    monkeypatch.setenv(THREADS_VAR, raw)
    with pytest.raises(ConfigError):
        worker_count()


def test_log_level(monkeypatch):
    monkeypatch.delenv(LOG_LEVEL_VAR, raising=False)
    assert log_level() == logging.INFO
    monkeypatch.setenv(LOG_LEVEL_VAR, "debug")
    assert log_level() == logging.DEBUG
    monkeypatch.setenv(LOG_LEVEL_VAR, "loud")
    with pytest.raises(ConfigError):
        log_level()
