"""Runtime settings read from the environment (and a local .env file)."""

from __future__ import annotations

import logging
import os

from lincode.errors import ConfigError

THREADS_VAR = "LCODE_THREADS"
LOG_LEVEL_VAR = "LCODE_LOG_LEVEL"


def worker_count() -> int:
    """Cap on worker processes; defaults to the hardware count."""
    raw = os.environ.get(THREADS_VAR, "").strip()
    if not raw:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{THREADS_VAR} must be at least 1, got {value}")
    return value


def log_level() -> int:
    name = os.environ.get(LOG_LEVEL_VAR, "INFO").strip().upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ConfigError(f"{LOG_LEVEL_VAR} is not a logging level: {name!r}")
    return level
