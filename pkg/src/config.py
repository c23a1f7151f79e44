"""Configuration helpers for logging, prime search and verification suites."""

from __future__ import annotations

import os


class ConfigurationError(ValueError):
    """Raised when an environment variable holds an unusable value."""


def _env_bool(name: str, default: bool = False) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in {"1", "true", "yes", "on"}


def _env_int(name: str, default: int, minimum: int | None = None) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError as exc:
        raise ConfigurationError(f"{name} must be an integer (got {raw!r})") from exc
    if minimum is not None and value < minimum:
        raise ConfigurationError(f"{name} must be >= {minimum} (got {value})")
    return value


OBS_LOG_ALL = _env_bool("OBS_LOG_ALL", False)
OBS_LOG_ENABLED = _env_bool("OBS_LOG_ENABLED", False) or OBS_LOG_ALL
OBS_LOG_FILE = os.getenv("OBS_LOG_FILE", "./logs/obstructions.log")
OBS_LOG_PRETTY = _env_bool("OBS_LOG_PRETTY", False)
OBS_SEARCH_LOG_ENABLED = _env_bool("OBS_SEARCH_LOG_ENABLED", False)
OBS_SEARCH_LOG_FILE = os.getenv("OBS_SEARCH_LOG_FILE", "./logs/prime_search.log")


def get_search_workers() -> int:
    return _env_int("SEARCH_WORKERS", 1, minimum=1)


def get_search_batch_size() -> int:
    return _env_int("SEARCH_BATCH_SIZE", 32, minimum=1)


def get_default_search_limit() -> int:
    return _env_int("DEFAULT_SEARCH_LIMIT", 1_000_000, minimum=2)


def get_verify_default_seed() -> int:
    return _env_int("VERIFY_DEFAULT_SEED", 42)
