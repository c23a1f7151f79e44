"""structlog setup: JSON diagnostics on stderr and log files, never on stdout."""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import List

import structlog

from src.config import (
    OBS_LOG_ALL,
    OBS_LOG_ENABLED,
    OBS_LOG_FILE,
    OBS_LOG_PRETTY,
    OBS_SEARCH_LOG_ENABLED,
    OBS_SEARCH_LOG_FILE,
)

SEARCH_LOGGER_NAME = "prime_search"


def logging_enabled() -> bool:
    return OBS_LOG_ENABLED


def search_logging_enabled() -> bool:
    return OBS_SEARCH_LOG_ENABLED


def _shared_processors() -> List[structlog.types.Processor]:
    return [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
    ]


def _formatter() -> structlog.stdlib.ProcessorFormatter:
    renderer = (
        structlog.processors.JSONRenderer(indent=2, sort_keys=True)
        if OBS_LOG_PRETTY
        else structlog.processors.JSONRenderer(sort_keys=True)
    )
    return structlog.stdlib.ProcessorFormatter(
        processors=[
            structlog.stdlib.ProcessorFormatter.remove_processors_meta,
            renderer,
        ],
        foreign_pre_chain=_shared_processors(),
    )


def _file_handler(path: str, level: int) -> logging.Handler:
    file_path = Path(path)
    file_path.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(file_path)
    handler.setLevel(level)
    handler.setFormatter(_formatter())
    return handler


def _configure_root(level: int) -> None:
    root = logging.getLogger()
    root.setLevel(level)
    root.handlers.clear()

    # stdout carries the machine report
    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.setLevel(level)
    stderr_handler.setFormatter(_formatter())
    root.addHandler(stderr_handler)
    root.addHandler(_file_handler(OBS_LOG_FILE, level))


def _configure_search_trace() -> None:
    """Per-candidate search events go to their own file only."""

    search_logger = logging.getLogger(SEARCH_LOGGER_NAME)
    search_logger.setLevel(logging.DEBUG)
    search_logger.handlers.clear()
    search_logger.addHandler(_file_handler(OBS_SEARCH_LOG_FILE, logging.DEBUG))
    search_logger.propagate = False


def configure_logging() -> None:
    level = logging.DEBUG if OBS_LOG_ALL else logging.INFO
    if logging_enabled():
        _configure_root(level)
    if search_logging_enabled():
        _configure_search_trace()

    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            *_shared_processors(),
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.format_exc_info,
            structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
        ],
        wrapper_class=structlog.stdlib.BoundLogger,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def get_search_logger() -> structlog.stdlib.BoundLogger:
    return structlog.get_logger(SEARCH_LOGGER_NAME)
