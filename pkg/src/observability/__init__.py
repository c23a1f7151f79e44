"""Observability helpers."""

from src.observability.context import InvocationContext, invocation_context
from src.observability.logging import configure_logging, logging_enabled

__all__ = [
    "InvocationContext",
    "configure_logging",
    "invocation_context",
    "logging_enabled",
]
