"""Per-invocation context binding for structured logs."""

from __future__ import annotations

import time
import uuid
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator

from structlog.contextvars import bind_contextvars, clear_contextvars


@dataclass
class InvocationContext:
    command: str
    run_id: str
    start_time: float = field(default_factory=time.perf_counter)

    def duration_ms(self) -> int:
        return int((time.perf_counter() - self.start_time) * 1000)


@contextmanager
def invocation_context(command: str) -> Iterator[InvocationContext]:
    clear_contextvars()
    context = InvocationContext(command=command, run_id=uuid.uuid4().hex)
    bind_contextvars(run_id=context.run_id, command=command)
    try:
        yield context
    finally:
        clear_contextvars()
