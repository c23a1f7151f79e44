"""Machine-readable report schema."""

from __future__ import annotations

from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict


class Report(BaseModel):
    """One document per invocation; every rational is a "num/den" string."""

    model_config = ConfigDict(extra="forbid")

    type: str = "report"
    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any]
    verdicts: Dict[str, Any] = {}
    timing: Optional[Dict[str, Any]] = None
