"""Failure raised by the identity verifiers."""

from __future__ import annotations

from typing import Any, Dict, Optional


class IdentityFailure(RuntimeError):
    """Raised when an identity that must hold exactly does not; carries the counterexample."""

    def __init__(self, identity: str, datum: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(f"identity {identity} failed")
        self.identity = identity
        self.datum = datum or {}
