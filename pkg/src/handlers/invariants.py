"""invariants command: T, Euler differences and a(phi) per character."""

from __future__ import annotations

from typing import Any, Dict, List, Optional

import structlog

from src.cover.model import CharacterSpec, CoverDatum
from src.handlers.common import load_cover_file, sheaf_from_option
from src.intersection.forms import (
    IntegralityError,
    a_invariant,
    euler_delta,
    t_invariant,
    twisted_delta,
)
from src.mapping.report_encoding import encode_rational
from src.observability.logging import logging_enabled
from src.resolvent.calculus import STRUCTURE, SheafSpec
from src.schema.report import Report

logger = structlog.get_logger(__name__)


def _row(cover: CoverDatum, spec: SheafSpec, a: int) -> Dict[str, Any]:
    phi = CharacterSpec.from_exponent(a)
    row: Dict[str, Any] = {
        "character": a,
        "t": encode_rational(t_invariant(cover, spec, phi).value),
        "t_structure": encode_rational(t_invariant(cover, STRUCTURE, phi).value),
    }
    failures: List[Dict[str, str]] = []
    for key, compute in (
        ("euler_delta", euler_delta),
        ("twisted_delta", twisted_delta),
    ):
        try:
            row[key] = compute(cover, spec, phi)
        except IntegralityError as exc:
            row[key] = None
            failures.append({"quantity": exc.quantity, "value": encode_rational(exc.value)})
    try:
        row["a_invariant"] = a_invariant(cover, phi)
    except IntegralityError as exc:
        row["a_invariant"] = None
        failures.append({"quantity": exc.quantity, "value": encode_rational(exc.value)})
    if failures:
        row["integrality_failures"] = failures
    return row


def handle_invariants(
    cover_path: str,
    sheaf: str,
    character: Optional[int] = None,
    all_characters: bool = False,
) -> Report:
    """Tabulate per character; non-integral differences are flagged, never rounded."""

    cover = load_cover_file(cover_path)
    spec = sheaf_from_option(sheaf)
    if character is not None and not all_characters:
        characters = [character % cover.group_order]
    else:
        characters = list(range(cover.group_order))

    rows = [_row(cover, spec, a) for a in characters]
    flagged = [row["character"] for row in rows if "integrality_failures" in row]
    if flagged and logging_enabled():
        logger.info("integrality_flagged", cover=cover_path, characters=flagged)
    return Report(
        command="invariants",
        inputs={
            "cover": cover_path,
            "sheaf": spec.kind,
            "characters": "all" if character is None or all_characters else characters,
        },
        results={"rows": rows},
        verdicts={"integral": not flagged, "integrality_failures": flagged},
    )
