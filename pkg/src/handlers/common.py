"""Shared helpers for command handlers."""

from __future__ import annotations

from pathlib import Path
from typing import Dict, Optional

import structlog

from src.cover.model import CharacterError, CharacterSpec, CoverDatum
from src.observability.logging import logging_enabled
from src.resolvent.calculus import SHEAF_KINDS, SheafSpec
from src.schema.cover import load_cover

logger = structlog.get_logger(__name__)

SHEAF_CHOICES = tuple(kind.replace("_", "-") for kind in SHEAF_KINDS)


def sheaf_from_option(name: str) -> SheafSpec:
    """``canonical-half`` on the command line is the ``canonical_half`` sheaf."""

    return SheafSpec(name.replace("-", "_"))  # type: ignore[arg-type]


def parse_raw_exponents(text: str) -> Dict[str, int]:
    """``y0=2,y1=0`` -> {"y0": 2, "y1": 0}."""

    exponents: Dict[str, int] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise CharacterError(f"raw exponent entry {item!r} is not id=value")
        try:
            exponents[name.strip()] = int(value)
        except ValueError as exc:
            raise CharacterError(f"raw exponent for {name!r} is not an integer: {value!r}") from exc
    if not exponents:
        raise CharacterError("raw exponents are empty")
    return exponents


def character_from_options(
    exponent: Optional[int], raw_exponents: Optional[str]
) -> CharacterSpec:
    if raw_exponents is not None:
        return CharacterSpec.from_raw(parse_raw_exponents(raw_exponents))
    return CharacterSpec.from_exponent(0 if exponent is None else exponent)


def load_cover_file(path: str) -> CoverDatum:
    cover = load_cover(Path(path))
    if logging_enabled():
        logger.info(
            "cover_loaded",
            path=path,
            group_order=cover.group_order,
            residue_prime=cover.residue_prime,
            components=list(cover.component_ids),
        )
    return cover
