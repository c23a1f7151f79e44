"""Cover file schema: reading and writing cover data as JSON."""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Any, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError

from src.cover.model import (
    CoverDatum,
    FiberComponent,
    IntersectionMatrix,
    validate_cover,
)


class CoverFileError(ValueError):
    """Raised when a cover file cannot be read or parsed; ``position`` locates the fault."""

    def __init__(self, message: str, position: Optional[str] = None) -> None:
        super().__init__(message if position is None else f"{message} (at {position})")
        self.position = position


class ComponentEntry(BaseModel):
    """One fiber component."""

    model_config = ConfigDict(extra="forbid")

    id: str
    e: int
    m: int
    self_intersection: int
    chi_struct: int
    d_custom: Optional[int] = None


class CoverFile(BaseModel):
    """Top-level cover document; intersections are [id, id, value] triples."""

    model_config = ConfigDict(extra="forbid")

    group_order: int
    residue_prime: int
    components: List[ComponentEntry]
    intersections: List[Tuple[str, str, int]] = []


def _format_location(loc: Tuple[Any, ...]) -> str:
    position = ""
    for part in loc:
        if isinstance(part, int):
            position += f"[{part}]"
        else:
            position += f".{part}" if position else str(part)
    return position or "<root>"


def parse_cover_text(text: str) -> CoverFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CoverFileError(
            f"cover file is not valid JSON: {exc.msg}",
            f"line {exc.lineno} column {exc.colno}",
        ) from exc
    if not isinstance(data, dict):
        raise CoverFileError("cover file must contain a JSON object", "<root>")
    try:
        return CoverFile.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise CoverFileError(first["msg"], _format_location(tuple(first["loc"]))) from exc


def to_cover_datum(cover_file: CoverFile) -> CoverDatum:
    components = tuple(
        FiberComponent(
            id=entry.id,
            e=entry.e,
            m=entry.m,
            self_intersection=entry.self_intersection,
            chi_struct=entry.chi_struct,
            d_custom=entry.d_custom,
        )
        for entry in cover_file.components
    )
    entries = {}
    for index, (y, z, value) in enumerate(cover_file.intersections):
        if (y, z) in entries and entries[(y, z)] != value:
            raise CoverFileError(
                f"conflicting values for intersection ({y}, {z})",
                f"intersections[{index}]",
            )
        entries[(y, z)] = value
    return validate_cover(
        CoverDatum(
            group_order=cover_file.group_order,
            components=components,
            intersections=IntersectionMatrix(entries),
            residue_prime=cover_file.residue_prime,
        )
    )


def from_cover_datum(c: CoverDatum) -> CoverFile:
    """Cover file listing each unordered off-diagonal intersection once."""

    triples = [
        (y, z, value)
        for (y, z), value in sorted(c.intersections.entries.items())
        if y < z
    ]
    return CoverFile(
        group_order=c.group_order,
        residue_prime=c.residue_prime,
        components=[
            ComponentEntry(
                id=comp.id,
                e=comp.e,
                m=comp.m,
                self_intersection=comp.self_intersection,
                chi_struct=comp.chi_struct,
                d_custom=comp.d_custom,
            )
            for comp in c.components
        ],
        intersections=triples,
    )


def load_cover(path: Path) -> CoverDatum:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CoverFileError(f"cover file at {path} is unreadable ({exc})") from exc
    return to_cover_datum(parse_cover_text(text))


def save_cover(c: CoverDatum, path: Path) -> None:
    payload = from_cover_datum(c).model_dump(exclude_none=True)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp_fd, tmp_name = tempfile.mkstemp(prefix=path.name + ".", dir=str(path.parent))
    tmp_path = Path(tmp_name)
    try:
        with os.fdopen(tmp_fd, "w", encoding="utf-8") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
            f.write("\n")
        tmp_path.replace(path)
    finally:
        if tmp_path.exists() and tmp_path != path:
            tmp_path.unlink(missing_ok=True)
