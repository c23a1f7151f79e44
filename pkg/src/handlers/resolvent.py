"""resolvent command: resolvent divisor and support sets for one sheaf and character."""

from __future__ import annotations

from typing import Optional

from src.cover.model import local_exponents
from src.handlers.common import (
    character_from_options,
    load_cover_file,
    sheaf_from_option,
)
from src.mapping.report_encoding import encode_rational_map
from src.resolvent.calculus import resolvent_divisor, support_divisor
from src.schema.report import Report


def handle_resolvent(
    cover_path: str,
    sheaf: str,
    character: Optional[int] = None,
    raw_exponents: Optional[str] = None,
) -> Report:
    cover = load_cover_file(cover_path)
    spec = sheaf_from_option(sheaf)
    phi = character_from_options(character, raw_exponents)

    divisor = resolvent_divisor(cover, spec, phi)
    support = support_divisor(cover, phi)
    strict_support = support_divisor(cover, phi, strict_half=True)

    inputs = {"cover": cover_path, "sheaf": spec.kind}
    if phi.raw is not None:
        inputs["raw_exponents"] = dict(sorted(phi.raw.items()))
    else:
        inputs["character"] = phi.exponent
    return Report(
        command="resolvent",
        inputs=inputs,
        results={
            "local_exponents": local_exponents(cover, phi),
            "resolvent": encode_rational_map(dict(divisor.items())),
            "support": list(support.support()),
            "strict_half_support": list(strict_support.support()),
        },
    )
