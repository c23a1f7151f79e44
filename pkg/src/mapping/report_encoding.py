"""Encode exact values and reports as deterministic JSON text, and parse them back."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Mapping, Union

from src.galois.ring import GaloisRingElement
from src.schema.report import Report

_RATIONAL = re.compile(r"^(-?\d+)/(\d+)$")


class ReportEncodingError(ValueError):
    """Raised when encoded text does not follow the report conventions."""


def encode_rational(value: Union[int, Fraction]) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def decode_rational(text: str) -> Fraction:
    match = _RATIONAL.match(text)
    if match is None:
        raise ReportEncodingError(f"not a rational of the form num/den: {text!r}")
    numerator, denominator = int(match.group(1)), int(match.group(2))
    if denominator == 0 or gcd(numerator, denominator) != 1:
        raise ReportEncodingError(f"rational {text!r} is not in lowest terms")
    return Fraction(numerator, denominator)


def encode_ring(x: GaloisRingElement) -> Dict[str, Any]:
    return {
        "modulus": x.modulus,
        "terms": [[index, encode_rational(value)] for index, value in x.items()],
    }


def decode_ring(payload: Mapping[str, Any]) -> GaloisRingElement:
    try:
        modulus = payload["modulus"]
        terms = payload["terms"]
    except (KeyError, TypeError) as exc:
        raise ReportEncodingError(f"ring element needs modulus and terms: {payload!r}") from exc
    return GaloisRingElement.from_terms(
        modulus, ((int(index), decode_rational(value)) for index, value in terms)
    )


def encode_rational_map(values: Mapping[Any, Union[int, Fraction]]) -> Dict[str, str]:
    return {str(key): encode_rational(value) for key, value in values.items()}


def render_report(report: Report) -> str:
    payload = report.model_dump(exclude_none=True)
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def render_payload(payload: Mapping[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def parse_report(text: str) -> Report:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportEncodingError(f"report is not valid JSON: {exc.msg}") from exc
    return Report.model_validate(data)
