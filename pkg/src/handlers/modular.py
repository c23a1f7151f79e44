"""modular command: the class report for one (p, l), or the prime search for l."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Optional

import structlog

from src.mapping.report_encoding import encode_ring
from src.modular.family import (
    ClassReport,
    ModularParams,
    build_cover,
    norm_report,
)
from src.modular.search import search_prime
from src.observability.logging import logging_enabled
from src.schema.cover import save_cover
from src.schema.report import Report

logger = structlog.get_logger(__name__)


def _encode_exponents(report: ClassReport) -> Dict[str, Any]:
    verdicts = {entry.name: entry for entry in report.classes}
    encoded: Dict[str, Any] = {}
    for name, representations in report.exponents.representations.items():
        norms = verdicts[name].norm_exponents
        encoded[name] = {
            rep.name: {
                "factors": [
                    {"base": base, "element": encode_ring(element)}
                    for base, element in rep.factors
                ],
                "norm_exponent": norms.get(rep.name),
            }
            for rep in representations
        }
    return encoded


def _t_residues(t1: int, t2: int, l: int, h: int, sign: int) -> Dict[str, int]:
    """Residues mod h of t1, t2 and t2 - l t1; sign -1 reads them as exponents of the conjugate prime."""

    return {
        "t1": (sign * t1) % h,
        "t2": (sign * t2) % h,
        "t2_minus_l_t1": (sign * (t2 - l * t1)) % h,
    }


def _encode_class_report(report: ClassReport) -> Dict[str, Any]:
    mp = report.params
    results: Dict[str, Any] = {
        "cusp_intersection": mp.cusp_intersection,
        "scale_6l": report.exponents.scale_6l,
        "scale_12l": report.exponents.scale_12l,
        "exponents": _encode_exponents(report),
        "raw_v_matches_simplified": report.exponents.raw_v_matches_simplified,
        "raw_v_support_upper_half": report.exponents.raw_v_support_upper_half,
    }
    if report.class_group is None:
        results["norm_test"] = "inconclusive"
        return results

    summary = report.class_group
    h = summary.wide_class_number
    results.update(
        {
            "class_group": {
                "narrow_class_number": summary.narrow_class_number,
                "wide_class_number": h,
                "fundamental_unit_norm": summary.fundamental_unit_norm,
                "period_length": summary.period_length,
            },
            "t1": report.t1,
            "t2": report.t2,
            "t_mod_class_number": _t_residues(report.t1, report.t2, mp.l, h, 1),
            "t_mod_class_number_conjugate_base": _t_residues(
                report.t1, report.t2, mp.l, h, -1
            ),
            "beta": {
                "form": list(report.beta_form or ()),
                "principal": report.beta_principal,
                "order": report.beta_order,
            },
            "expected_norm_exponents": {
                entry.name: entry.expected_norm_exponent for entry in report.classes
            },
            "canonical_norm_shadow": report.canonical_norm_shadow,
        }
    )
    return results


def handle_modular(p: int, l: int, emit_cover: Optional[str] = None) -> Report:
    mp = ModularParams(p=p, l=l)
    if emit_cover is not None:
        save_cover(build_cover(mp), Path(emit_cover))
        if logging_enabled():
            logger.info("cover_emitted", path=emit_cover, p=p, l=l)
    report = norm_report(mp)
    verdicts: Dict[str, Any] = {entry.name: entry.verdict for entry in report.classes}
    verdicts["norms_agree"] = all(entry.norms_agree for entry in report.classes)
    verdicts["non_trivial_count"] = report.non_trivial_count
    inputs: Dict[str, Any] = {"p": p, "l": l}
    if emit_cover is not None:
        inputs["emit_cover"] = emit_cover
    return Report(
        command="modular",
        inputs=inputs,
        results=_encode_class_report(report),
        verdicts=verdicts,
    )


def handle_search(l: int, limit: int, strict: bool = False) -> Report:
    result = search_prime(l, limit, strict=strict)
    return Report(
        command="modular",
        inputs={"l": l, "search": True, "limit": limit, "strict_predicate": strict},
        results={
            "prime": result.prime,
            "candidates_checked": result.candidates_checked,
            "primes_checked": result.primes_checked,
        },
        verdicts={"found": result.prime is not None, "reason": result.reason},
    )
