"""Conjugate-character identities for resolvent divisors, and random covers to test them on."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Optional

from sympy import divisors, primerange

from src.cover.model import (
    CharacterSpec,
    CoverDatum,
    FiberComponent,
    IntersectionMatrix,
    character_power,
    conjugate_character,
    validate_cover,
)
from src.resolvent.calculus import (
    CANONICAL,
    CANONICAL_HALF,
    STRUCTURE,
    resolvent_divisor,
    support_divisor,
)

_SMALL_PRIMES = [int(q) for q in primerange(2, 200)]


@dataclass(frozen=True)
class ConjugateIdentityReport:
    structure_pair_is_support: bool
    half_pair_vanishes: bool
    half_is_square_difference: bool
    canonical_decomposition: bool
    half_decomposition: bool
    integral_after_scaling: bool

    @property
    def passed(self) -> bool:
        return all(self.as_dict().values())

    def as_dict(self) -> Dict[str, bool]:
        return {
            "structure_pair_is_support": self.structure_pair_is_support,
            "half_pair_vanishes": self.half_pair_vanishes,
            "half_is_square_difference": self.half_is_square_difference,
            "canonical_decomposition": self.canonical_decomposition,
            "half_decomposition": self.half_decomposition,
            "integral_after_scaling": self.integral_after_scaling,
        }


def verify_conjugate_identities(
    c: CoverDatum, phi: CharacterSpec
) -> ConjugateIdentityReport:
    """Check the divisor identities relating phi, its conjugate and its square."""

    phi_bar = conjugate_character(c, phi)
    phi_sq = character_power(c, phi, 2)

    r_o = resolvent_divisor(c, STRUCTURE, phi)
    r_o_bar = resolvent_divisor(c, STRUCTURE, phi_bar)
    r_o_sq = resolvent_divisor(c, STRUCTURE, phi_sq)
    r_w = resolvent_divisor(c, CANONICAL, phi)
    r_h = resolvent_divisor(c, CANONICAL_HALF, phi)
    r_h_bar = resolvent_divisor(c, CANONICAL_HALF, phi_bar)
    f = support_divisor(c, phi)
    f_half = support_divisor(c, phi, strict_half=True)

    n = c.group_order
    integral = all(
        (n * value).denominator == 1
        for divisor in (r_o, r_w, r_h)
        for _, value in divisor.items()
    )
    zero = resolvent_divisor(c, STRUCTURE, CharacterSpec.from_exponent(0))
    return ConjugateIdentityReport(
        structure_pair_is_support=(r_o + r_o_bar).same_as(f),
        half_pair_vanishes=(r_h + r_h_bar).same_as(zero),
        half_is_square_difference=r_h.same_as(r_o_sq - r_o),
        canonical_decomposition=r_w.same_as(r_o - f),
        half_decomposition=r_h.same_as(r_o - f_half),
        integral_after_scaling=integral,
    )


def random_cover(
    rng: random.Random, max_components: int = 6, max_e: int = 81
) -> CoverDatum:
    """Random validated cover with odd group order at most max_e."""

    n = rng.choice([k for k in range(1, max_e + 1, 2)])
    primes = [p for p in _SMALL_PRIMES if n % p != 0]
    residue_prime = rng.choice(primes)
    index_choices = [int(d) for d in divisors(n)]

    components: List[FiberComponent] = []
    for position in range(rng.randint(1, max_components)):
        e = rng.choice(index_choices)
        if e == 1:
            m = 0
        else:
            m = rng.choice([u for u in range(1, e) if gcd(u, e) == 1])
        components.append(
            FiberComponent(
                id=f"y{position}",
                e=e,
                m=m,
                self_intersection=-rng.randint(0, 60),
                chi_struct=rng.randint(-2, 2),
                d_custom=rng.randint(-2 * e, 2 * e),
            )
        )
    entries: Dict[tuple[str, str], int] = {}
    for i, left in enumerate(components):
        for right in components[i + 1 :]:
            entries[(left.id, right.id)] = rng.randint(0, 30)
    return validate_cover(
        CoverDatum(
            group_order=n,
            components=tuple(components),
            intersections=IntersectionMatrix(entries),
            residue_prime=residue_prime,
        )
    )


def random_character(
    rng: random.Random, c: CoverDatum, raw: Optional[bool] = None
) -> CharacterSpec:
    use_raw = rng.random() < 0.5 if raw is None else raw
    if not use_raw:
        return CharacterSpec.from_exponent(rng.randrange(c.group_order))
    return CharacterSpec.from_raw(
        {comp.id: rng.randrange(comp.e) for comp in c.components}
    )


def run_conjugate_suite(count: int, seed: int) -> List[Dict[str, object]]:
    """Run the identities on ``count`` random covers; return the failing cases."""

    rng = random.Random(seed)
    failures: List[Dict[str, object]] = []
    for trial in range(count):
        cover = random_cover(rng)
        phi = random_character(rng, cover)
        report = verify_conjugate_identities(cover, phi)
        if not report.passed:
            failures.append(
                {
                    "trial": trial,
                    "group_order": cover.group_order,
                    "components": [
                        {"id": comp.id, "e": comp.e, "m": comp.m}
                        for comp in cover.components
                    ],
                    "character": (
                        {"exponent": phi.exponent}
                        if phi.exponent is not None
                        else {"raw": dict(phi.raw or {})}
                    ),
                    "checks": report.as_dict(),
                }
            )
    return failures


__all__ = [
    "ConjugateIdentityReport",
    "random_character",
    "random_cover",
    "run_conjugate_suite",
    "verify_conjugate_identities",
]
