"""Exponent vectors indexed by characters chi^a of a cyclic group."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Mapping

import structlog

from src.cover.model import CharacterSpec, CoverDatum
from src.galois.ring import GaloisRingElement, RingModulusError, inverse_index
from src.intersection.forms import (
    a_invariant,
    pair,
    require_integer,
    t_invariant,
)
from src.observability.logging import logging_enabled
from src.resolvent.calculus import (
    CANONICAL,
    STRUCTURE,
    SheafSpec,
    resolvent_divisor,
    support_divisor,
)

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class ExponentVector:
    """Integers indexed by a in [1, n); coefficient a sits on sigma_a^{-1}.

    ``base`` names what each coefficient exponentiates: the class of the
    prime above the residue prime, raised to T(O, chi^a) - T(F, chi^a).
    """

    group_order: int
    residue_prime: int
    coeffs: Mapping[int, int] = field(default_factory=dict)
    base: str = "P"

    def support(self) -> List[int]:
        return [a for a, value in sorted(self.coeffs.items()) if value != 0]

    def as_ring_element(self) -> GaloisRingElement:
        """Sum of coeff(a) sigma_a^{-1} in the group ring of (Z/n)^x."""

        n = self.group_order
        terms: Dict[int, Fraction] = {}
        for a, value in self.coeffs.items():
            if value == 0:
                continue
            if gcd(a, n) != 1:
                raise RingModulusError(
                    f"index {a} carries {value} but is not a unit modulo {n}"
                )
            key = inverse_index(n, a)
            terms[key] = terms.get(key, Fraction(0)) + value
        return GaloisRingElement(n, terms)

    def __add__(self, other: "ExponentVector") -> "ExponentVector":
        if (other.group_order, other.residue_prime) != (
            self.group_order,
            self.residue_prime,
        ):
            raise ValueError("exponent vectors live over different covers")
        keys = sorted(set(self.coeffs) | set(other.coeffs))
        return ExponentVector(
            group_order=self.group_order,
            residue_prime=self.residue_prime,
            coeffs={
                a: self.coeffs.get(a, 0) + other.coeffs.get(a, 0) for a in keys
            },
            base=self.base,
        )


def _characters(c: CoverDatum) -> Iterable[int]:
    return range(1, c.group_order)


def exponent_vector(c: CoverDatum, s: SheafSpec) -> ExponentVector:
    """Coefficient at a is T(O_X, chi^a) - T(F, chi^a); the trivial character is omitted."""

    coeffs: Dict[int, int] = {}
    for a in _characters(c):
        phi = CharacterSpec.from_exponent(a)
        difference = t_invariant(c, STRUCTURE, phi).value - t_invariant(c, s, phi).value
        coeffs[a] = require_integer(f"T(structure) - T({s.kind}) at a={a}", difference)
    if logging_enabled():
        logger.debug(
            "exponent_vector_computed",
            sheaf=s.kind,
            group_order=c.group_order,
            support=[a for a, v in coeffs.items() if v],
        )
    return ExponentVector(c.group_order, c.residue_prime, coeffs)


def twisted_exponent_vector(c: CoverDatum, s: SheafSpec) -> ExponentVector:
    """Coefficient at a is r(O_X, chi^a)^2 - r(F, chi^a)^2."""

    coeffs: Dict[int, int] = {}
    for a in _characters(c):
        phi = CharacterSpec.from_exponent(a)
        r_o = resolvent_divisor(c, STRUCTURE, phi)
        r_s = resolvent_divisor(c, s, phi)
        coeffs[a] = require_integer(
            f"r(structure)^2 - r({s.kind})^2 at a={a}",
            pair(c, r_o, r_o) - pair(c, r_s, r_s),
        )
    return ExponentVector(c.group_order, c.residue_prime, coeffs, base="P~")


@dataclass(frozen=True)
class CanonicalDecomposition:
    """T(omega, chi^a) - T(O_X, chi^a) = u(a) + h(a) with u(a) = a(chi^a).

    ``alpha`` collects h(a) = -2 f(chi^a) . r(O_X, chi^a) over the units a as
    sum h(a) sigma_a^{-1}.
    """

    u_part: Mapping[int, int]
    h_part: Mapping[int, int]
    alpha: GaloisRingElement
    consistent: bool


def canonical_decomposition(c: CoverDatum) -> CanonicalDecomposition:
    canonical = exponent_vector(c, CANONICAL)
    n = c.group_order
    u_part: Dict[int, int] = {}
    h_part: Dict[int, int] = {}
    alpha_terms: Dict[int, Fraction] = {}
    consistent = True
    for a in _characters(c):
        phi = CharacterSpec.from_exponent(a)
        f = support_divisor(c, phi)
        r_o = resolvent_divisor(c, STRUCTURE, phi)
        u_part[a] = a_invariant(c, phi)
        h_part[a] = require_integer(f"-2 f . r(structure) at a={a}", -2 * pair(c, f, r_o))
        if u_part[a] + h_part[a] != -canonical.coeffs[a]:
            consistent = False
        if gcd(a, n) == 1:
            alpha_terms[inverse_index(n, a)] = Fraction(h_part[a])
    return CanonicalDecomposition(
        u_part=u_part,
        h_part=h_part,
        alpha=GaloisRingElement(n, alpha_terms),
        consistent=consistent,
    )


def aggregate_exponent_vectors(
    covers: Iterable[CoverDatum], s: SheafSpec
) -> Dict[int, ExponentVector]:
    """One exponent vector per residue prime, summing covers over the same prime."""

    aggregated: Dict[int, ExponentVector] = {}
    group_order: int | None = None
    for cover in covers:
        if group_order is None:
            group_order = cover.group_order
        elif cover.group_order != group_order:
            raise ValueError(
                f"covers disagree on group order: {group_order} != {cover.group_order}"
            )
        vector = exponent_vector(cover, s)
        existing = aggregated.get(cover.residue_prime)
        aggregated[cover.residue_prime] = vector if existing is None else existing + vector
    return dict(sorted(aggregated.items()))
