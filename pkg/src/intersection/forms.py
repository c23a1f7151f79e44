"""Intersection forms on resolvent divisors and the Euler-characteristic differences they give."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import structlog

from src.cover.model import CharacterSpec, CoverDatum, canonical_degree
from src.observability.logging import logging_enabled
from src.resolvent.calculus import (
    STRUCTURE,
    ResolventDivisor,
    SheafSpec,
    resolvent_divisor,
    support_divisor,
)

logger = structlog.get_logger(__name__)


class IntegralityError(ValueError):
    """Raised when a quantity that must be an integer for a genuine cover is not.

    This signals inconsistent input data; the value is never rounded.
    """

    def __init__(self, quantity: str, value: Fraction) -> None:
        super().__init__(f"{quantity} is not an integer: {value}")
        self.quantity = quantity
        self.value = value


@dataclass(frozen=True)
class TInvariant:
    """T = r^2 + c_1(omega) . r for one sheaf and character."""

    quadratic_part: Fraction
    linear_part: Fraction

    @property
    def value(self) -> Fraction:
        return self.quadratic_part + self.linear_part


def require_integer(quantity: str, value: Fraction) -> int:
    if value.denominator != 1:
        if logging_enabled():
            logger.info("integrality_failed", quantity=quantity, value=str(value))
        raise IntegralityError(quantity, value)
    return value.numerator


def pair(c: CoverDatum, r1: ResolventDivisor, r2: ResolventDivisor) -> Fraction:
    """Symmetric bilinear intersection pairing of two rational divisors."""

    total = Fraction(0)
    left = [(y, v) for y, v in r1.items() if v != 0]
    right = [(z, w) for z, w in r2.items() if w != 0]
    for y, _ in left + right:
        c.component(y)
    for y, v in left:
        for z, w in right:
            total += v * w * c.intersection(y, z)
    return total


def canonical_pair(c: CoverDatum, r: ResolventDivisor) -> Fraction:
    return sum(
        (value * canonical_degree(c, y) for y, value in r.items() if value != 0),
        Fraction(0),
    )


def t_invariant(c: CoverDatum, s: SheafSpec, phi: CharacterSpec) -> TInvariant:
    r = resolvent_divisor(c, s, phi)
    return TInvariant(quadratic_part=pair(c, r, r), linear_part=canonical_pair(c, r))


def euler_delta(c: CoverDatum, s: SheafSpec, phi: CharacterSpec) -> int:
    """T(F, phi) - T(O_X, phi), twice an equivariant Euler characteristic.

    Every sheaf kind is accepted. The structure sheaf gives 0 for all phi; a
    custom divisor whose difference is not integral raises IntegralityError.
    """

    difference = t_invariant(c, s, phi).value - t_invariant(c, STRUCTURE, phi).value
    return require_integer(f"T({s.kind}) - T(structure)", difference)


def twisted_delta(c: CoverDatum, s: SheafSpec, phi: CharacterSpec) -> int:
    """r(F, phi)^2 - r(O_X, phi)^2, the difference for the twisted sheaves.

    Accepts the same sheaf kinds as euler_delta, with the same integrality check.
    """

    r_s = resolvent_divisor(c, s, phi)
    r_o = resolvent_divisor(c, STRUCTURE, phi)
    difference = pair(c, r_s, r_s) - pair(c, r_o, r_o)
    return require_integer(f"r({s.kind})^2 - r(structure)^2", difference)


def a_invariant(c: CoverDatum, phi: CharacterSpec) -> int:
    """f(phi)^2 + sum over S(phi) of (y^2 + 2 chi(y, O_y))."""

    f = support_divisor(c, phi)
    total = pair(c, f, f)
    for y in f.support():
        component = c.component(y)
        total += component.self_intersection + 2 * component.chi_struct
    return require_integer("a(phi)", total)
