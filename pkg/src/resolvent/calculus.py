"""Resolvent coefficients, resolvent divisors and their support divisors."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Dict, Iterator, Literal, Mapping, Tuple

from src.cover.model import (
    CharacterSpec,
    CoverDatum,
    CoverValidationError,
    FiberComponent,
    local_exponent,
)

SheafKind = Literal["structure", "canonical", "canonical_half", "custom"]
SHEAF_KINDS: Tuple[str, ...] = ("structure", "canonical", "canonical_half", "custom")


class ResolventRangeError(ValueError):
    """Raised when a local exponent or ramification index is out of range."""


@dataclass(frozen=True)
class SheafSpec:
    """G-invariant divisor D = sum d_y y selecting the sheaf F."""

    kind: SheafKind = "structure"

    def __post_init__(self) -> None:
        if self.kind not in SHEAF_KINDS:
            raise ValueError(
                f"sheaf kind must be one of {list(SHEAF_KINDS)} (got {self.kind!r})"
            )

    def coefficient(self, component: FiberComponent) -> int:
        e = component.e
        if self.kind == "structure":
            return 0
        if self.kind == "canonical":
            return e - 1
        if self.kind == "canonical_half":
            if e % 2 == 0:
                raise ResolventRangeError(
                    f"square root of the dualizing sheaf needs odd e (got {e} at {component.id!r})"
                )
            return (e - 1) // 2
        if component.d_custom is None:
            raise CoverValidationError(
                "custom sheaf needs d_custom on every component", component.id
            )
        return component.d_custom


STRUCTURE = SheafSpec("structure")
CANONICAL = SheafSpec("canonical")
CANONICAL_HALF = SheafSpec("canonical_half")


@dataclass(frozen=True)
class ResolventDivisor:
    """Rational divisor supported on fiber components."""

    coeffs: Mapping[str, Fraction] = field(default_factory=dict)

    def __getitem__(self, component_id: str) -> Fraction:
        return self.coeffs.get(component_id, Fraction(0))

    def __iter__(self) -> Iterator[str]:
        return iter(self.coeffs)

    def items(self) -> Iterator[Tuple[str, Fraction]]:
        return iter(self.coeffs.items())

    def support(self) -> Tuple[str, ...]:
        return tuple(cid for cid, value in self.coeffs.items() if value != 0)

    def is_zero(self) -> bool:
        return not self.support()

    def _combine(self, other: "ResolventDivisor", sign: int) -> "ResolventDivisor":
        keys = sorted(set(self.coeffs) | set(other.coeffs))
        return ResolventDivisor({k: self[k] + sign * other[k] for k in keys})

    def __add__(self, other: "ResolventDivisor") -> "ResolventDivisor":
        return self._combine(other, 1)

    def __sub__(self, other: "ResolventDivisor") -> "ResolventDivisor":
        return self._combine(other, -1)

    def scale(self, factor: Fraction | int) -> "ResolventDivisor":
        return ResolventDivisor({k: v * factor for k, v in self.coeffs.items()})

    def same_as(self, other: "ResolventDivisor") -> bool:
        """Coefficientwise equality, treating absent components as zero."""

        return all(
            self[k] == other[k] for k in set(self.coeffs) | set(other.coeffs)
        )


def _fractional_part(x: Fraction) -> Fraction:
    return x - floor(x)


def _check_local_range(e: int, nphi: int) -> None:
    if e < 1 or e % 2 == 0:
        raise ResolventRangeError(f"ramification index must be odd and positive (got {e})")
    if not 0 <= nphi < e:
        raise ResolventRangeError(f"local exponent {nphi} outside [0, {e})")


def resolvent_coefficient(e: int, d: int, nphi: int) -> Fraction:
    """v_y(F_phi) = {(nphi + d)/e} - d/e, floor convention for the fractional part."""

    _check_local_range(e, nphi)
    return _fractional_part(Fraction(nphi + d, e)) - Fraction(d, e)


def lagrange_valuation_oracle(e: int, d: int, nphi: int) -> Fraction:
    """Valuation read off the Lagrange resolvent of a uniformizer power.

    Writes -d = q e + r with 0 <= r < e; the resolvent picks up one extra
    factor of the uniformizer's e-th power exactly when r exceeds nphi.
    """

    _check_local_range(e, nphi)
    q, r = divmod(-d, e)
    if r <= nphi:
        return Fraction(nphi + e * q, e)
    return Fraction(nphi + e * (q + 1), e)


def resolvent_divisor(
    c: CoverDatum, s: SheafSpec, phi: CharacterSpec
) -> ResolventDivisor:
    coeffs: Dict[str, Fraction] = {}
    for component in c.components:
        nphi = local_exponent(c, phi, component.id)
        if component.e == 1:
            coeffs[component.id] = Fraction(0)
            continue
        coeffs[component.id] = resolvent_coefficient(
            component.e, s.coefficient(component), nphi
        )
    return ResolventDivisor(coeffs)


def support_divisor(
    c: CoverDatum, phi: CharacterSpec, strict_half: bool = False
) -> ResolventDivisor:
    """Indicator of S(phi) = {n > 0}, or of S'(phi) = {n > e/2} when strict_half."""

    coeffs: Dict[str, Fraction] = {}
    for component in c.components:
        nphi = local_exponent(c, phi, component.id)
        if strict_half:
            inside = 2 * nphi > component.e
        else:
            inside = nphi > 0
        coeffs[component.id] = Fraction(1 if inside else 0)
    return ResolventDivisor(coeffs)
