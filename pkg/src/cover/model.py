"""Ramification and intersection data of a tame cyclic cover over one residue prime."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd
from typing import Dict, Iterable, Mapping, Optional, Tuple

import structlog
from sympy import isprime

from src.observability.logging import logging_enabled

logger = structlog.get_logger(__name__)


class CoverValidationError(ValueError):
    """Raised when cover data violates a structural invariant."""

    def __init__(self, message: str, component_id: Optional[str] = None) -> None:
        super().__init__(message)
        self.component_id = component_id


class CharacterError(ValueError):
    """Raised when a character specification does not fit the cover."""


@dataclass(frozen=True)
class FiberComponent:
    """Irreducible component y of the special fiber."""

    id: str
    e: int
    m: int
    self_intersection: int
    chi_struct: int
    d_custom: Optional[int] = None

    @property
    def ramified(self) -> bool:
        return self.e > 1


@dataclass(frozen=True)
class IntersectionMatrix:
    """Symmetric intersection pairing on fiber components, diagonal included."""

    entries: Mapping[Tuple[str, str], int] = field(default_factory=dict)

    def get(self, y: str, z: str) -> int:
        value = self.entries.get((y, z))
        if value is None:
            value = self.entries.get((z, y), 0)
        return value


@dataclass(frozen=True)
class CoverDatum:
    group_order: int
    components: Tuple[FiberComponent, ...]
    intersections: IntersectionMatrix
    residue_prime: int

    def component(self, component_id: str) -> FiberComponent:
        for component in self.components:
            if component.id == component_id:
                return component
        raise CoverValidationError(
            f"unknown component id {component_id!r}", component_id
        )

    @property
    def component_ids(self) -> Tuple[str, ...]:
        return tuple(component.id for component in self.components)

    def intersection(self, y: str, z: str) -> int:
        """(y . z); a diagonal missing from the matrix is read from self_intersection."""

        if y == z and (y, y) not in self.intersections.entries:
            return self.component(y).self_intersection
        return self.intersections.get(y, z)


@dataclass(frozen=True)
class CharacterSpec:
    """A character described by its generator exponent or by raw local exponents."""

    exponent: Optional[int] = None
    raw: Optional[Mapping[str, int]] = None

    def __post_init__(self) -> None:
        if (self.exponent is None) == (self.raw is None):
            raise CharacterError("character needs exactly one of exponent or raw")

    @classmethod
    def from_exponent(cls, a: int) -> "CharacterSpec":
        return cls(exponent=a)

    @classmethod
    def from_raw(cls, exponents: Mapping[str, int]) -> "CharacterSpec":
        return cls(raw=dict(exponents))


def _check_group(c: CoverDatum) -> None:
    n = c.group_order
    if n < 1:
        raise CoverValidationError(f"group order must be positive (got {n})")
    if n % 2 == 0:
        raise CoverValidationError(f"even group order {n}")
    p = c.residue_prime
    if not isprime(p):
        raise CoverValidationError(f"residue prime {p} is not prime")
    if gcd(n, p) != 1:
        raise CoverValidationError(
            f"cover is not tame: residue prime {p} divides group order {n}"
        )


def _check_component(component: FiberComponent, n: int) -> None:
    cid = component.id
    e = component.e
    if e < 1:
        raise CoverValidationError(f"ramification index {e} is not positive", cid)
    if n % e != 0:
        raise CoverValidationError(
            f"ramification index {e} does not divide group order {n}", cid
        )
    if not 0 <= component.m < e:
        raise CoverValidationError(
            f"inertia exponent {component.m} outside [0, {e})", cid
        )
    if e > 1 and gcd(component.m, e) != 1:
        raise CoverValidationError(
            f"inertia exponent not a unit: gcd({component.m}, {e}) != 1", cid
        )


def _normalize_intersections(
    components: Iterable[FiberComponent], matrix: IntersectionMatrix
) -> IntersectionMatrix:
    by_id = {component.id: component for component in components}
    normalized: Dict[Tuple[str, str], int] = {}
    for (y, z), value in matrix.entries.items():
        for cid in (y, z):
            if cid not in by_id:
                raise CoverValidationError(
                    f"intersection references unknown component id {cid!r}", cid
                )
        if y == z:
            if value != by_id[y].self_intersection:
                raise CoverValidationError(
                    f"diagonal entry {value} differs from self-intersection "
                    f"{by_id[y].self_intersection}",
                    y,
                )
            continue
        if value < 0:
            raise CoverValidationError(
                f"negative intersection {value} between distinct components {y!r} and {z!r}",
                y,
            )
        key = (y, z) if y < z else (z, y)
        previous = normalized.get(key)
        if previous is not None and previous != value:
            raise CoverValidationError(
                f"asymmetric intersection matrix at ({y!r}, {z!r}): {previous} != {value}",
                y,
            )
        normalized[key] = value

    full: Dict[Tuple[str, str], int] = {}
    for cid, component in by_id.items():
        full[(cid, cid)] = component.self_intersection
    for (y, z), value in normalized.items():
        full[(y, z)] = value
        full[(z, y)] = value
    return IntersectionMatrix(entries=dict(sorted(full.items())))


def validate_cover(c: CoverDatum) -> CoverDatum:
    """Check every structural invariant and return the canonical form of ``c``.

    Components are sorted by id and the intersection matrix is completed to a
    symmetric map with the self-intersections on its diagonal. Validating an
    already validated datum returns an equal datum.
    """

    _check_group(c)
    seen: set[str] = set()
    for component in c.components:
        if component.id in seen:
            raise CoverValidationError(
                f"duplicate component id {component.id!r}", component.id
            )
        seen.add(component.id)
        _check_component(component, c.group_order)

    components = tuple(sorted(c.components, key=lambda comp: comp.id))
    validated = replace(
        c,
        components=components,
        intersections=_normalize_intersections(components, c.intersections),
    )
    if logging_enabled():
        logger.debug(
            "cover_validated",
            group_order=c.group_order,
            residue_prime=c.residue_prime,
            component_count=len(components),
            ramified=[comp.id for comp in components if comp.ramified],
        )
    return validated


def local_exponent(c: CoverDatum, phi: CharacterSpec, y: str) -> int:
    """Return n(phi, y) in [0, e_y)."""

    component = c.component(y)
    if phi.raw is not None:
        unknown = sorted(set(phi.raw) - set(c.component_ids))
        if unknown:
            raise CharacterError(f"raw exponents name unknown components {unknown}")
        if y not in phi.raw:
            if component.e == 1:
                return 0
            raise CharacterError(f"raw character has no exponent at component {y!r}")
        value = phi.raw[y]
        if not 0 <= value < component.e:
            raise CharacterError(
                f"raw exponent {value} at {y!r} outside [0, {component.e})"
            )
        return value
    assert phi.exponent is not None
    return (phi.exponent * component.m) % component.e


def local_exponents(c: CoverDatum, phi: CharacterSpec) -> Dict[str, int]:
    return {cid: local_exponent(c, phi, cid) for cid in c.component_ids}


def conjugate_character(c: CoverDatum, phi: CharacterSpec) -> CharacterSpec:
    """Complex conjugate: local exponents (e_y - n(phi, y)) mod e_y."""

    if phi.exponent is not None:
        return CharacterSpec.from_exponent(-phi.exponent)
    return CharacterSpec.from_raw(
        {
            comp.id: (comp.e - local_exponent(c, phi, comp.id)) % comp.e
            for comp in c.components
        }
    )


def character_power(c: CoverDatum, phi: CharacterSpec, k: int) -> CharacterSpec:
    if phi.exponent is not None:
        return CharacterSpec.from_exponent(k * phi.exponent)
    return CharacterSpec.from_raw(
        {
            comp.id: (k * local_exponent(c, phi, comp.id)) % comp.e
            for comp in c.components
        }
    )


def canonical_degree(c: CoverDatum, y: str) -> int:
    """c_1(omega) . y = -y^2 - 2 chi(y, O_y)."""

    component = c.component(y)
    return -component.self_intersection - 2 * component.chi_struct
