"""Cyclic covers between quotients of the modular curve X_1(p) and their class obstructions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

import structlog
from sympy import isprime

from src.cover.model import (
    CharacterSpec,
    CoverDatum,
    FiberComponent,
    IntersectionMatrix,
    validate_cover,
)
from src.galois.ring import GaloisRingElement, inverse_index
from src.galois.stickelberger import s_sum
from src.intersection.exponents import exponent_vector
from src.intersection.forms import t_invariant
from src.observability.logging import logging_enabled
from src.quadratic.characters import (
    NormBase,
    norm_exponent,
    norm_exponent_on_base,
    t_sum,
)
from src.quadratic.class_group import (
    ClassGroupSummary,
    class_group,
    class_order,
    split_prime_class,
)
from src.resolvent.calculus import CANONICAL, CANONICAL_HALF, STRUCTURE, SheafSpec

logger = structlog.get_logger(__name__)

RAMIFIED_COMPONENT = "y0"
UNRAMIFIED_COMPONENT = "yinf"

CLASS_NAMES: Tuple[str, ...] = ("V", "omega_half", "structure")


class ModularParamsError(ValueError):
    """Raised when (p, l) does not describe a cover in the modular family."""


@dataclass(frozen=True)
class ModularParams:
    """p = 1 (mod 24) prime and l > 3 a prime divisor of p - 1."""

    p: int
    l: int

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise ModularParamsError(f"p must be prime (got {self.p})")
        if self.p % 24 != 1:
            raise ModularParamsError(f"p must be 1 mod 24 (got {self.p})")
        if self.l <= 3 or not isprime(self.l):
            raise ModularParamsError(f"l must be a prime > 3 (got {self.l})")
        if (self.p - 1) % self.l != 0:
            raise ModularParamsError(f"l={self.l} does not divide p - 1 = {self.p - 1}")

    @property
    def cusp_intersection(self) -> int:
        """y0 . yinf = (p - 1)/12."""

        return (self.p - 1) // 12

    def scale(self, divisor: int) -> int:
        """(p - 1)/(divisor * l), which must be an integer."""

        quotient, remainder = divmod(self.p - 1, divisor * self.l)
        if remainder:
            raise ModularParamsError(
                f"{divisor}l = {divisor * self.l} does not divide p - 1 = {self.p - 1}"
            )
        return quotient


def build_cover(mp: ModularParams) -> CoverDatum:
    """Two P^1 components meeting in (p - 1)/12 points; totally ramified over y0 only."""

    meet = mp.cusp_intersection
    components = (
        FiberComponent(
            id=RAMIFIED_COMPONENT, e=mp.l, m=1, self_intersection=-meet, chi_struct=1
        ),
        FiberComponent(
            id=UNRAMIFIED_COMPONENT, e=1, m=0, self_intersection=-meet, chi_struct=1
        ),
    )
    return validate_cover(
        CoverDatum(
            group_order=mp.l,
            components=components,
            intersections=IntersectionMatrix(
                {(RAMIFIED_COMPONENT, UNRAMIFIED_COMPONENT): meet}
            ),
            residue_prime=mp.p,
        )
    )


def t_closed_form(mp: ModularParams, a: int) -> Fraction:
    """T(O_X, psi^a) = -((p-1)/(12l) a^2 + (2 - (p-1)/12) a) / l."""

    if not 1 <= a < mp.l:
        raise ModularParamsError(f"character exponent a={a} outside [1, {mp.l})")
    quadratic = Fraction(mp.p - 1, 12 * mp.l) * a * a
    linear = (2 - Fraction(mp.p - 1, 12)) * a
    return -(quadratic + linear) / mp.l


def _scaled_t_vector(c: CoverDatum, s: SheafSpec) -> GaloisRingElement:
    """sum over a of -l T(F, psi^a) sigma_a^{-1}."""

    l = c.group_order
    return GaloisRingElement.from_terms(
        l,
        (
            (
                inverse_index(l, a),
                -l * t_invariant(c, s, CharacterSpec.from_exponent(a)).value,
            )
            for a in range(1, l)
        ),
    )


@dataclass(frozen=True)
class Representation:
    """A class written as a product of [B]^x over (base, x) factors."""

    name: str
    factors: Tuple[Tuple[NormBase, GaloisRingElement], ...]

    def norm_exponent(self) -> int:
        return sum(norm_exponent_on_base(x, base) for base, x in self.factors)


@dataclass(frozen=True)
class ModularExponents:
    """Every representation computed for the three classes of one modular cover."""

    scale_6l: int
    scale_12l: int
    raw_v: GaloisRingElement
    simplified_v: GaloisRingElement
    raw_v_matches_simplified: bool
    raw_v_support_upper_half: bool
    representations: Dict[str, Tuple[Representation, ...]]

    def theorem(self, name: str) -> GaloisRingElement:
        for rep in self.representations[name]:
            if rep.name == "theorem":
                return rep.factors[0][1]
        raise KeyError(name)


def modular_class_exponents(mp: ModularParams) -> ModularExponents:
    """Exponent elements for V, 2l chi(omega^1/2) and 2l chi(O_X).

    The V class is built twice: from the T invariants of the cover and from
    the closed form sigma_{-1}((p-1)/(6l) s_1 - 2 s_0). The theorem exponents
    are on the base [P Pbar]; everything else is on [P] or [Pbar].
    """

    cover = build_cover(mp)
    l = mp.l
    k6 = mp.scale(6)
    k12 = mp.scale(12)
    s0, s1, s2 = (s_sum(l, i) for i in range(3))

    raw_v_vector = exponent_vector(cover, CANONICAL_HALF)
    raw_v = raw_v_vector.as_ring_element()
    simplified_inner = s1 * k6 - s0 * 2
    simplified_v = simplified_inner.conjugate()
    upper_half = all(2 * a > l for a in raw_v_vector.support())

    raw_omega_half = _scaled_t_vector(cover, CANONICAL_HALF)
    raw_structure = _scaled_t_vector(cover, STRUCTURE)

    representations = {
        "V": (
            Representation("raw", (("P", raw_v),)),
            Representation("conjugate_display", (("Pbar", simplified_inner),)),
            Representation("s0_annihilated", (("P", s1 * k6),)),
            Representation("theorem", (("PPbar", s1 * k12),)),
        ),
        "omega_half": (
            Representation("raw", (("P", raw_omega_half),)),
            Representation("theorem", (("PPbar", s2 * k12),)),
        ),
        "structure": (
            Representation("raw", (("P", raw_structure),)),
            Representation("theorem", (("PPbar", (s2 - s1 * l) * k12),)),
            Representation(
                "alternative_display",
                (("PPbar", s2 * k12), ("Pbar", s1 * -((mp.p - 1) // 6))),
            ),
        ),
    }
    matches = raw_v == simplified_v
    if logging_enabled():
        logger.info(
            "modular_exponents_computed",
            p=mp.p,
            l=l,
            raw_v_matches_simplified=matches,
            raw_v_support_upper_half=upper_half,
        )
    return ModularExponents(
        scale_6l=k6,
        scale_12l=k12,
        raw_v=raw_v,
        simplified_v=simplified_v,
        raw_v_matches_simplified=matches,
        raw_v_support_upper_half=upper_half,
        representations=representations,
    )


@dataclass(frozen=True)
class ClassVerdict:
    name: str
    norm_exponents: Dict[str, int]
    expected_norm_exponent: Optional[int]
    norms_agree: bool
    verdict: str


@dataclass(frozen=True)
class ClassReport:
    params: ModularParams
    exponents: ModularExponents
    class_group: Optional[ClassGroupSummary]
    t1: Optional[int]
    t2: Optional[int]
    beta_form: Optional[Tuple[int, int, int]]
    beta_principal: Optional[bool]
    beta_order: Optional[int]
    classes: Tuple[ClassVerdict, ...]
    canonical_norm_shadow: Optional[int]

    @property
    def non_trivial_count(self) -> int:
        return sum(1 for entry in self.classes if entry.verdict == "non_trivial")


def _inconclusive_report(mp: ModularParams, exponents: ModularExponents) -> ClassReport:
    classes = tuple(
        ClassVerdict(
            name=name,
            norm_exponents={},
            expected_norm_exponent=None,
            norms_agree=True,
            verdict="inconclusive",
        )
        for name in CLASS_NAMES
    )
    return ClassReport(
        params=mp,
        exponents=exponents,
        class_group=None,
        t1=None,
        t2=None,
        beta_form=None,
        beta_principal=None,
        beta_order=None,
        classes=classes,
        canonical_norm_shadow=None,
    )


def norm_report(mp: ModularParams) -> ClassReport:
    """Norm images in Cl(Q(sqrt(l))) of the three classes, with triviality verdicts.

    Verdicts speak about norm images only. When l = 3 (mod 4) the subfield is
    imaginary and every verdict is ``inconclusive``.
    """

    exponents = modular_class_exponents(mp)
    l = mp.l
    if l % 4 == 3:
        if logging_enabled():
            logger.info("norm_test_inconclusive", p=mp.p, l=l)
        return _inconclusive_report(mp, exponents)

    summary = class_group(l)
    t1, t2 = t_sum(l, 1), t_sum(l, 2)
    expected = {
        "V": exponents.scale_6l * t1,
        "omega_half": exponents.scale_6l * t2,
        "structure": exponents.scale_6l * (t2 - l * t1),
    }

    beta = split_prime_class(l, mp.p)
    if summary.wide_class_number == 1:
        order = 1
    else:
        order = class_order(beta)

    classes = []
    for name in CLASS_NAMES:
        norms = {rep.name: rep.norm_exponent() for rep in exponents.representations[name]}
        agree = all(value == expected[name] for value in norms.values())
        value = norms["theorem"]
        verdict = "trivial" if order == 1 or value % order == 0 else "non_trivial"
        if not agree and logging_enabled():
            logger.info("norm_disagreement", p=mp.p, l=l, class_name=name, norms=norms)
        classes.append(
            ClassVerdict(
                name=name,
                norm_exponents=norms,
                expected_norm_exponent=expected[name],
                norms_agree=agree,
                verdict=verdict,
            )
        )

    shadow = norm_exponent(exponent_vector(build_cover(mp), CANONICAL).as_ring_element())
    report = ClassReport(
        params=mp,
        exponents=exponents,
        class_group=summary,
        t1=t1,
        t2=t2,
        beta_form=beta.form.as_tuple(),
        beta_principal=order == 1,
        beta_order=order,
        classes=tuple(classes),
        canonical_norm_shadow=shadow,
    )
    if logging_enabled():
        logger.info(
            "norm_report_computed",
            p=mp.p,
            l=l,
            wide_class_number=summary.wide_class_number,
            beta_order=order,
            verdicts=[entry.verdict for entry in classes],
        )
    return report

