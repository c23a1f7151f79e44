"""Narrow and wide class groups of real quadratic fields via reduced form cycles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import structlog
from sympy import isprime, sqrt_mod
from sympy.ntheory.residue_ntheory import is_quad_residue as is_quadratic_residue
from sympy.ntheory.continued_fraction import continued_fraction_periodic
from sympy.solvers.diophantine.diophantine import diop_DN

from src.observability.logging import logging_enabled
from src.quadratic.forms import (
    IndefiniteForm,
    check_discriminant,
    compose,
    cycle,
    principal_form,
    reduced_forms,
)

logger = structlog.get_logger(__name__)


class QuadraticFieldError(ValueError):
    """Raised for fields or primes outside the supported cases."""


@dataclass(frozen=True)
class FormClass:
    """A narrow class, identified by its cycle of reduced forms.

    ``form`` is the smallest form of the cycle and ``cycle`` starts there,
    so two instances compare equal exactly when their cycles coincide.
    """

    discriminant: int
    form: IndefiniteForm
    cycle: Tuple[IndefiniteForm, ...]


@dataclass(frozen=True)
class ClassGroupSummary:
    l: int
    narrow_class_number: int
    wide_class_number: int
    fundamental_unit_norm: int
    period_length: int


def form_class(f: IndefiniteForm) -> FormClass:
    forms = cycle(f)
    start = forms.index(min(forms))
    rotated = forms[start:] + forms[:start]
    return FormClass(discriminant=f.discriminant, form=rotated[0], cycle=rotated)


def _continued_fraction_period(D: int) -> List[int]:
    expansion = continued_fraction_periodic(1, 2, D)
    period = expansion[-1]
    if not isinstance(period, list):
        raise QuadraticFieldError(f"no periodic expansion for (1 + sqrt({D}))/2")
    return period


@lru_cache(maxsize=64)
def narrow_classes(D: int) -> Tuple[FormClass, ...]:
    """Partition of the reduced forms of discriminant D into cycles."""

    remaining = set(reduced_forms(D))
    classes: List[FormClass] = []
    while remaining:
        fc = form_class(min(remaining))
        remaining.difference_update(fc.cycle)
        classes.append(fc)
    return tuple(sorted(classes, key=lambda item: item.form))


@lru_cache(maxsize=64)
def class_group_of_discriminant(D: int) -> ClassGroupSummary:
    check_discriminant(D)
    narrow = len(narrow_classes(D))
    period = _continued_fraction_period(D)
    unit_norm = -1 if len(period) % 2 == 1 else 1
    wide = narrow if unit_norm == -1 else narrow // 2
    if logging_enabled():
        logger.info(
            "class_group_computed",
            discriminant=D,
            narrow_class_number=narrow,
            wide_class_number=wide,
            fundamental_unit_norm=unit_norm,
            period_length=len(period),
        )
    return ClassGroupSummary(
        l=D,
        narrow_class_number=narrow,
        wide_class_number=wide,
        fundamental_unit_norm=unit_norm,
        period_length=len(period),
    )


def require_real_prime(l: int) -> None:
    if not isprime(l):
        raise QuadraticFieldError(f"l must be prime (got {l})")
    if l % 4 != 1:
        raise QuadraticFieldError(f"l must be 1 mod 4 for a real quadratic subfield (got {l})")


def class_group(l: int) -> ClassGroupSummary:
    require_real_prime(l)
    return class_group_of_discriminant(l)


def principal_class(D: int) -> FormClass:
    return form_class(principal_form(D))


def split_prime_class(l: int, p: int) -> FormClass:
    """Class of the form (p, b, c), b^2 = l (mod 4p): a degree-one prime above p."""

    require_real_prime(l)
    if not isprime(p) or p == l:
        raise QuadraticFieldError(f"p must be a prime different from l (got {p})")
    if p == 2:
        if l % 8 != 1:
            raise QuadraticFieldError(f"2 does not split in Q(sqrt({l}))")
        b = 1
    else:
        if not is_quadratic_residue(l % p, p):
            raise QuadraticFieldError(f"{p} does not split in Q(sqrt({l}))")
        root = int(sqrt_mod(l, p))
        b = root if root % 2 == 1 else root + p
    c, remainder = divmod(b * b - l, 4 * p)
    if remainder:
        raise QuadraticFieldError(f"no form (p, b, c) of discriminant {l} for p={p}")
    return form_class(IndefiniteForm(p, b, c))


def compose_classes(x: FormClass, y: FormClass) -> FormClass:
    return form_class(compose(x.form, y.form))


def conjugate_class(x: FormClass) -> FormClass:
    return form_class(x.form.opposite())


def is_principal(fc: FormClass) -> bool:
    """Principal in the wide sense: fc or fc times the class of (-1, b, c) is the principal cycle."""

    principal = principal_class(fc.discriminant)
    if fc == principal:
        return True
    summary = class_group_of_discriminant(fc.discriminant)
    if summary.fundamental_unit_norm == 1:
        return form_class(fc.form.negate()) == principal
    return False


def class_order(fc: FormClass) -> int:
    """Order of fc in the wide class group."""

    bound = class_group_of_discriminant(fc.discriminant).narrow_class_number
    current = fc
    for order in range(1, bound + 1):
        if is_principal(current):
            return order
        current = compose_classes(current, fc)
    raise QuadraticFieldError(f"class of {fc.form.as_tuple()} has no finite order <= {bound}")


def represents_norm(l: int, p: int) -> bool:
    """Whether x^2 - l y^2 = 4p or -4p has an integer solution."""

    return bool(diop_DN(l, 4 * p)) or bool(diop_DN(l, -4 * p))
