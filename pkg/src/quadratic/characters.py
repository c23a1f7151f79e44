"""Quadratic character sums and the norm map to the real quadratic subfield."""

from __future__ import annotations

from typing import Literal

from sympy import isprime
from sympy.ntheory.residue_ntheory import is_quad_residue as is_quadratic_residue

from src.galois.ring import GaloisRingElement
from src.quadratic.class_group import QuadraticFieldError, require_real_prime

NormBase = Literal["P", "Pbar", "PPbar"]
NORM_BASES = ("P", "Pbar", "PPbar")


class InconclusiveNormError(QuadraticFieldError):
    """Raised when the quadratic subfield is imaginary and the norm test says nothing."""


def quadratic_character(l: int, u: int) -> int:
    """+1 on quadratic residues mod l, -1 on non-residues; 0 on multiples of l."""

    if u % l == 0:
        return 0
    return 1 if is_quadratic_residue(u % l, l) else -1


def t_sum(l: int, i: int) -> int:
    """sum over a < l/2 of chi(a) a^i: residues counted positively, non-residues negatively."""

    require_real_prime(l)
    if i < 0:
        raise QuadraticFieldError(f"power i must be >= 0 (got {i})")
    return sum(quadratic_character(l, a) * a**i for a in range(1, (l + 1) // 2))


def _check_norm_modulus(l: int) -> None:
    if not isprime(l) or l == 2:
        raise QuadraticFieldError(f"modulus must be an odd prime (got {l})")
    if l % 4 == 3:
        raise InconclusiveNormError(
            f"Q(sqrt(-{l})) is imaginary; the norm test is inconclusive for l={l}"
        )


def norm_exponent(x: GaloisRingElement) -> int:
    """Exponent of [beta] in the norm of [P]^x.

    The norm of sigma_u P is beta when u is a square mod l and its conjugate
    otherwise; the conjugate class is [beta]^-1 since beta times its
    conjugate is principal.
    """

    l = x.modulus
    _check_norm_modulus(l)
    if not x.is_integral():
        raise QuadraticFieldError(f"norm exponent needs integral coefficients (got {x!r})")
    total = sum(int(value) * quadratic_character(l, u) for u, value in x.items())
    return int(total)


def norm_exponent_on_base(x: GaloisRingElement, base: NormBase) -> int:
    """Norm exponent of [B]^x for B one of P, its conjugate, or their product."""

    if base == "P":
        return norm_exponent(x)
    if base == "Pbar":
        return norm_exponent(x.conjugate())
    if base == "PPbar":
        return norm_exponent(x + x.conjugate())
    raise QuadraticFieldError(f"unknown base {base!r}; expected one of {NORM_BASES}")
