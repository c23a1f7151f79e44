"""Indefinite binary quadratic forms: reduction, cycles and composition."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import List, Tuple

from sympy import divisors
from sympy.core.intfunc import igcdex


class FormError(ValueError):
    """Raised for forms outside the supported discriminants."""


@dataclass(frozen=True, order=True)
class IndefiniteForm:
    """a x^2 + b x y + c y^2 with positive non-square discriminant."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def negate(self) -> "IndefiniteForm":
        """(-a, b, -c): composition with the principal form's negative."""

        return IndefiniteForm(-self.a, self.b, -self.c)

    def opposite(self) -> "IndefiniteForm":
        """(a, -b, c): the inverse class."""

        return IndefiniteForm(self.a, -self.b, self.c)


def check_discriminant(D: int) -> None:
    if D <= 0 or D % 4 != 1:
        raise FormError(f"discriminant must be positive and 1 mod 4 (got {D})")
    root = isqrt(D)
    if root * root == D:
        raise FormError(f"discriminant {D} is a perfect square")


def is_reduced(f: IndefiniteForm) -> bool:
    """|sqrt(D) - 2|a|| < b < sqrt(D), tested in integers."""

    D = f.discriminant
    b = f.b
    twice_a = 2 * abs(f.a)
    if b <= 0 or b * b >= D:
        return False
    if (twice_a + b) ** 2 <= D:
        return False
    low = twice_a - b
    return low <= 0 or low * low < D


def _normalizer(b: int, c: int, D: int) -> int:
    """The r = b (mod 2|c|) used by one reduction step."""

    modulus = 2 * abs(c)
    if c * c < D:
        root = isqrt(D)
        return root - ((root - b) % modulus)
    r = b % modulus
    if r > abs(c):
        r -= modulus
    return r


def rho(f: IndefiniteForm) -> IndefiniteForm:
    """One reduction step; properly equivalent to f, and a permutation of the reduced forms."""

    D = f.discriminant
    r = _normalizer(-f.b, f.c, D)
    return IndefiniteForm(f.c, r, (r * r - D) // (4 * f.c))


def reduce_form(f: IndefiniteForm) -> IndefiniteForm:
    D = f.discriminant
    check_discriminant(D)
    steps = 0
    limit = 64 * (max(abs(f.a), abs(f.b), abs(f.c), D).bit_length() + 8)
    while not is_reduced(f):
        f = rho(f)
        steps += 1
        if steps > limit:
            raise FormError(f"reduction did not terminate for {f.as_tuple()}")
    return f


def cycle(f: IndefiniteForm) -> Tuple[IndefiniteForm, ...]:
    """The rho-orbit of the reduced form equivalent to f."""

    start = reduce_form(f)
    forms: List[IndefiniteForm] = [start]
    current = rho(start)
    while current != start:
        forms.append(current)
        current = rho(current)
    return tuple(forms)


def reduced_forms(D: int) -> List[IndefiniteForm]:
    """Every reduced form of discriminant D, in (a, b, c) order."""

    check_discriminant(D)
    root = isqrt(D)
    found: List[IndefiniteForm] = []
    for b in range(1, root + 1, 2):
        product = (D - b * b) // 4
        for d in divisors(product):
            for a in (d, -d):
                candidate = IndefiniteForm(int(a), b, int(-product // a))
                if is_reduced(candidate):
                    found.append(candidate)
    return sorted(found)


def principal_form(D: int) -> IndefiniteForm:
    check_discriminant(D)
    return reduce_form(IndefiniteForm(1, 1, (1 - D) // 4))


def _positive_leading(f: IndefiniteForm) -> IndefiniteForm:
    f = reduce_form(f)
    if f.a < 0:
        # reduced forms have ac < 0, so one step moves c > 0 into front
        f = rho(f)
    return f


def compose(f: IndefiniteForm, g: IndefiniteForm) -> IndefiniteForm:
    """Gauss composition of two primitive forms, reduced."""

    D = f.discriminant
    if g.discriminant != D:
        raise FormError(f"discriminants differ: {D} != {g.discriminant}")
    f = _positive_leading(f)
    g = _positive_leading(g)
    a1, b1 = f.a, f.b
    a2, b2, c2 = g.a, g.b, g.c
    s = (b1 + b2) // 2
    _, y, d0 = igcdex(a1, a2)
    p, q, d = igcdex(d0, s)
    # p*x*a1 + p*y*a2 + q*s = d = gcd(a1, a2, s)
    v, w = p * y, q
    a3 = a1 * a2 // (d * d)
    b3 = b2 + 2 * (a2 // d) * (v * (s - b2) - w * c2)
    numerator = b3 * b3 - D
    if numerator % (4 * a3) != 0:
        raise FormError(
            f"composition of {f.as_tuple()} and {g.as_tuple()} is not integral"
        )
    return reduce_form(IndefiniteForm(a3, b3, numerator // (4 * a3)))
