"""Stickelberger elements, the s_i and b sums, and the identities relating them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Dict, List

import structlog
from sympy import isprime

from src.galois.ring import GaloisRingElement, RingModulusError, inverse_index
from src.observability.logging import logging_enabled

logger = structlog.get_logger(__name__)


def _require_odd_prime(l: int, minimum: int = 3) -> None:
    if l < minimum or not isprime(l):
        raise RingModulusError(f"l must be a prime >= {minimum} (got {l})")


def _fractional_part(x: Fraction) -> Fraction:
    return x - floor(x)


def stickelberger_of_level(l: int, t: int) -> GaloisRingElement:
    """theta at level l^t: sum over units a < l^t of {a / l^t} sigma_a^{-1}."""

    _require_odd_prime(l)
    if t < 1:
        raise RingModulusError(f"level exponent must be >= 1 (got {t})")
    m = l**t
    return GaloisRingElement.from_terms(
        m,
        (
            (inverse_index(m, a), Fraction(a, m))
            for a in range(1, m)
            if a % l != 0
        ),
    )


def stickelberger(l: int) -> GaloisRingElement:
    return stickelberger_of_level(l, 1)


def l_theta(l: int) -> GaloisRingElement:
    """l times theta; integral."""

    return stickelberger(l) * l


def s_sum(l: int, i: int) -> GaloisRingElement:
    """s_i = sum_{1 <= a < l/2} a^i sigma_a^{-1}."""

    _require_odd_prime(l)
    if i < 0:
        raise RingModulusError(f"power i must be >= 0 (got {i})")
    return GaloisRingElement.from_terms(
        l, ((inverse_index(l, a), a**i) for a in range(1, (l + 1) // 2))
    )


def square_weighted_sum(l: int) -> GaloisRingElement:
    """sum_{1 <= a < l} a^2 sigma_a^{-1}."""

    _require_odd_prime(l)
    return GaloisRingElement.from_terms(
        l, ((inverse_index(l, a), a * a) for a in range(1, l))
    )


def _check_b_params(l: int, s: int, t: int, u: int) -> None:
    _require_odd_prime(l)
    if not 1 <= t <= s:
        raise RingModulusError(f"need 1 <= t <= s (got s={s}, t={t})")
    if gcd(u, l) != 1:
        raise RingModulusError(f"u={u} must be prime to l={l}")


def b_sum(l: int, s: int, t: int, u: int) -> GaloisRingElement:
    """sum over units a < l^s of {a u / l^t} sigma_a^{-1}, in modulus l^s."""

    _check_b_params(l, s, t, u)
    m = l**s
    level = l**t
    return GaloisRingElement.from_terms(
        m,
        (
            (inverse_index(m, a), _fractional_part(Fraction(a * u, level)))
            for a in range(1, m)
            if a % l != 0
        ),
    )


def trace_lift(x: GaloisRingElement, l: int, s: int, t: int) -> GaloisRingElement:
    """Map sigma_c at level l^t to sum_{0 <= k < l^(s-t)} sigma_{c + k l^t} at level l^s."""

    level = l**t
    if x.modulus != level:
        raise RingModulusError(f"expected modulus {level}, got {x.modulus}")
    m = l**s
    terms: Dict[int, Fraction] = {}
    for c, value in x.items():
        for k in range(l ** (s - t)):
            key = (c + k * level) % m
            terms[key] = terms.get(key, Fraction(0)) + value
    return GaloisRingElement(m, terms)


def verify_trace_factorization(l: int, s: int, t: int, u: int) -> bool:
    """b_sum(l, s, t, u) == sigma_u * (trace lift of theta at level l^t)."""

    _check_b_params(l, s, t, u)
    lifted = trace_lift(stickelberger_of_level(l, t), l, s, t)
    holds = b_sum(l, s, t, u) == lifted.apply_sigma(u)
    if not holds and logging_enabled():
        logger.info("identity_failed", identity="trace_factorization", l=l, s=s, t=t, u=u)
    return holds


@dataclass(frozen=True)
class StickelbergerIdentityReport:
    l: int
    s0_from_theta: bool
    s1_antisymmetric_part: bool
    square_sum_decomposition: bool
    l_theta_decomposition: bool
    proof_display: bool

    @property
    def passed(self) -> bool:
        return (
            self.s0_from_theta
            and self.s1_antisymmetric_part
            and self.square_sum_decomposition
        )

    def as_dict(self) -> Dict[str, object]:
        return {
            "l": self.l,
            "s0_from_theta": self.s0_from_theta,
            "s1_antisymmetric_part": self.s1_antisymmetric_part,
            "square_sum_decomposition": self.square_sum_decomposition,
            "l_theta_decomposition": self.l_theta_decomposition,
            "proof_display": self.proof_display,
        }


def verify_stickelberger_identities(l: int) -> StickelbergerIdentityReport:
    """Check the three s_i identities symbolically at the prime l >= 5.

    ``proof_display`` records whether 2 sigma_2^{-1} theta equals
    theta + sigma_{(l-1)/2}^{-1} s_0. It is informational: the three
    stated identities do not depend on it, and it fails at l = 5.
    """

    _require_odd_prime(l, minimum=5)
    one = GaloisRingElement.one(l)
    sigma_minus_one = GaloisRingElement.sigma(l, l - 1)
    theta = stickelberger(l)
    ltheta = theta * l
    s0, s1, s2 = (s_sum(l, i) for i in range(3))
    half_down_inv = GaloisRingElement.sigma_inverse(l, (l - 1) // 2)
    half_up_inv = GaloisRingElement.sigma_inverse(l, (l + 1) // 2)

    first = s0 == (sigma_minus_one * 2 - half_down_inv) * theta
    second = (one - sigma_minus_one) * s1 == (half_up_inv - one) * ltheta
    third = square_weighted_sum(l) == (one + sigma_minus_one) * s2 + (
        sigma_minus_one * (s0 * l - s1 * 2)
    ) * l
    auxiliary = ltheta == (one - sigma_minus_one) * s1 + sigma_minus_one * s0 * l
    display = (
        GaloisRingElement.sigma_inverse(l, 2) * theta * 2
        == theta + half_down_inv * s0
    )
    report = StickelbergerIdentityReport(
        l=l,
        s0_from_theta=first,
        s1_antisymmetric_part=second,
        square_sum_decomposition=third,
        l_theta_decomposition=auxiliary,
        proof_display=display,
    )
    if not report.passed and logging_enabled():
        logger.info("identity_failed", identity="stickelberger", **report.as_dict())
    return report


def stickelberger_suite(low: int, high: int) -> List[StickelbergerIdentityReport]:
    """Reports for every prime l with max(low, 5) <= l <= high."""

    return [
        verify_stickelberger_identities(l)
        for l in range(max(low, 5), high + 1)
        if isprime(l)
    ]
