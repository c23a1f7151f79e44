"""Exact arithmetic in the rational group ring of (Z/m)^x."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Scalar = Union[int, Fraction]


class RingModulusError(ValueError):
    """Raised on mismatched moduli or non-unit indices."""


def inverse_index(modulus: int, u: int) -> int:
    if gcd(u, modulus) != 1:
        raise RingModulusError(f"index {u} is not a unit modulo {modulus}")
    if modulus == 1:
        return 0
    return pow(u, -1, modulus)


class GaloisRingElement:
    """Element sum_u c_u sigma_u with sigma_u sigma_v = sigma_{uv mod m}.

    Coefficients are stored reduced: indices in [0, m), units only, zero
    coefficients dropped. Instances are immutable and hashable.
    """

    __slots__ = ("_modulus", "_coeffs")

    def __init__(self, modulus: int, coeffs: Mapping[int, Scalar] | None = None):
        if modulus < 1:
            raise RingModulusError(f"modulus must be positive (got {modulus})")
        normalized: Dict[int, Fraction] = {}
        for index, value in (coeffs or {}).items():
            key = index % modulus
            if gcd(key, modulus) != 1:
                raise RingModulusError(f"index {index} is not a unit modulo {modulus}")
            normalized[key] = normalized.get(key, Fraction(0)) + Fraction(value)
        self._modulus = modulus
        self._coeffs = {k: v for k, v in sorted(normalized.items()) if v != 0}

    @classmethod
    def from_terms(
        cls, modulus: int, terms: Iterable[Tuple[int, Scalar]]
    ) -> "GaloisRingElement":
        accumulated: Dict[int, Fraction] = {}
        for index, value in terms:
            key = index % modulus
            accumulated[key] = accumulated.get(key, Fraction(0)) + Fraction(value)
        return cls(modulus, accumulated)

    @classmethod
    def zero(cls, modulus: int) -> "GaloisRingElement":
        return cls(modulus)

    @classmethod
    def one(cls, modulus: int) -> "GaloisRingElement":
        return cls(modulus, {1: 1})

    @classmethod
    def sigma(cls, modulus: int, u: int) -> "GaloisRingElement":
        return cls(modulus, {u: 1})

    @classmethod
    def sigma_inverse(cls, modulus: int, u: int) -> "GaloisRingElement":
        return cls(modulus, {inverse_index(modulus, u): 1})

    @classmethod
    def norm_element(cls, modulus: int) -> "GaloisRingElement":
        return cls(modulus, {u: 1 for u in range(modulus) if gcd(u, modulus) == 1})

    @property
    def modulus(self) -> int:
        return self._modulus

    def coefficient(self, u: int) -> Fraction:
        return self._coeffs.get(u % self._modulus, Fraction(0))

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._coeffs.items())

    def support(self) -> Tuple[int, ...]:
        return tuple(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_integral(self) -> bool:
        return all(value.denominator == 1 for value in self._coeffs.values())

    def augmentation(self) -> Fraction:
        return sum(self._coeffs.values(), Fraction(0))

    def _check(self, other: "GaloisRingElement") -> None:
        if other._modulus != self._modulus:
            raise RingModulusError(
                f"modulus mismatch: {self._modulus} != {other._modulus}"
            )

    def __add__(self, other: "GaloisRingElement") -> "GaloisRingElement":
        if not isinstance(other, GaloisRingElement):
            return NotImplemented
        self._check(other)
        merged = dict(self._coeffs)
        for key, value in other._coeffs.items():
            merged[key] = merged.get(key, Fraction(0)) + value
        return GaloisRingElement(self._modulus, merged)

    def __neg__(self) -> "GaloisRingElement":
        return GaloisRingElement(self._modulus, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "GaloisRingElement") -> "GaloisRingElement":
        if not isinstance(other, GaloisRingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "GaloisRingElement":
        if isinstance(other, (int, Fraction)):
            return GaloisRingElement(
                self._modulus, {k: v * other for k, v in self._coeffs.items()}
            )
        if not isinstance(other, GaloisRingElement):
            return NotImplemented
        self._check(other)
        m = self._modulus
        product: Dict[int, Fraction] = {}
        for u, cu in self._coeffs.items():
            for v, cv in other._coeffs.items():
                key = (u * v) % m
                product[key] = product.get(key, Fraction(0)) + cu * cv
        return GaloisRingElement(m, product)

    def __rmul__(self, other: object) -> "GaloisRingElement":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def apply_sigma(self, u: int) -> "GaloisRingElement":
        m = self._modulus
        if gcd(u, m) != 1:
            raise RingModulusError(f"index {u} is not a unit modulo {m}")
        return GaloisRingElement(m, {(u * k) % m: v for k, v in self._coeffs.items()})

    def conjugate(self) -> "GaloisRingElement":
        """Multiply by sigma_{-1}."""

        return self.apply_sigma(self._modulus - 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaloisRingElement):
            return NotImplemented
        return self._modulus == other._modulus and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._modulus, tuple(self._coeffs.items())))

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"GaloisRingElement({self._modulus}, 0)"
        terms = " + ".join(f"({v})s{k}" for k, v in self._coeffs.items())
        return f"GaloisRingElement({self._modulus}, {terms})"


def add(x: GaloisRingElement, y: GaloisRingElement) -> GaloisRingElement:
    return x + y


def mul(x: GaloisRingElement, y: GaloisRingElement) -> GaloisRingElement:
    return x * y


def scalar(c: Scalar, x: GaloisRingElement) -> GaloisRingElement:
    return x * c


def apply_sigma(u: int, x: GaloisRingElement) -> GaloisRingElement:
    return x.apply_sigma(u)
