from __future__ import annotations

import pytest

from src.galois.ring import GaloisRingElement, RingModulusError
from src.intersection.exponents import (
    ExponentVector,
    aggregate_exponent_vectors,
    canonical_decomposition,
    exponent_vector,
    twisted_exponent_vector,
)
from src.modular.family import ModularParams, build_cover
from src.resolvent.calculus import CANONICAL, CANONICAL_HALF, STRUCTURE


def test_half_vector_at_241() -> None:
    vector = exponent_vector(build_cover(ModularParams(p=241, l=5)), CANONICAL_HALF)
    assert dict(vector.coeffs) == {1: 0, 2: 0, 3: 14, 4: 6}
    assert vector.support() == [3, 4]
    assert vector.as_ring_element() == GaloisRingElement(5, {2: 14, 4: 6})


def test_canonical_vector_at_241() -> None:
    vector = exponent_vector(build_cover(ModularParams(p=241, l=5)), CANONICAL)
    assert dict(vector.coeffs) == {a: 38 - 8 * a for a in range(1, 5)}


def test_structure_vector_is_zero() -> None:
    vector = exponent_vector(build_cover(ModularParams(p=241, l=5)), STRUCTURE)
    assert vector.support() == []
    assert vector.as_ring_element().is_zero()


def test_half_support_matches_strict_half_support() -> None:
    for p, l in ((241, 5), (337, 7), (313, 13)):
        vector = exponent_vector(build_cover(ModularParams(p=p, l=l)), CANONICAL_HALF)
        assert vector.support() == [a for a in range(1, l) if 2 * a > l]


def test_twisted_vector_sign_convention() -> None:
    cover = build_cover(ModularParams(p=241, l=5))
    twisted = twisted_exponent_vector(cover, CANONICAL_HALF)
    assert twisted.base == "P~"
    assert twisted.coeffs[3] == -4
    assert twisted.coeffs[1] == 0


def test_canonical_decomposition_is_consistent() -> None:
    decomposition = canonical_decomposition(build_cover(ModularParams(p=241, l=5)))
    assert decomposition.consistent
    assert all(value == -38 for value in decomposition.u_part.values())
    assert dict(decomposition.h_part) == {a: 8 * a for a in range(1, 5)}
    assert decomposition.alpha.modulus == 5


def test_aggregation_sums_covers_over_the_same_prime() -> None:
    cover = build_cover(ModularParams(p=241, l=5))
    other = build_cover(ModularParams(p=601, l=5))
    aggregated = aggregate_exponent_vectors([cover, cover, other], CANONICAL_HALF)
    assert sorted(aggregated) == [241, 601]
    assert aggregated[241].coeffs[3] == 28
    with pytest.raises(ValueError, match="group order"):
        aggregate_exponent_vectors([cover, build_cover(ModularParams(p=337, l=7))], CANONICAL)


def test_non_unit_index_with_weight_rejected() -> None:
    vector = ExponentVector(group_order=9, residue_prime=7, coeffs={3: 1})
    with pytest.raises(RingModulusError, match="not a unit"):
        vector.as_ring_element()
