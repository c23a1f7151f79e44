from __future__ import annotations

import pytest

from src.cover.model import (
    CharacterError,
    CharacterSpec,
    CoverDatum,
    CoverValidationError,
    FiberComponent,
    IntersectionMatrix,
    canonical_degree,
    conjugate_character,
    local_exponent,
    validate_cover,
)
from src.modular.family import ModularParams, build_cover


def _cover(n: int, components, entries=None, residue_prime: int = 7) -> CoverDatum:
    return CoverDatum(
        group_order=n,
        components=tuple(components),
        intersections=IntersectionMatrix(entries or {}),
        residue_prime=residue_prime,
    )


def test_modular_cover_at_241_is_valid() -> None:
    cover = build_cover(ModularParams(p=241, l=5))

    y0 = cover.component("y0")
    yinf = cover.component("yinf")
    assert (y0.e, y0.m, y0.self_intersection, y0.chi_struct) == (5, 1, -20, 1)
    assert (yinf.e, yinf.self_intersection, yinf.chi_struct) == (1, -20, 1)
    assert cover.intersections.get("y0", "yinf") == 20
    assert cover.intersections.get("yinf", "y0") == 20
    assert cover.intersections.get("y0", "y0") == -20


def test_even_group_order_rejected() -> None:
    with pytest.raises(CoverValidationError, match="even group order"):
        validate_cover(_cover(4, [FiberComponent("y", 1, 0, -1, 1)]))


def test_inertia_exponent_must_be_a_unit() -> None:
    with pytest.raises(CoverValidationError, match="inertia exponent not a unit") as info:
        validate_cover(_cover(9, [FiberComponent("y", 9, 3, -1, 1)]))
    assert info.value.component_id == "y"


def test_residue_prime_dividing_order_is_not_tame() -> None:
    with pytest.raises(CoverValidationError, match="not tame"):
        validate_cover(_cover(15, [FiberComponent("y", 5, 1, -1, 1)], residue_prime=3))


def test_ramification_index_must_divide_order() -> None:
    with pytest.raises(CoverValidationError, match="does not divide"):
        validate_cover(_cover(15, [FiberComponent("y", 7, 1, -1, 1)]))


def test_unknown_and_asymmetric_intersections_rejected() -> None:
    components = [FiberComponent("a", 5, 1, -2, 1), FiberComponent("b", 1, 0, -2, 1)]
    with pytest.raises(CoverValidationError, match="unknown component id"):
        validate_cover(_cover(5, components, {("a", "c"): 1}))
    with pytest.raises(CoverValidationError, match="asymmetric"):
        validate_cover(_cover(5, components, {("a", "b"): 1, ("b", "a"): 2}))
    with pytest.raises(CoverValidationError, match="negative intersection"):
        validate_cover(_cover(5, components, {("a", "b"): -1}))
    with pytest.raises(CoverValidationError, match="diagonal entry"):
        validate_cover(_cover(5, components, {("a", "a"): 3}))


def test_duplicate_ids_rejected() -> None:
    components = [FiberComponent("a", 5, 1, -2, 1), FiberComponent("a", 5, 2, -2, 1)]
    with pytest.raises(CoverValidationError, match="duplicate"):
        validate_cover(_cover(5, components))


def test_validate_cover_is_idempotent() -> None:
    raw = _cover(
        15,
        [FiberComponent("z", 5, 2, -3, 1), FiberComponent("a", 3, 1, -4, 0)],
        {("z", "a"): 2},
    )
    once = validate_cover(raw)
    assert validate_cover(once) == once
    assert once.component_ids == ("a", "z")


def test_local_exponent_examples() -> None:
    cover = validate_cover(
        _cover(5, [FiberComponent("u", 5, 1, -1, 1), FiberComponent("v", 5, 2, -1, 1)])
    )
    assert local_exponent(cover, CharacterSpec.from_exponent(3), "u") == 3
    assert local_exponent(cover, CharacterSpec.from_exponent(4), "v") == 3
    assert local_exponent(cover, CharacterSpec.from_exponent(0), "v") == 0


def test_local_exponents_of_conjugates_sum_to_zero_or_e() -> None:
    cover = validate_cover(
        _cover(
            45,
            [
                FiberComponent("a", 9, 2, -3, 1),
                FiberComponent("b", 5, 3, -2, 0),
                FiberComponent("c", 15, 7, -1, 1),
            ],
        )
    )
    for a in range(45):
        phi = CharacterSpec.from_exponent(a)
        phi_bar = conjugate_character(cover, phi)
        for comp in cover.components:
            total = local_exponent(cover, phi, comp.id) + local_exponent(cover, phi_bar, comp.id)
            expected = 0 if (a * comp.m) % comp.e == 0 else comp.e
            assert total == expected


def test_raw_character_range_checked() -> None:
    cover = validate_cover(_cover(5, [FiberComponent("u", 5, 1, -1, 1)]))
    with pytest.raises(CharacterError, match="outside"):
        local_exponent(cover, CharacterSpec.from_raw({"u": 5}), "u")
    with pytest.raises(CharacterError, match="exactly one"):
        CharacterSpec()


def test_raw_character_rejects_unknown_components() -> None:
    cover = validate_cover(
        _cover(5, [FiberComponent("u", 5, 1, -1, 1), FiberComponent("w", 1, 0, -2, 1)])
    )
    stray = CharacterSpec.from_raw({"u": 2, "y9": 2})
    with pytest.raises(CharacterError, match="y9"):
        local_exponent(cover, stray, "u")
    with pytest.raises(CharacterError, match="unknown components"):
        local_exponent(cover, stray, "w")
    assert local_exponent(cover, CharacterSpec.from_raw({"u": 2}), "w") == 0


def test_canonical_degree_examples() -> None:
    cover = validate_cover(
        _cover(
            1,
            [FiberComponent("a", 1, 0, -20, 1), FiberComponent("b", 1, 0, 0, 0)],
        )
    )
    assert canonical_degree(cover, "a") == 18
    assert canonical_degree(cover, "b") == 0

    flagship = build_cover(ModularParams(p=182857, l=401))
    assert flagship.component("y0").self_intersection == -15238
    assert canonical_degree(flagship, "y0") == 15236
