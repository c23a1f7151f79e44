from __future__ import annotations

import random

from hypothesis import given, settings, strategies as st

from src.cover.model import CharacterSpec
from src.modular.family import ModularParams, build_cover
from src.resolvent.identities import (
    random_character,
    random_cover,
    run_conjugate_suite,
    verify_conjugate_identities,
)


def test_identities_hold_on_modular_cover() -> None:
    cover = build_cover(ModularParams(p=241, l=5))
    for a in range(5):
        report = verify_conjugate_identities(cover, CharacterSpec.from_exponent(a))
        assert report.passed, report.as_dict()


def test_random_covers_respect_bounds() -> None:
    rng = random.Random(7)
    for _ in range(50):
        cover = random_cover(rng)
        assert cover.group_order % 2 == 1
        assert cover.group_order <= 81
        assert 1 <= len(cover.components) <= 6
        assert cover.group_order % cover.residue_prime != 0


def test_thousand_trials_pass_at_seed_42() -> None:
    assert run_conjugate_suite(1000, 42) == []


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(min_value=0, max_value=2**32 - 1))
def test_identities_hold_for_raw_characters(seed: int) -> None:
    rng = random.Random(seed)
    cover = random_cover(rng, max_components=4, max_e=45)
    phi = random_character(rng, cover, raw=True)
    assert verify_conjugate_identities(cover, phi).passed
