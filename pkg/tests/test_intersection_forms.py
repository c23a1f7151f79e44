from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction

import pytest

from src.cover.model import (
    CharacterSpec,
    CoverDatum,
    FiberComponent,
    IntersectionMatrix,
    validate_cover,
)
from src.intersection.forms import (
    IntegralityError,
    a_invariant,
    canonical_pair,
    euler_delta,
    pair,
    require_integer,
    t_invariant,
    twisted_delta,
)
from src.modular.family import ModularParams, build_cover
from src.resolvent.calculus import (
    CANONICAL,
    CANONICAL_HALF,
    STRUCTURE,
    SheafSpec,
    ResolventDivisor,
    resolvent_divisor,
    support_divisor,
)
from src.resolvent.identities import random_cover


@pytest.fixture
def cover241() -> CoverDatum:
    return build_cover(ModularParams(p=241, l=5))


def _phi(a: int) -> CharacterSpec:
    return CharacterSpec.from_exponent(a)


def test_pair_examples(cover241: CoverDatum) -> None:
    fifth = ResolventDivisor({"y0": Fraction(1, 5)})
    assert pair(cover241, fifth, fifth) == Fraction(-4, 5)
    assert pair(cover241, ResolventDivisor(), fifth) == 0
    y0 = ResolventDivisor({"y0": Fraction(1)})
    yinf = ResolventDivisor({"yinf": Fraction(1)})
    assert pair(cover241, y0, yinf) == 20


def test_canonical_pair_examples(cover241: CoverDatum) -> None:
    assert canonical_pair(cover241, ResolventDivisor({"y0": Fraction(1, 5)})) == Fraction(18, 5)
    assert canonical_pair(cover241, ResolventDivisor()) == 0
    flagship = build_cover(ModularParams(p=182857, l=401))
    assert canonical_pair(flagship, ResolventDivisor({"y0": Fraction(1)})) == 15236


def test_t_invariant_examples(cover241: CoverDatum) -> None:
    assert t_invariant(cover241, STRUCTURE, _phi(1)).value == Fraction(14, 5)
    assert t_invariant(cover241, STRUCTURE, _phi(0)).value == 0
    assert t_invariant(cover241, CANONICAL_HALF, _phi(3)).value == Fraction(-52, 5)


def test_euler_delta_examples(cover241: CoverDatum) -> None:
    assert [euler_delta(cover241, CANONICAL, _phi(a)) for a in range(1, 5)] == [-30, -22, -14, -6]
    assert euler_delta(cover241, CANONICAL_HALF, _phi(3)) == -14
    assert euler_delta(cover241, CANONICAL_HALF, _phi(1)) == 0
    assert euler_delta(cover241, CANONICAL_HALF, _phi(2)) == 0
    assert all(euler_delta(cover241, STRUCTURE, _phi(a)) == 0 for a in range(5))


def test_twisted_delta_examples(cover241: CoverDatum) -> None:
    assert twisted_delta(cover241, CANONICAL_HALF, _phi(3)) == 4
    assert twisted_delta(cover241, CANONICAL, _phi(1)) == -12
    assert twisted_delta(cover241, CANONICAL, _phi(0)) == 0


def test_a_invariant_examples(cover241: CoverDatum) -> None:
    assert a_invariant(cover241, _phi(1)) == -38
    assert a_invariant(cover241, _phi(0)) == 0


def test_canonical_delta_splits_into_a_and_support_pairing() -> None:
    rng = random.Random(11)
    checked = 0
    while checked < 200:
        cover = random_cover(rng, max_components=5, max_e=45)
        a = rng.randrange(cover.group_order)
        phi = _phi(a)
        f = support_divisor(cover, phi)
        r_o = resolvent_divisor(cover, STRUCTURE, phi)
        expected = a_invariant(cover, phi) - 2 * pair(cover, f, r_o)
        try:
            delta = euler_delta(cover, CANONICAL, phi)
        except IntegralityError:
            continue
        assert delta == expected
        checked += 1


def test_pair_is_symmetric_and_bilinear() -> None:
    rng = random.Random(3)
    for _ in range(50):
        cover = random_cover(rng, max_components=5)
        ids = cover.component_ids

        def draw() -> ResolventDivisor:
            return ResolventDivisor(
                {cid: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for cid in ids}
            )

        x, y, z = draw(), draw(), draw()
        assert pair(cover, x, y) == pair(cover, y, x)
        assert pair(cover, x + y, z) == pair(cover, x, z) + pair(cover, y, z)
        assert pair(cover, x.scale(3), y) == 3 * pair(cover, x, y)
        assert canonical_pair(cover, x + y) == canonical_pair(cover, x) + canonical_pair(cover, y)


def test_denominator_bound() -> None:
    rng = random.Random(5)
    for _ in range(100):
        cover = random_cover(rng, max_components=4, max_e=27)
        n = cover.group_order
        for a in range(n):
            value = t_invariant(cover, CANONICAL_HALF, _phi(a)).value
            assert (value * n * n).denominator == 1


def test_non_integral_difference_raises() -> None:
    cover = validate_cover(
        CoverDatum(
            group_order=3,
            components=(FiberComponent("y", 3, 1, -1, 1),),
            intersections=IntersectionMatrix({}),
            residue_prime=7,
        )
    )
    # T(omega) - T(O) = f^2 + y^2 + 2 chi - 2 f.r = -1 - 1 + 2 + 2/3
    with pytest.raises(IntegralityError) as info:
        euler_delta(cover, CANONICAL, _phi(1))
    assert info.value.value == Fraction(2, 3)
    with pytest.raises(IntegralityError, match="not an integer"):
        require_integer("x", Fraction(1, 2))


def test_pair_reads_missing_diagonal_from_self_intersection() -> None:
    cover = CoverDatum(
        group_order=5,
        components=(FiberComponent("u", 5, 1, -3, 1), FiberComponent("v", 1, 0, -2, 1)),
        intersections=IntersectionMatrix({("u", "v"): 1}),
        residue_prime=7,
    )
    u = ResolventDivisor({"u": Fraction(1)})
    v = ResolventDivisor({"v": Fraction(1)})
    assert pair(cover, u, u) == -3
    assert pair(cover, v, v) == -2
    assert pair(cover, u, v) == pair(cover, v, u) == 1
    assert pair(cover, u + v, u + v) == pair(validate_cover(cover), u + v, u + v) == -3


def test_deltas_accept_custom_sheaves(cover241: CoverDatum) -> None:
    custom = SheafSpec("custom")
    like_canonical = replace(
        cover241,
        components=tuple(replace(comp, d_custom=comp.e - 1) for comp in cover241.components),
    )
    assert [euler_delta(like_canonical, custom, _phi(a)) for a in range(1, 5)] == [-30, -22, -14, -6]
    assert twisted_delta(like_canonical, custom, _phi(1)) == -12

    like_structure = replace(
        cover241,
        components=tuple(replace(comp, d_custom=0) for comp in cover241.components),
    )
    assert all(euler_delta(like_structure, custom, _phi(a)) == 0 for a in range(5))
    assert all(twisted_delta(like_structure, custom, _phi(a)) == 0 for a in range(5))
    assert all(twisted_delta(cover241, STRUCTURE, _phi(a)) == 0 for a in range(5))
