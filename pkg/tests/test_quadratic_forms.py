from __future__ import annotations

import pytest

from src.quadratic.forms import (
    FormError,
    IndefiniteForm,
    check_discriminant,
    compose,
    cycle,
    is_reduced,
    principal_form,
    reduce_form,
    reduced_forms,
    rho,
)


def test_reduced_forms_of_21() -> None:
    forms = reduced_forms(21)
    assert [f.as_tuple() for f in forms] == [(-3, 3, 1), (-1, 3, 3), (1, 3, -3), (3, 3, -1)]
    assert all(f.discriminant == 21 for f in forms)


def test_reduction_condition_examples() -> None:
    assert is_reduced(IndefiniteForm(1, 3, -3))
    assert not is_reduced(IndefiniteForm(1, 1, -5))
    assert not is_reduced(IndefiniteForm(5, 1, -1))


def test_rho_permutes_reduced_forms() -> None:
    for D in (5, 21, 229, 401):
        forms = reduced_forms(D)
        images = [rho(f) for f in forms]
        assert sorted(images) == forms


def test_cycles_of_21() -> None:
    assert set(cycle(IndefiniteForm(1, 3, -3))) == {
        IndefiniteForm(1, 3, -3),
        IndefiniteForm(-3, 3, 1),
    }
    assert set(cycle(IndefiniteForm(3, 3, -1))) == {
        IndefiniteForm(3, 3, -1),
        IndefiniteForm(-1, 3, 3),
    }


def test_reduce_form_keeps_discriminant() -> None:
    # x -> x + 50y applied to x^2 + xy - 100y^2
    f = IndefiniteForm(1, 101, 2450)
    assert f.discriminant == 401
    g = reduce_form(f)
    assert is_reduced(g)
    assert g.discriminant == 401
    assert g in cycle(principal_form(401))


def test_compose_examples_at_21() -> None:
    square = compose(IndefiniteForm(3, 3, -1), IndefiniteForm(3, 3, -1))
    assert square in cycle(principal_form(21))
    mixed = compose(IndefiniteForm(3, 3, -1), IndefiniteForm(1, 3, -3))
    assert mixed in cycle(IndefiniteForm(3, 3, -1))


def test_principal_form_is_identity_for_composition() -> None:
    one = principal_form(401)
    for f in reduced_forms(401):
        assert compose(one, f) in cycle(f)


def test_discriminant_checks() -> None:
    with pytest.raises(FormError, match="1 mod 4"):
        check_discriminant(12)
    with pytest.raises(FormError, match="perfect square"):
        check_discriminant(25)
    with pytest.raises(FormError, match="discriminants differ"):
        compose(IndefiniteForm(1, 1, -1), IndefiniteForm(1, 3, -3))
