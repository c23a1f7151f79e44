from __future__ import annotations

import pytest

from src.modular.search import candidate_passes, candidates, search_prime
from src.quadratic.class_group import QuadraticFieldError


def test_candidates_are_one_mod_24l() -> None:
    found = list(candidates(401, 182857))
    assert found[0] == 9625
    assert found[-1] == 182857
    assert len(found) == 19
    assert all((p - 1) % (24 * 401) == 0 for p in found)


def test_strict_search_finds_flagship_prime() -> None:
    result = search_prime(401, 1_000_000, strict=True, workers=1)
    assert result.prime == 182857
    assert result.candidates_checked == 19
    assert result.reason == "found"


def test_general_search_agrees_for_401() -> None:
    assert search_prime(401, 1_000_000, workers=1).prime == 182857


def test_limit_exhausted_is_reported() -> None:
    result = search_prime(401, 182856, strict=True, workers=1)
    assert result.prime is None
    assert result.reason == "none_below_limit"
    assert result.candidates_checked == 18


def test_class_number_one_short_circuits() -> None:
    result = search_prime(5, 10**9, workers=1)
    assert result.prime is None
    assert result.reason == "class_number_one"
    assert result.candidates_checked == 0


def test_flagship_prime_passes_both_predicates() -> None:
    assert candidate_passes(401, 182857, strict=True)
    assert candidate_passes(401, 182857, strict=False)
    assert not candidate_passes(401, 19249, strict=False)


def test_parallel_search_matches_sequential(monkeypatch) -> None:
    monkeypatch.setenv("SEARCH_BATCH_SIZE", "4")
    result = search_prime(401, 1_000_000, strict=True, workers=2)
    assert result.prime == 182857
    assert result.candidates_checked == 19


def test_search_requires_real_quadratic_l() -> None:
    with pytest.raises(QuadraticFieldError):
        search_prime(7, 1000)
