from __future__ import annotations

import io
import json
from pathlib import Path
from typing import Any, Dict, List, Tuple

import pytest

from src import cli
from src.handlers import verify as verify_handler
from src.mapping.report_encoding import parse_report, render_report


def _run(argv: List[str]) -> Tuple[int, Dict[str, Any], str]:
    out = io.StringIO()
    status = cli.main(argv, stdout=out)
    text = out.getvalue()
    return status, json.loads(text), text


@pytest.fixture
def cover241(tmp_path: Path) -> str:
    path = tmp_path / "modular_241_5.json"
    status, _, _ = _run(["modular", "--p", "241", "--l", "5", "--emit-cover", str(path)])
    assert status == 0
    return str(path)


def test_emitted_cover_file_shape(cover241: str) -> None:
    data = json.loads(Path(cover241).read_text(encoding="utf-8"))
    assert data["group_order"] == 5
    assert data["residue_prime"] == 241
    assert data["intersections"] == [["y0", "yinf", 20]]
    assert [c["id"] for c in data["components"]] == ["y0", "yinf"]


def test_resolvent_command(cover241: str) -> None:
    status, payload, _ = _run(["resolvent", cover241, "--sheaf", "structure", "--character", "2"])
    assert status == 0
    assert payload["results"]["resolvent"] == {"y0": "2/5", "yinf": "0/1"}
    assert payload["results"]["support"] == ["y0"]
    assert payload["results"]["strict_half_support"] == []

    _, zero, _ = _run(["resolvent", cover241, "--character", "0"])
    assert set(zero["results"]["resolvent"].values()) == {"0/1"}

    _, half, _ = _run(["resolvent", cover241, "--sheaf", "canonical-half", "--character", "4"])
    assert half["results"]["resolvent"]["y0"] == "-1/5"


def test_resolvent_with_raw_exponents(cover241: str) -> None:
    status, payload, _ = _run(["resolvent", cover241, "--raw-exponents", "y0=3"])
    assert status == 0
    assert payload["results"]["resolvent"]["y0"] == "3/5"


def test_invariants_command(cover241: str) -> None:
    status, payload, _ = _run(["invariants", cover241, "--sheaf", "canonical", "--all-characters"])
    assert status == 0
    deltas = [row["euler_delta"] for row in payload["results"]["rows"]]
    assert deltas == [0, -30, -22, -14, -6]
    assert payload["verdicts"]["integral"] is True

    _, structure, _ = _run(["invariants", cover241, "--sheaf", "structure", "--all-characters"])
    assert {row["euler_delta"] for row in structure["results"]["rows"]} == {0}

    _, single, _ = _run(["invariants", cover241, "--character", "3", "--sheaf", "canonical-half"])
    assert [row["character"] for row in single["results"]["rows"]] == [3]
    assert single["results"]["rows"][0]["t"] == "-52/5"


def test_invariants_flags_non_integral_data(tmp_path: Path) -> None:
    path = tmp_path / "bad.json"
    path.write_text(
        json.dumps(
            {
                "group_order": 3,
                "residue_prime": 7,
                "components": [
                    {"id": "y", "e": 3, "m": 1, "self_intersection": -1, "chi_struct": 1}
                ],
                "intersections": [],
            }
        ),
        encoding="utf-8",
    )
    status, payload, _ = _run(["invariants", str(path), "--sheaf", "canonical", "--all-characters"])
    assert status == 2
    assert payload["verdicts"]["integral"] is False
    assert 1 in payload["verdicts"]["integrality_failures"]


def test_modular_command_at_241() -> None:
    status, payload, _ = _run(["modular", "--p", "241", "--l", "5"])
    assert status == 0
    assert payload["verdicts"]["V"] == "trivial"
    assert payload["verdicts"]["non_trivial_count"] == 0
    assert payload["results"]["class_group"]["wide_class_number"] == 1
    raw = payload["results"]["exponents"]["V"]["raw"]["factors"][0]["element"]
    assert raw == {"modulus": 5, "terms": [[2, "14/1"], [4, "6/1"]]}


def test_flagship_modular_report() -> None:
    status, payload, _ = _run(["modular", "--p", "182857", "--l", "401"])
    assert status == 0
    results = payload["results"]
    assert results["class_group"]["wide_class_number"] == 5
    assert results["t1"] == -774
    assert results["t_mod_class_number"] == {"t1": 1, "t2": 2, "t2_minus_l_t1": 1}
    assert results["t_mod_class_number_conjugate_base"] == {
        "t1": 4,
        "t2": 3,
        "t2_minus_l_t1": 4,
    }
    assert results["beta"]["principal"] is False
    assert results["scale_12l"] == 38
    verdicts = payload["verdicts"]
    assert [verdicts[name] for name in ("V", "omega_half", "structure")] == ["non_trivial"] * 3
    assert verdicts["norms_agree"] is True


def test_search_command() -> None:
    status, payload, _ = _run(
        ["modular", "--l", "401", "--search", "--limit", "1000000", "--strict-predicate"]
    )
    assert status == 0
    assert payload["results"]["prime"] == 182857


def test_verify_commands() -> None:
    status, payload, _ = _run(["verify", "--trace-factorization", "3", "2", "1", "1"])
    assert status == 0
    assert payload["verdicts"]["passed"] is True

    status, payload, _ = _run(["verify", "--stickelberger-identities", "--l-range", "5..40"])
    assert status == 0
    assert payload["results"]["primes_checked"] == [5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    assert 5 in payload["results"]["proof_display_failures"]

    status, payload, _ = _run(["verify", "--conjugate-identities", "--random", "50", "--seed", "3"])
    assert status == 0


def test_verification_failure_exits_one(monkeypatch) -> None:
    monkeypatch.setattr(verify_handler, "verify_trace_factorization", lambda *args: False)
    status, payload, _ = _run(["verify", "--trace-factorization", "5", "1", "1", "2"])
    assert status == 1
    assert payload["type"] == "error"
    assert payload["error"]["type"] == "verification_error"
    assert payload["error"]["detail"]["datum"] == {"l": 5, "s": 1, "t": 1, "u": 2}


def test_input_errors_exit_two(tmp_path: Path) -> None:
    status, payload, _ = _run(["modular", "--p", "97", "--l", "5"])
    assert status == 2
    assert payload["error"]["type"] == "invalid_parameters"

    broken = tmp_path / "broken.json"
    broken.write_text('{"group_order": 5,\n  "components": [}', encoding="utf-8")
    status, payload, _ = _run(["resolvent", str(broken)])
    assert status == 2
    assert payload["error"]["type"] == "cover_file_error"
    assert payload["error"]["detail"]["position"].startswith("line 2")

    status, payload, _ = _run(["modular", "--l", "401"])
    assert status == 2


def test_timing_is_opt_in_and_output_round_trips() -> None:
    _, plain, text = _run(["modular", "--p", "241", "--l", "5"])
    assert "timing" not in plain
    assert render_report(parse_report(text)) == text

    _, timed, _ = _run(["--timing", "modular", "--p", "241", "--l", "5"])
    assert isinstance(timed["timing"]["duration_ms"], int)


def test_output_is_deterministic() -> None:
    first = _run(["modular", "--p", "337", "--l", "7"])[2]
    second = _run(["modular", "--p", "337", "--l", "7"])[2]
    assert first == second
    assert json.loads(first)["results"]["norm_test"] == "inconclusive"


def test_raw_exponents_for_unknown_component_exit_two(cover241: str) -> None:
    status, payload, _ = _run(["resolvent", cover241, "--raw-exponents", "y0=3,y9=2"])
    assert status == 2
    assert payload["error"]["type"] == "character_error"
    assert "y9" in payload["error"]["message"]


def test_long_form_flag_spellings() -> None:
    status, payload, _ = _run(
        ["modular", "--l", "401", "--search", "--limit", "1000000", "--strict-paper-predicate"]
    )
    assert status == 0
    assert payload["results"]["prime"] == 182857

    status, payload, _ = _run(["verify", "--eq-5-3", "3", "2", "1", "1"])
    assert status == 0
    assert payload["verdicts"]["passed"] is True

    status, payload, _ = _run(["verify", "--lemma-6-3", "--l-range", "5..20"])
    assert status == 0
    assert payload["results"]["primes_checked"] == [5, 7, 11, 13, 17, 19]

    status, _, _ = _run(["verify", "--corollary-3-8", "--random", "20", "--seed", "1"])
    assert status == 0


def test_modular_report_numbers_are_plain_json() -> None:
    _, payload, text = _run(["modular", "--p", "182857", "--l", "401"])
    residues = payload["results"]["t_mod_class_number"]
    assert all(type(value) is int for value in residues.values())
    assert json.loads(text) == payload
