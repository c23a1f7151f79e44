# scripts/verify_modular_cases.py
import json
import os
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List

REPO_ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO_ROOT))

from src.handlers.modular import handle_modular

CASE_PATH = Path(__file__).resolve().parent / "fixtures" / "modular_cases.json"
REPORT_PATH = Path(os.getenv("MODULAR_CASES_REPORT", str(REPO_ROOT / "reports" / "modular-cases-report.md")))


def _load_cases(path: Path) -> List[Dict[str, Any]]:
    if not path.exists():
        raise FileNotFoundError(f"Fixture file not found: {path}")
    data = json.loads(path.read_text())
    if isinstance(data, dict) and "cases" in data:
        cases = data["cases"]
    elif isinstance(data, list):
        cases = data
    else:
        raise ValueError("Fixture file must be a list or contain a 'cases' array")
    if not cases:
        raise ValueError("Fixture file contains no cases")
    return cases


def _observed(p: int, l: int) -> Dict[str, Any]:
    report = handle_modular(p, l)
    class_group = report.results.get("class_group")
    return {
        "wide_class_number": None if class_group is None else class_group["wide_class_number"],
        "verdicts": {
            name: report.verdicts[name] for name in ("V", "omega_half", "structure")
        },
        "norms_agree": report.verdicts["norms_agree"],
    }


def _write_report(results: List[Dict[str, Any]]) -> None:
    REPORT_PATH.parent.mkdir(parents=True, exist_ok=True)
    now = datetime.now(timezone.utc).isoformat()
    lines: List[str] = [
        "# Modular Family Case Report",
        "",
        f"- **Run at:** {now}",
        f"- **Cases:** {len(results)}",
        "",
        "| Case | p | l | h | V | omega_half | structure | norms agree | Match |",
        "| --- | --- | --- | --- | --- | --- | --- | --- | --- |",
    ]
    for result in results:
        observed = result["observed"]
        verdicts = observed["verdicts"]
        lines.append(
            "| {name} | {p} | {l} | {h} | {v} | {half} | {structure} | {agree} | {match} |".format(
                name=result["name"],
                p=result["p"],
                l=result["l"],
                h=observed["wide_class_number"],
                v=verdicts["V"],
                half=verdicts["omega_half"],
                structure=verdicts["structure"],
                agree=str(observed["norms_agree"]).lower(),
                match=str(result["match"]).lower(),
            )
        )
    REPORT_PATH.write_text("\n".join(lines) + "\n")


def main() -> int:
    cases = _load_cases(CASE_PATH)
    results: List[Dict[str, Any]] = []
    for case in cases:
        name = case.get("name")
        expected = case.get("expected")
        if not name or expected is None or "p" not in case or "l" not in case:
            raise ValueError("Each case must include 'name', 'p', 'l' and 'expected'")
        observed = _observed(case["p"], case["l"])
        match = (
            observed["wide_class_number"] == expected["wide_class_number"]
            and observed["verdicts"] == expected["verdicts"]
            and observed["norms_agree"]
        )
        results.append({"name": name, "p": case["p"], "l": case["l"], "observed": observed, "match": match})

    _write_report(results)
    for result in results:
        print(f"{result['name']}: p={result['p']} l={result['l']} match={result['match']}")
    print(f"Report written to: {REPORT_PATH}")
    return 0 if all(result["match"] for result in results) else 1


if __name__ == "__main__":
    sys.exit(main())
