from __future__ import annotations

from typing import Optional

import pytest

from wreathmac.config import get_settings
from wreathmac.models import Report
from wreathmac.services import wreath
from wreathmac.services.cache import ResultCache
from wreathmac.services.export import report_to_markdown, schur_terms
from wreathmac.verify.cases import build_suite
from wreathmac.verify.runner import Case, SuiteRunner


def passing(store: Optional[ResultCache]) -> Report:
    report = Report(title="passing")
    report.add("trivial", True)
    return report


def failing(store: Optional[ResultCache]) -> Report:
    report = Report(title="failing")
    report.add("one", True)
    report.add("two", False, lhs=1, rhs=2)
    return report


def exploding(store: Optional[ResultCache]) -> Report:
    raise ArithmeticError("boom")


def test_smoke_end_to_end() -> None:
    key = wreath.make_key(2, "s1", ((1,), ()))
    H = wreath.solve_H(key)
    terms = schur_terms(H)
    assert terms, "solver returned an empty polynomial"

    report = wreath.defining_conditions(key, H)
    assert report.ok, f"defining conditions: {report.first_failure()}"
    md_text = report_to_markdown(report)
    assert md_text.startswith("# ") and "PASS" in md_text


def test_markdown_shows_failing_sides() -> None:
    md_text = report_to_markdown(failing(None))
    assert "(FAIL)" in md_text
    assert "- [x] one" in md_text and "- [ ] two" in md_text
    assert "lhs: `1`" in md_text and "rhs: `2`" in md_text


def test_settings_defaults() -> None:
    settings = get_settings()
    assert settings.JOBS >= 1
    assert settings.EXECUTOR in ("process", "thread")
    assert settings.FACTOR_DEPTH_SLACK >= 0
    assert settings.WREATHMAC_CACHE


def test_unknown_suite() -> None:
    with pytest.raises(ValueError):
        build_suite("no-such-suite")


@pytest.mark.parametrize("jobs, executor", [(1, "process"), (3, "thread"), (3, "process")])
def test_runner_keeps_declaration_order(jobs: int, executor: str) -> None:
    cases = [Case("b", failing), Case("a", passing), Case("c", exploding)]
    state = SuiteRunner(jobs=jobs, executor=executor).invoke("smoke", cases)
    doc = state.to_document()
    assert [row["case"] for row in doc["cases"]] == ["b", "a", "c"]
    assert doc["ok"] is False
    assert "ArithmeticError" in doc["cases"][2]["error"]
    assert doc["cases"][1]["ok"] is True
    assert set(state.errors) == {"c"}
