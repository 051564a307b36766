from __future__ import annotations

import json
from pathlib import Path

import pytest

from wreathmac.cli import EXIT_OK, EXIT_USAGE, main, run
from wreathmac.models import Request


def invoke(argv: list, capsys: pytest.CaptureFixture) -> tuple:
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_request_render_roundtrip() -> None:
    req = Request(command="kostka", r=3, w="s2 s1 t[1,-1,0]", mu="[[1],[],[]]", variant="forward", jobs=2)
    assert Request.parse(req.render()) == req


def test_compute_r1(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    code, doc = invoke(["compute", "--r", "1", "--mu", "[[2]]", "--cache-dir", str(tmp_path)], capsys)
    assert code == EXIT_OK
    assert doc["basis"] == "schur"
    assert set(doc["terms"]) == {"s[2]", "s[1,1]"}
    assert doc["terms"]["s[2]"] == "1"
    assert any(tmp_path.rglob("*.json")), "solved polynomial should be cached"


def test_kostka_report(tmp_path: Path) -> None:
    req = Request(command="kostka", r=3, w="s2 s1 t[1,-1,0]", mu="[[1],[],[]]", cache_dir=str(tmp_path))
    doc, code = run(req)
    assert code == EXIT_OK, doc["report"]
    assert doc["report"]["ok"] is True
    assert len(doc["terms"]) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--r", "2"],
        ["compute", "--r", "3", "--mu", "[[1],[]]"],
        ["compute", "--r", "2", "--mu", "[[1,2],[]]"],
        ["compute", "--r", "3", "--w", "s7", "--mu", "[[1],[],[]]"],
        ["toroidal-eigen", "--r", "2", "--partition", "[1]"],
        ["verify"],
        ["bogus"],
    ],
)
def test_usage_errors(argv: list, tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    code, doc = invoke(argv + ["--cache-dir", str(tmp_path)], capsys)
    assert code == EXIT_USAGE, f"{argv} should be a usage error"
    assert "error" in doc


def test_verify_combinatorics(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    code, doc = invoke(["verify", "--suite", "combinatorics", "--jobs", "2", "--cache-dir", str(tmp_path)], capsys)
    assert code == EXIT_OK, [c for c in doc["cases"] if not c["ok"]]
    assert doc["suite"] == "combinatorics"
    assert [c["case"] for c in doc["cases"]][0] == "worked examples"


def test_nabla_on_empty_multipartition(tmp_path: Path, capsys: pytest.CaptureFixture) -> None:
    code, doc = invoke(["nabla", "--r", "2", "--w", "", "--mu", "[[],[]]", "--cache-dir", str(tmp_path)], capsys)
    assert code == EXIT_OK, doc
    assert doc["eigenvalues"] == {"0": "1", "1": "1"}, f"eigenvalues {doc['eigenvalues']}"
    assert doc["report"]["ok"] is True
