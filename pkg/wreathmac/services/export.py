from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from wreathmac.models.report import Report

from .exactalg import LaurentPoly2, RatFn2
from .multisym import MultiSymFn
from .partcomb import MultiPartition


def to_json(doc: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def multipartition_literal(mu: MultiPartition) -> str:
    if len(mu) == 1:
        return "s[" + ",".join(str(x) for x in mu[0]) + "]"
    return "[" + ",".join("[" + ",".join(str(x) for x in part) + "]" for part in mu) + "]"


def parse_multipartition(text: str) -> MultiPartition:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"bad multipartition literal at position {e.pos}: {text!r}") from None
    if not isinstance(raw, list) or not all(isinstance(p, list) for p in raw):
        raise ValueError(f"multipartition literal must be a list of lists: {text!r}")
    out = []
    for part in raw:
        if any(not isinstance(x, int) or x <= 0 for x in part) or part != sorted(part, reverse=True):
            raise ValueError(f"{part} is not a partition")
        out.append(tuple(part))
    return tuple(out)


def parse_partition(text: str) -> tuple:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"bad partition literal at position {e.pos}: {text!r}") from None
    if not isinstance(raw, list) or any(not isinstance(x, int) or x <= 0 for x in raw) or raw != sorted(raw, reverse=True):
        raise ValueError(f"{text!r} is not a partition literal")
    return tuple(raw)


def schur_terms(f: MultiSymFn) -> Dict[str, str]:
    return {multipartition_literal(mu): str(c) for mu, c in f.to_schur().items()}


def vertex_terms(vec: Dict[Sequence[int], MultiSymFn]) -> List[Dict[str, Any]]:
    return [{"root": list(alpha), "terms": schur_terms(f)} for alpha, f in sorted(vec.items())]


# ---------------------------------------------------------------- exact records (cache format)

def _laurent_record(p: LaurentPoly2) -> List[List[Any]]:
    return [[a, b, str(c)] for (a, b), c in p.sorted_terms()]


def _laurent_from_record(rows: List[List[Any]], vars: str) -> LaurentPoly2:
    return LaurentPoly2({(int(a), int(b)): Fraction(c) for a, b, c in rows}, vars)


def ratfn_record(c: RatFn2) -> Dict[str, Any]:
    return {"vars": c.vars, "num": _laurent_record(c.num), "den": _laurent_record(c.den)}


def ratfn_from_record(rec: Dict[str, Any]) -> RatFn2:
    vars = rec["vars"]
    return RatFn2(_laurent_from_record(rec["num"], vars), _laurent_from_record(rec["den"], vars), vars, reduced=True)


def multisym_record(f: MultiSymFn) -> Dict[str, Any]:
    terms = [
        {"p": [list(part) for part in mu], "c": ratfn_record(c)}
        for mu, c in sorted(f.terms.items())
    ]
    return {"r": f.r, "terms": terms}


def multisym_from_record(rec: Dict[str, Any]) -> MultiSymFn:
    r = int(rec["r"])
    terms = {tuple(tuple(part) for part in t["p"]): ratfn_from_record(t["c"]) for t in rec["terms"]}
    return MultiSymFn(r, terms)


def report_record(report: Report) -> Dict[str, Any]:
    return {"title": report.title, "ok": report.ok, "checks": [c.model_dump() for c in report.checks]}


def report_to_markdown(report: Report) -> str:
    lines: List[str] = []
    status = "PASS" if report.ok else "FAIL"
    lines.append(f"# {report.title} ({status})\n")
    for c in report.checks:
        mark = "x" if c.ok else " "
        lines.append(f"- [{mark}] {c.name}" + (f": {c.detail}" if c.detail else ""))
        if not c.ok and c.lhs is not None:
            lines.append(f"  - lhs: `{c.lhs}`")
            lines.append(f"  - rhs: `{c.rhs}`")
    return "\n".join(lines) + "\n"
