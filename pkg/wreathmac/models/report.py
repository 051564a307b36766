from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    name: str
    ok: bool
    detail: str = ""
    lhs: Optional[str] = None
    rhs: Optional[str] = None


class Report(BaseModel):
    title: str
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "", lhs: object = None, rhs: object = None) -> CheckResult:
        result = CheckResult(
            name=name,
            ok=ok,
            detail=detail,
            lhs=None if lhs is None else str(lhs),
            rhs=None if rhs is None else str(rhs),
        )
        self.checks.append(result)
        return result

    def first_failure(self) -> Optional[CheckResult]:
        return next((c for c in self.checks if not c.ok), None)
