from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Dict, List, Optional, Union

from wreathmac.config import Executor, get_settings
from wreathmac.models import Report
from wreathmac.services.cache import ResultCache
from wreathmac.services.export import report_record

logger = logging.getLogger(__name__)


@dataclass
class Case:
    name: str
    check: Callable[[Optional[ResultCache]], Report]


@dataclass
class RunState:
    suite: str
    cases: List[Case] = field(default_factory=list)
    reports: Dict[str, Report] = field(default_factory=dict)
    errors: Dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.errors and all(r.ok for r in self.reports.values())

    def to_document(self) -> Dict[str, Any]:
        """Cases in declaration order regardless of completion order."""
        rows: List[Dict[str, Any]] = []
        for case in self.cases:
            if case.name in self.errors:
                rows.append({"case": case.name, "ok": False, "error": self.errors[case.name]})
            else:
                rows.append({"case": case.name, **report_record(self.reports[case.name])})
        return {"suite": self.suite, "ok": self.ok, "cases": rows}


def _run_case(case: Case, store: Optional[ResultCache]) -> Report:
    report = case.check(store)
    level = logging.INFO if report.ok else logging.WARNING
    logger.log(level, "case %s: %s", case.name, "PASS" if report.ok else "FAIL")
    return report


class SuiteRunner:
    """Runs cases on a pool of ``jobs`` workers; one worker runs them inline.

    The sympy-backed solvers hold the GIL, so the default pool is a process pool
    and case checks must be picklable (module-level functions or partials of them).
    """

    def __init__(self, jobs: Optional[int] = None, store: Optional[ResultCache] = None, executor: Optional[Executor] = None) -> None:
        self.settings = get_settings()
        self.jobs = jobs or self.settings.JOBS
        self.store = store
        self.executor = executor or self.settings.EXECUTOR

    def _pool(self) -> Union[ProcessPoolExecutor, ThreadPoolExecutor]:
        if self.executor == "process":
            return ProcessPoolExecutor(max_workers=self.jobs)
        return ThreadPoolExecutor(max_workers=self.jobs)

    def invoke(self, suite: str, cases: List[Case]) -> RunState:
        state = RunState(suite=suite, cases=list(cases))
        logger.info("suite %s: %d cases on %d %s workers", suite, len(cases), self.jobs, self.executor)
        if self.jobs == 1:
            for case in state.cases:
                self._record(state, case.name, partial(_run_case, case, self.store))
            return state
        with self._pool() as pool:
            futures = {case.name: pool.submit(_run_case, case, self.store) for case in state.cases}
            for name, fut in futures.items():
                self._record(state, name, fut.result)
        return state

    @staticmethod
    def _record(state: RunState, name: str, outcome: Callable[[], Report]) -> None:
        try:
            state.reports[name] = outcome()
        except Exception as e:  # surfaced in the document, not raised
            logger.warning("case %s raised %s: %s", name, type(e).__name__, e)
            state.errors[name] = f"{type(e).__name__}: {e}"
