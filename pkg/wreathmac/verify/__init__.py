from .cases import SUITE_BUILDERS, build_suite
from .runner import Case, RunState, SuiteRunner

__all__ = ["SUITE_BUILDERS", "build_suite", "Case", "RunState", "SuiteRunner"]
