from .keys import Variant, WreathKey
from .report import CheckResult, Report
from .request import COMMANDS, SUITES, Command, Request, build_parser

__all__ = [
    "Variant",
    "WreathKey",
    "CheckResult",
    "Report",
    "COMMANDS",
    "SUITES",
    "Command",
    "Request",
    "build_parser",
]
