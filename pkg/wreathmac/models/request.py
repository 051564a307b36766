from __future__ import annotations

import argparse
from typing import List, Literal, Optional, Sequence

from pydantic import BaseModel, Field

from .keys import Variant


Command = Literal["compute", "kostka", "nabla", "norms", "verify", "conjectures", "toroidal-eigen", "factor"]
COMMANDS: List[str] = ["compute", "kostka", "nabla", "norms", "verify", "conjectures", "toroidal-eigen", "factor"]
SUITES: List[str] = [
    "paper-examples",
    "classical",
    "combinatorics",
    "wreath",
    "symmetries",
    "norms",
    "quiver",
    "factor",
    "toroidal",
    "conjectures",
]


class Request(BaseModel):
    command: Command
    r: Optional[int] = Field(None, ge=1)
    w: Optional[str] = None
    mu: Optional[str] = Field(None, description="multipartition literal, e.g. [[1],[],[]]")
    partition: Optional[str] = Field(None, description="single partition literal, e.g. [3,3,2,2]")
    variant: Variant = "standard"
    suite: Optional[str] = None
    cache_dir: Optional[str] = None
    jobs: Optional[int] = Field(None, ge=1)

    def render(self) -> List[str]:
        argv: List[str] = [self.command]
        for flag, value in (
            ("--r", self.r),
            ("--w", self.w),
            ("--mu", self.mu),
            ("--partition", self.partition),
            ("--suite", self.suite),
            ("--cache-dir", self.cache_dir),
            ("--jobs", self.jobs),
        ):
            if value is not None:
                argv += [flag, str(value)]
        if self.variant != "standard":
            argv += ["--variant", self.variant]
        return argv

    @classmethod
    def parse(cls, argv: Sequence[str]) -> "Request":
        ns = build_parser().parse_args(list(argv))
        return cls(**vars(ns))


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise ValueError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wreathmac", description="Exact wreath Macdonald polynomial toolkit.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--r", type=int)
    p.add_argument("--w")
    p.add_argument("--mu")
    p.add_argument("--partition")
    p.add_argument("--variant", choices=["standard", "forward", "opposite"], default="standard")
    p.add_argument("--suite", choices=SUITES)
    p.add_argument("--cache-dir", dest="cache_dir")
    p.add_argument("--jobs", type=int)
    return p
