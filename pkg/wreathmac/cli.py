from __future__ import annotations

import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from wreathmac.config import configure_logging, get_settings
from wreathmac.models import Report, Request, WreathKey
from wreathmac.services import quiverref, toroidal, wreath
from wreathmac.services.cache import ResultCache
from wreathmac.services.export import (
    parse_multipartition,
    parse_partition,
    report_record,
    schur_terms,
    to_json,
    vertex_terms,
)
from wreathmac.services.partcomb import MultiPartition, WeylParseError
from wreathmac.services.quiverref import InvariantViolationError
from wreathmac.services.wreath import SolverDegenerateError
from wreathmac.verify import SuiteRunner, build_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


def _require(req: Request, *fields: str) -> None:
    missing = [f for f in fields if getattr(req, f) is None]
    if missing:
        flags = ", ".join("--" + f.replace("_", "-") for f in missing)
        raise UsageError(f"{req.command} needs {flags}")


def _mu(req: Request) -> MultiPartition:
    _require(req, "r", "mu")
    try:
        mu = parse_multipartition(req.mu)
    except ValueError as e:
        raise UsageError(f"--mu: {e}") from None
    if len(mu) != req.r:
        raise UsageError(f"--mu has {len(mu)} components but --r is {req.r}")
    return mu


def _key(req: Request) -> WreathKey:
    mu = _mu(req)
    try:
        return wreath.make_key(req.r, req.w or "", mu, req.variant)
    except WeylParseError as e:
        raise UsageError(f"--w: {e}") from None
    except ValueError as e:
        raise UsageError(str(e)) from None


def _header(req: Request, key: WreathKey) -> Dict[str, Any]:
    return {"command": req.command, "r": key.r, "w": req.w or "", "mu": req.mu, "variant": key.variant}


def _with_report(doc: Dict[str, Any], report: Report) -> Tuple[Dict[str, Any], int]:
    doc["report"] = report_record(report)
    return doc, EXIT_OK if report.ok else EXIT_FAILED


def _compute(req: Request, store: ResultCache) -> Tuple[Dict[str, Any], int]:
    key = _key(req)
    H = wreath.solve_H(key, store)
    doc = _header(req, key)
    doc.update({"basis": "schur", "terms": schur_terms(H)})
    return doc, EXIT_OK


def _kostka(req: Request, store: ResultCache) -> Tuple[Dict[str, Any], int]:
    key = _key(req)
    doc = _header(req, key)
    doc["terms"] = schur_terms(wreath.solve_H(key, store))
    return _with_report(doc, wreath.kostka_checks(key, store))


def _nabla(req: Request, store: ResultCache) -> Tuple[Dict[str, Any], int]:
    key = _key(req)
    doc = _header(req, key)
    doc["eigenvalues"] = {str(i): str(quiverref.nabla_eigen(key, i)) for i in range(key.r)}
    report = quiverref.quiver_data_check(key, store)
    if key.n > 0:
        report.checks += quiverref.procesi_normalization_check(key, store).checks
    return _with_report(doc, report)


def _norms(req: Request, store: ResultCache) -> Tuple[Dict[str, Any], int]:
    key = _key(req)
    doc = _header(req, key)
    doc["norm"] = str(wreath.norm_b(key, store))
    return _with_report(doc, wreath.norm_report(key, store))


def _conjectures(req: Request, store: ResultCache) -> Tuple[Dict[str, Any], int]:
    key = _key(req)
    doc = _header(req, key)
    _, c, P = wreath.J_and_P(key, store)
    doc.update({"J_to_P": str(c), "P": schur_terms(P)})
    return _with_report(doc, wreath.check_conjectures(key, store))


def _factor(req: Request, store: ResultCache) -> Tuple[Dict[str, Any], int]:
    mu = _mu(req)
    doc = {"command": req.command, "r": req.r, "mu": req.mu, "terms": schur_terms(wreath.factor_generic(req.r, mu))}
    return _with_report(doc, wreath.factor_check(req.r, mu, store))


def _toroidal_eigen(req: Request, store: ResultCache) -> Tuple[Dict[str, Any], int]:
    _require(req, "r", "partition")
    if req.r < 3:
        raise UsageError("toroidal-eigen needs --r >= 3")
    try:
        mu = parse_partition(req.partition)
    except ValueError as e:
        raise UsageError(f"--partition: {e}") from None
    v = toroidal.embed_H(mu, req.r, store)
    doc = {"command": req.command, "r": req.r, "partition": req.partition, "vector": vertex_terms(v.comps)}
    return _with_report(doc, toroidal.eigen_check(mu, req.r, store))


def _verify(req: Request, store: ResultCache) -> Tuple[Dict[str, Any], int]:
    _require(req, "suite")
    state = SuiteRunner(jobs=req.jobs, store=store).invoke(req.suite, build_suite(req.suite))
    return state.to_document(), EXIT_OK if state.ok else EXIT_FAILED


_HANDLERS = {
    "compute": _compute,
    "kostka": _kostka,
    "nabla": _nabla,
    "norms": _norms,
    "conjectures": _conjectures,
    "factor": _factor,
    "toroidal-eigen": _toroidal_eigen,
    "verify": _verify,
}


def run(req: Request) -> Tuple[Dict[str, Any], int]:
    """Execute one request; returns the JSON document and the exit code."""
    store = ResultCache(req.cache_dir)
    try:
        return _HANDLERS[req.command](req, store)
    except (SolverDegenerateError, InvariantViolationError) as e:
        logger.warning("%s: %s", type(e).__name__, e)
        return {"command": req.command, "error": str(e)}, EXIT_FAILED


def _usage(e: ValueError) -> int:
    sys.stderr.write(f"wreathmac: {e}\n")
    sys.stdout.write(to_json({"error": str(e)}))
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    configure_logging(get_settings())
    args: List[str] = list(sys.argv[1:] if argv is None else argv)
    try:
        req = Request.parse(args)
    except ValueError as e:  # argparse and pydantic validation
        return _usage(e)
    try:
        doc, code = run(req)
    except UsageError as e:
        return _usage(e)
    sys.stdout.write(to_json(doc))
    return code
