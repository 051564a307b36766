from __future__ import annotations

import json
import pickle
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List

import pytest

from wreathmac.models import WreathKey
from wreathmac.services import wreath
from wreathmac.services.cache import ResultCache
from wreathmac.services.exactalg import LaurentPoly2, MatRF, RatFn2
from wreathmac.services.export import parse_multipartition
from wreathmac.services.multisym import MultiSymFn, chi_matrix, matrix_plethysm, schur, to_schur
from wreathmac.services.partcomb import multipartitions_of

GOLDEN = Path(__file__).resolve().parents[1] / "fixtures" / "wreath_golden.json"


def load_golden() -> List[Dict[str, Any]]:
    return json.loads(GOLDEN.read_text(encoding="utf-8"))["cases"]


def laurent(rows: List[List[Any]]) -> LaurentPoly2:
    return LaurentPoly2({(int(a), int(b)): Fraction(c) for a, b, c in rows})


@pytest.mark.parametrize("case", load_golden(), ids=lambda c: f"r{c['r']}-{c['w'] or 'id'}-{c['mu']}")
def test_golden_kostka_tables(case: Dict[str, Any]) -> None:
    key = wreath.make_key(case["r"], case["w"], parse_multipartition(case["mu"]))
    table = wreath.kostka(key)
    expected = {parse_multipartition(lam): laurent(rows) for lam, rows in case["kostka"].items()}
    assert table == expected, f"kostka mismatch for {key.canonical_json()}: {table}"


def test_solution_meets_defining_conditions() -> None:
    key = wreath.make_key(3, "t[0,1,-1]", ((1,), (), (1,)))
    H = wreath.solve_H(key)
    report = wreath.defining_conditions(key, H)
    assert report.ok, f"failed: {report.first_failure()}"


def test_plethysm_of_single_box_in_slot_zero() -> None:
    q, _ = RatFn2.gens()
    key = wreath.make_key(3, "s2 s1 t[1,-1,0]", ((1,), (), ()))
    H = wreath.solve_H(key)
    M = MatRF.identity(3) - chi_matrix(3, -1) * q
    image = matrix_plethysm(M, H)
    assert image == schur(((1,), (), ())) * (1 - q ** 3), f"P(H) = {to_schur(image)}"


def test_kostka_checks_pass_for_small_keys() -> None:
    for mu in multipartitions_of(2, 2):
        key = wreath.make_key(2, "s0", mu)
        report = wreath.kostka_checks(key)
        assert report.ok, f"{key.canonical_json()}: {report.first_failure()}"


def test_gamma_degree() -> None:
    assert wreath.gamma_degree(((1,), (), (2,)), 3) == 1
    assert wreath.gamma_degree(((2,), (), ()), 3) == 0


def test_symmetries_for_degree_one() -> None:
    for mu in multipartitions_of(2, 1):
        key = wreath.make_key(2, "s1", mu)
        report = wreath.check_symmetries(key)
        assert report.ok, f"{key.canonical_json()}: {report.first_failure()}"


def test_norm_and_conjectures() -> None:
    key = wreath.make_key(2, "t[1,-1]", ((1,), ()))
    report = wreath.norm_report(key)
    assert report.ok, f"norm: {report.first_failure()}"
    report = wreath.check_conjectures(key)
    assert report.ok, f"conjectures: {report.first_failure()}"


def test_orthogonality_degree_two() -> None:
    w = wreath.weyl_of("s0", 2)
    report = wreath.orthogonality(2, 2, w)
    assert report.ok, f"orthogonality: {report.first_failure()}"


def test_factor_worked_example() -> None:
    assert wreath.factor_generic(3, ((), (), (2,))) == wreath.worked_factor_example()
    q, t = RatFn2.gens()
    assert wreath.generic_matrix_entry(3, 2, 1) == t
    assert wreath.generic_matrix_entry(3, 0, 2) == q


def test_factor_parameters_keep_qt() -> None:
    for r in (2, 3, 4):
        for i in range(r):
            qa, ta, qb, tb = wreath.factor_parameters(r, i)
            assert (qa + ta, qb + tb) == (1, 1), f"q_{i} t_{i} != qt at r={r}"
    _, ta, _, tb = wreath.factor_parameters(3, 2)
    assert (ta, tb) == (0, 3), "t_2 = t^3 at r = 3"


def test_factor_check_single_box() -> None:
    report = wreath.factor_check(3, ((), (1,), ()))
    assert report.ok, f"factor: {report.first_failure()}"


def test_cache_roundtrip(tmp_path: Path) -> None:
    store = ResultCache(str(tmp_path))
    key = wreath.make_key(2, "s1", ((1,), ()))
    H = wreath.solve_H(key)
    path = store.put(key, H)
    assert path.exists()
    assert store.get(key) == H
    other = key.with_mu(((), (1,)))
    assert store.get(other) is None


def test_keys_reject_bad_shapes() -> None:
    with pytest.raises(ValueError):
        WreathKey(r=2, u=(0, 1), beta=(1, 0), mu=((1,), ()))
    with pytest.raises(ValueError):
        WreathKey(r=2, u=(0, 1), beta=(0, 0), mu=((1, 2), ()))
    assert isinstance(wreath.solve_H(wreath.make_key(1, "", ((1,),))), MultiSymFn)


def test_P_is_monic_and_collapses_at_t_inverse_q() -> None:
    for mu in multipartitions_of(2, 1):
        key = wreath.make_key(2, "s1", mu)
        report = wreath.P_checks(key)
        assert report.ok, f"{key.canonical_json()}: {report.first_failure()}"
    report = wreath.P_orthogonality(2, 1, wreath.weyl_of("s0", 2))
    assert report.ok, f"P orthogonality: {report.first_failure()}"


@pytest.mark.parametrize("w", ["s1", "s0 s1"])
def test_nabla_inverts_through_down(w: str) -> None:
    for mu in multipartitions_of(2, 1):
        key = wreath.make_key(2, w, mu)
        report = wreath.nabla_inversion_check(key)
        assert report.ok, f"{key.canonical_json()}: {report.first_failure()}"


def test_schur_solve_matches_worked_polynomial() -> None:
    q, _ = RatFn2.gens()
    key = wreath.make_key(3, "s2 s1 t[1,-1,0]", ((1,), (), ()))
    coeffs = wreath.solve_schur(key)
    assert coeffs == {((1,), (), ()): RatFn2.one(), ((), (1,), ()): q ** 2, ((), (), (1,)): q}, f"{coeffs}"
    assert wreath.solve_H(key).to_schur() == coeffs


def test_solver_error_pickles() -> None:
    key = wreath.make_key(2, "s1", ((1,), ()))
    err = wreath.SolverDegenerateError("leading coefficient at mu vanishes", key)
    back = pickle.loads(pickle.dumps(err))
    assert back.key == key and str(back) == str(err)
