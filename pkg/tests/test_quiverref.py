from __future__ import annotations

import random

import pytest

from wreathmac.services import quiverref, wreath
from wreathmac.services.exactalg import CycPoly, LaurentPoly2
from wreathmac.services.partcomb import multipartitions_of, tau_w
from wreathmac.verify.cases import quiver_chain_expected


def worked_key():
    return wreath.make_key(3, "t[0,1,-1]", ((1,), (), (1,)))


def test_reflection_chain_matches_worked_example() -> None:
    key = worked_key()
    big = tau_w(key.w, key.mu)
    assert big == (4, 4)
    chain = quiverref.B_chain(quiverref.seed_character(big, 3), [2, 1, 0, 1])
    assert len(chain) == 5
    for n, (got, want) in enumerate(zip(chain, quiver_chain_expected())):
        assert got == want, f"step {n}: {got} != {want}"
    assert quiverref.B_w(key) == chain[-1]


def test_nabla_eigenvalues() -> None:
    q, t = LaurentPoly2.gens()
    key = worked_key()
    got = [quiverref.nabla_eigen(key, i) for i in range(3)]
    assert got == [q * t, q ** 2 * t, t], f"eigenvalues {got}"


def test_quiver_data_and_procesi() -> None:
    key = worked_key()
    report = quiverref.quiver_data_check(key)
    assert report.ok, f"quiver data: {report.first_failure()}"
    report = quiverref.procesi_normalization_check(key)
    assert report.ok, f"procesi: {report.first_failure()}"


def test_procesi_rejects_empty() -> None:
    key = wreath.make_key(2, "", ((), ()))
    with pytest.raises(ValueError):
        quiverref.procesi_normalization_check(key)


def test_quiver_data_small_r2() -> None:
    for mu in multipartitions_of(2, 2):
        key = wreath.make_key(2, "s1 s0", mu)
        report = quiverref.quiver_data_check(key)
        assert report.ok, f"{key.canonical_json()}: {report.first_failure()}"


@pytest.mark.parametrize("r", [2, 3, 4])
def test_hecke_and_braid_relations(r: int) -> None:
    rng = random.Random(17 + r)
    for _ in range(25):
        f = quiverref.random_cycpoly(r, rng)
        for i in range(r):
            assert quiverref.hecke_holds(i, f), f"hecke fails at i={i} for {f}"
            for j in range(r):
                if i != j and r >= 3:
                    assert quiverref.braid_holds(i, j, f), f"braid fails at ({i},{j})"


def test_braid_needs_rank_three() -> None:
    f = CycPoly(2, [LaurentPoly2.monomial(0, 0), LaurentPoly2.monomial(1, 0)])
    with pytest.raises(ValueError):
        quiverref.braid_holds(0, 1, f)


def test_reflection_only_touches_one_coefficient() -> None:
    q, t = LaurentPoly2.gens()
    f = CycPoly(3, [q, t, q * t])
    g = quiverref.R_star(1, f)
    assert g.coefficient(0) == q and g.coefficient(2) == q * t
    assert g.coefficient(1) == -(q ** -1) + t ** -1 * q * t + q ** -1 * q


def test_B_w_ignores_the_choice_of_reduced_word() -> None:
    key = worked_key()
    seed = quiverref.seed_character(tau_w(key.w, key.mu), 3)
    ends = [quiverref.B_chain(seed, word)[-1] for word in ([2, 1, 0, 1], [2, 0, 1, 0])]
    assert ends[0] == ends[1], f"{ends[0]} != {ends[1]}"
    assert quiverref.B_w(key, [2, 0, 1, 0]) == quiverref.B_w(key)
