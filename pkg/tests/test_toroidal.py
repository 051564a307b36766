from __future__ import annotations

import pytest

from wreathmac.services import toroidal
from wreathmac.services.exactalg import SU, RatFn2
from wreathmac.services.multisym import MultiSymFn
from wreathmac.services.toroidal import VertexVec


def vacuum() -> VertexVec:
    return VertexVec.vacuum(3)


def test_cocycle_signs() -> None:
    for r in (3, 4):
        report = toroidal.cocycle_checks(r)
        assert report.ok, f"r={r}: {report.first_failure()}"
    assert toroidal.inverse_sign(toroidal.simple(0, 3)) == -1
    assert toroidal.cocycle(toroidal.simple(2, 3), toroidal.simple(0, 3)) == -1


def test_root_pairings() -> None:
    a1 = toroidal.simple(1, 3)
    assert toroidal.simple(0, 3) == (-1, -1)
    assert [toroidal.coroot_pairing(i, a1) for i in range(3)] == [-1, 2, -1]
    assert toroidal.u_exponent(2, a1) == -1
    assert toroidal.skew_m(1, 0, 3) == 1 and toroidal.skew_m(0, 1, 3) == -1


def test_vertex_vectors_need_matching_roots() -> None:
    with pytest.raises(ValueError):
        VertexVec(3, {(0,): MultiSymFn.one(3, SU)})
    with pytest.raises(ValueError):
        toroidal.act_e(0, 0, VertexVec.vacuum(2))


def test_heisenberg_modes_on_vacuum() -> None:
    v = vacuum()
    assert toroidal.act_h(1, 1, v).is_zero()
    created = toroidal.act_h(1, -1, v)
    assert created == VertexVec(3, {(0, 0): MultiSymFn.p(3, 1, 1).to_su()})
    for i in range(3):
        for j in range(3):
            assert toroidal.heisenberg_holds(i, j, 1, v), f"[h_{i},1, h_{j},-1]"
        assert toroidal.heisenberg_holds(i, i, 2, v)


def test_heisenberg_on_degree_one_vectors() -> None:
    for v in toroidal.test_vectors(3, max_degree=1):
        for i in range(3):
            assert toroidal.heisenberg_holds(i, (i + 1) % 3, 1, v)


def test_h_e_and_e_f_on_vacuum() -> None:
    v = vacuum()
    for i in range(3):
        for j in range(3):
            for k in (1, -1):
                assert toroidal.h_e_holds(i, k, j, 0, v), f"[h_{i},{k}, e_{j},0]"
            for k in (0, -1):
                for l in (0, -1):
                    assert toroidal.e_f_holds(i, k, j, l, v), f"[e_{i},{k}, f_{j},{l}]"


def test_e_mode_shifts_lattice() -> None:
    out = toroidal.act_e(1, -1, vacuum())
    assert set(out.comps) == {(1, 0)}
    assert out.comps[(1, 0)] == MultiSymFn.one(3, SU)


def test_eigen_words() -> None:
    assert len(toroidal.eigen_words(3, 1, True)) == 4
    assert len(toroidal.eigen_words(4, 0, False)) == 8
    _, u = RatFn2.gens(SU)
    assert toroidal.eigen_scalar(3, 1, True) == -(u ** -1)
    assert toroidal.eigen_scalar(3, 0, False) == u ** -1


def test_vacuum_is_an_eigenvector() -> None:
    report = toroidal.eigen_check((), 3)
    assert report.ok, f"vacuum: {report.first_failure()}"


def test_embedding() -> None:
    assert toroidal.embed_H((), 3) == vacuum()
    key, alpha = toroidal.embed_key((3, 3, 2, 2), 3)
    assert alpha == (0, -1)
    assert key.mu == ((1, 1), (), ())
    assert key.beta == (0, -1, 1)


@pytest.mark.parametrize("mu", [(), (1,), (2,)])
def test_fock_weights(mu: tuple) -> None:
    report = toroidal.fock_check(mu, 3)
    assert report.ok, f"{mu}: {report.first_failure()}"


def test_fock_weight_factors() -> None:
    fw = toroidal.fock_weight((1,), 0, 3)
    assert [e for _, e in fw.factors] == [1], "only the removable box has residue 0"
    with pytest.raises(ValueError):
        fw.h_eigenvalue(0)


def test_e_e_on_vacuum() -> None:
    v = vacuum()
    for i in range(3):
        for j in range(3):
            for k in (0, -1):
                for l in (0, -1):
                    assert toroidal.e_e_holds(i, k, j, l, v), f"e-e at ({i},{k}), ({j},{l})"


@pytest.mark.parametrize("mu", [(1,), (2,), (1, 1), (3, 3, 2, 2)])
def test_embedded_H_is_an_eigenvector(mu: tuple) -> None:
    report = toroidal.eigen_check(mu, 3)
    assert report.ok, f"{mu}: {report.first_failure()}"


def test_eigenvalue_labels() -> None:
    s, _ = RatFn2.gens(SU)
    # A_(1) = q + t - qt and only qt sits in residue 0
    assert toroidal.expected_eigenvalue((1,), 3, 0, star=True) == -(s ** -4), "e-words see A(q^-1, t^-1)"
    assert toroidal.expected_eigenvalue((1,), 3, 0, star=False) == -(s ** 4), "f-words see A(q, t)"


def test_serre_on_vacuum() -> None:
    v = vacuum()
    for kind in ("e", "f"):
        for i in range(3):
            for step in (1, -1):
                assert toroidal.serre_holds(kind, i, (i + step) % 3, 0, 1, 0, v), f"serre {kind} i={i} j={(i + step) % 3}"
