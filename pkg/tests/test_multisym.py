from __future__ import annotations

from wreathmac.services.exactalg import MatRF, RatFn2
from wreathmac.services.multisym import (
    MultiSymFn,
    chi_matrix,
    chi_perm,
    down,
    h_of_alphabet,
    matrix_plethysm,
    neg,
    omega,
    pair_hall,
    pair_qt,
    perm_plethysm,
    perp,
    schur,
    to_schur,
    vertex_mode,
)


def p(k: int, i: int, r: int = 3) -> MultiSymFn:
    return MultiSymFn.p(r, k, i)


def slot(i: int, r: int = 3) -> tuple:
    return tuple(RatFn2.one() if j == i else RatFn2.zero() for j in range(r))


def test_matrix_plethysm_column_convention() -> None:
    q, _ = RatFn2.gens()
    M = MatRF.identity(3) - chi_matrix(3, -1) * q
    image = matrix_plethysm(M, p(1, 0))
    assert image == p(1, 0) - p(1, 2) * q, f"unexpected image {image}"
    squared = matrix_plethysm(M, p(2, 0))
    assert squared == p(2, 0) - p(2, 2) * q ** 2, "p_2 sees q^2"


def test_permutation_plethysm_moves_slots() -> None:
    assert perm_plethysm(chi_perm(3), p(1, 0)) == p(1, 1)
    assert neg(p(1, 1)) == p(1, 2)
    assert neg(p(2, 0)) == p(2, 0)


def test_omega_and_down() -> None:
    q, _ = RatFn2.gens()
    assert omega(p(2, 0)) == -p(2, 0)
    assert omega(p(1, 0) * p(1, 1)) == p(1, 0) * p(1, 1)
    assert down(p(1, 1) * q) == p(1, 2) * q.inverse()


def test_schur_basis_and_hall_pairing() -> None:
    s2 = schur(((2,), (), ()))
    s11 = schur(((1, 1), (), ()))
    assert pair_hall(s2, s2) == 1
    assert pair_hall(s2, s11).is_zero()
    assert to_schur(p(1, 0) * p(1, 1)) == {((1,), (1,), ()): RatFn2.one()}
    assert to_schur(schur(((2, 1), (1,), ()))) == {((2, 1), (1,), ()): RatFn2.one()}


def test_skewing_and_complete_functions() -> None:
    assert perp(p(1, 0), p(1, 0) * p(1, 0)) == p(1, 0) * 2
    assert perp(p(1, 1), p(1, 0)).is_zero()
    assert to_schur(h_of_alphabet(2, slot(0))) == {((2,), (), ()): RatFn2.one()}


def test_vertex_mode_creation_only() -> None:
    one = MultiSymFn.one(3)
    zero_alphabet = tuple(RatFn2.zero() for _ in range(3))
    assert vertex_mode(slot(0), zero_alphabet, 1, one) == p(1, 0)
    assert vertex_mode(slot(0), zero_alphabet, -1, one).is_zero()


def test_qt_pairing_for_one_color() -> None:
    q, t = RatFn2.gens()
    value = pair_qt(MultiSymFn.p(1, 1, 0), MultiSymFn.p(1, 1, 0))
    assert value == (1 - q) * (1 - t), f"<p1, p1>_qt = {value}"
