from __future__ import annotations

import pytest

from wreathmac.services.exactalg import RatFn2, as_ratfn
from wreathmac.services.partcomb import A_poly
from wreathmac.services.symfn import (
    D0,
    D_tilde,
    D_tilde_star,
    NonSymmetricInputError,
    SymFn,
    complete_h,
    elementary_e,
    macdonald_MN,
    macdonald_P,
    monomial_poly,
    pair_hall,
    perp,
    pleth_sub,
    poly_from_symfn,
    schur,
    tilde_H,
    to_schur,
)


def qt() -> tuple:
    return RatFn2.gens()


def test_modified_macdonald_small_cases() -> None:
    q, t = qt()
    assert to_schur(tilde_H((2,))) == {(2,): RatFn2.one(), (1, 1): q}
    assert to_schur(tilde_H((1, 1))) == {(2,): RatFn2.one(), (1, 1): t}
    h21 = to_schur(tilde_H((2, 1)))
    assert h21 == {(3,): RatFn2.one(), (2, 1): q + t, (1, 1, 1): q * t}, f"H_21 = {h21}"


def test_macdonald_P_two() -> None:
    q, t = qt()
    P2 = macdonald_P((2,))
    expected = schur((2,)) + schur((1, 1)) * ((1 + q) * (1 - t) / (1 - q * t) - 1)
    assert P2 == expected, f"P_2 = {to_schur(P2)}"
    assert macdonald_P((1, 1)) == elementary_e(2)


@pytest.mark.parametrize("mu", [(1,), (2,), (1, 1), (2, 1)])
def test_tilde_D_operators_are_diagonal(mu: tuple) -> None:
    H = tilde_H(mu)
    assert D_tilde(H) == H * as_ratfn(A_poly(mu)), f"D~ on H_{mu}"
    assert D_tilde_star(H) == H * as_ratfn(A_poly(mu, inverse=True)), f"D~* on H_{mu}"


@pytest.mark.parametrize("mu", [(1,), (2,), (1, 1)])
def test_D0_eigenvalue_on_P(mu: tuple) -> None:
    P = macdonald_P(mu)
    eigen = as_ratfn(A_poly(mu)).substitute_exponents((1, 0, 0, -1))
    assert D0(P) == P * eigen, f"D_0 on P_{mu}"


def test_plethystic_substitution() -> None:
    q, t = qt()
    p1 = SymFn.p(1)
    assert pleth_sub(p1, q, 1) == p1 * q + SymFn.one()
    p2 = SymFn.p(2)
    assert pleth_sub(p2, 1 - t) == p2 * (1 - t ** 2)
    assert pleth_sub(complete_h(2), 1, 0) == complete_h(2)


def test_skewing_is_hall_adjoint() -> None:
    h2 = complete_h(2)
    assert perp(SymFn.p(1), h2) == complete_h(1)
    assert pair_hall(schur((2, 1)), schur((2, 1))) == 1


def test_finite_variable_operator() -> None:
    q, t = qt()
    N = 2
    P = poly_from_symfn(macdonald_P((1,)), N)
    out = macdonald_MN(N, P)
    eigen = q * t + 1
    for e, c in out.items():
        assert c == P.get(e, RatFn2.zero()) * eigen, f"M_2 eigenvalue at {e}"
    with pytest.raises(NonSymmetricInputError):
        macdonald_MN(N, {(1, 0): RatFn2.one()})
    assert monomial_poly((1,), 2) == {(1, 0): RatFn2.one(), (0, 1): RatFn2.one()}
