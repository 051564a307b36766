from __future__ import annotations

from fractions import Fraction

import pytest

from wreathmac.services.exactalg import (
    SU,
    CycPoly,
    LaurentPoly2,
    MatRF,
    RatFn2,
    SingularMatrixError,
    VariableMismatchError,
    mat_inverse,
    nullspace,
    solve_linear,
    specialize_t_to_inverse_q,
    to_su,
)


def qt() -> tuple:
    return RatFn2.gens()


def test_rational_functions_reduce() -> None:
    q, t = qt()
    f = (1 - q ** 2) / (1 - q)
    assert f == 1 + q, f"unexpected reduction: {f}"
    assert f.is_laurent()
    g = (q - t) / (t - q)
    assert g == -1, f"(q-t)/(t-q) should be -1, got {g}"
    assert (q / t) * (t / q) == 1


def test_rational_functions_have_integer_coefficients() -> None:
    q, _ = qt()
    f = (q + 1) / (2 * q + 1)
    assert str(f) == "(1 + q)/(1 + 2*q)", f"unexpected normal form: {f}"
    g = Fraction(1, 2) * (q + 1) / (-2 * q - 1)
    assert str(g) == "(-1 - q)/(2 + 4*q)", f"unexpected normal form: {g}"
    assert g == -f / 2
    assert all(c.denominator == 1 for c in g.num.terms.values()) and g.den.sorted_terms()[0][1] > 0


def test_involutions_and_substitution() -> None:
    q, t = qt()
    f = (1 + q) / (1 - t)
    assert f.inv() == (1 + q.inverse()) / (1 - t.inverse())
    assert f.swap() == (1 + t) / (1 - q)
    assert f.power_substitute(2) == (1 + q ** 2) / (1 - t ** 2)
    assert specialize_t_to_inverse_q(q * t + t) == 1 + q.inverse()


def test_to_su_maps_q_and_t() -> None:
    q, t = qt()
    s, u = RatFn2.gens(SU)
    assert to_su(q) == s ** 2 * u ** 2
    assert to_su(t) == s ** 2 * u ** -2
    assert to_su(q * t) == s ** 4
    with pytest.raises(VariableMismatchError):
        to_su(s)


def test_laurent_evaluation_and_terms() -> None:
    q, t = LaurentPoly2.gens()
    f = 3 * q ** 2 - q * t ** -1 + 2
    assert f.evaluate(2, 1) == Fraction(12 - 2 + 2)
    assert f.coefficient(1, -1) == -1
    assert f.min_exponents() == (0, -1)
    assert not f.is_monomial() and (q * t).is_monomial()


def test_cyclic_polynomials_split_by_grading() -> None:
    q, t = LaurentPoly2.gens()
    c = CycPoly.from_graded(1 + q + t + q * t, 3)
    assert c.coefficient(0) == 1 + q * t
    assert c.coefficient(1) == t, "t picks up chi"
    assert c.coefficient(2) == q, "q picks up chi^-1"
    assert c.with_coefficient(1, LaurentPoly2.zero()).coefficient(1).is_zero()


def test_matrix_inverse_and_solve() -> None:
    q, t = qt()
    m = MatRF([[1, q], [0, 1]])
    assert mat_inverse(m) == MatRF([[1, -q], [0, 1]])
    assert m * m.inverse() == MatRF.identity(2)
    with pytest.raises(SingularMatrixError):
        mat_inverse(MatRF([[1, q], [1, q]]))
    x = solve_linear([[1, q], [0, t]], [1 + q, t])
    assert x == [RatFn2.one(), RatFn2.one()], f"solution {x}"


def test_nullspace_dimension() -> None:
    q, _ = qt()
    one = RatFn2.one()
    basis = nullspace([[one, q, q ** 2]], 3)
    assert len(basis) == 2, f"expected a 2-dimensional kernel, got {len(basis)}"
    for v in basis:
        assert (v[0] + q * v[1] + q ** 2 * v[2]).is_zero()
