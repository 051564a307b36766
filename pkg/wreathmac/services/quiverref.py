"""Reflection operators on R(Gamma x T) and the tautological characters B^w_mu.

Characters are CycPoly values graded by q -> q chi^-1, t -> t chi.  The operator
R*_i only rewrites the chi^i coefficient:
    g_i = q^-1 t^-1 [i == 0] - q^-1 t^-1 f_i + t^-1 f_{i+1} + q^-1 f_{i-1}.
"""
from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import List, Optional, Sequence

from wreathmac.models.keys import WreathKey
from wreathmac.models.report import Report

from .cache import ResultCache
from .exactalg import CycPoly, LaurentPoly2, RatFn2
from .multisym import schur_coefficient
from .partcomb import B_poly, Partition, tau_w
from .wreath import e_eigenvalue, solve_H

logger = logging.getLogger(__name__)

QuiverChar = CycPoly


class InvariantViolationError(RuntimeError):
    pass


def R_star(i: int, f: CycPoly) -> CycPoly:
    q, t = LaurentPoly2.gens()
    qi, ti = q ** -1, t ** -1
    g = -(qi * ti) * f.coefficient(i) + ti * f.coefficient(i + 1) + qi * f.coefficient(i - 1)
    if i % f.r == 0:
        g = g + qi * ti
    return f.with_coefficient(i, g)


def seed_character(mu: Partition, r: int) -> CycPoly:
    """B_mu(q chi^-1, t chi)."""
    return CycPoly.from_graded(B_poly(mu), r)


def B_chain(seed: CycPoly, word: Sequence[int]) -> List[CycPoly]:
    """Every intermediate value of R*_{i_1} ... R*_{i_l} seed, innermost first."""
    out = [seed]
    for i in reversed(list(word)):
        out.append(R_star(i, out[-1]))
    return out


def B_w(key: WreathKey, word: Optional[Sequence[int]] = None) -> QuiverChar:
    w = key.w
    seed = seed_character(tau_w(w, key.mu), key.r)
    chain = B_chain(seed, w.reduced_word() if word is None else word)
    logger.debug("B chain for %s has %d steps", key.canonical_json(), len(chain) - 1)
    return chain[-1]


def _monomial_product(f: LaurentPoly2, n: int) -> LaurentPoly2:
    """e_n of the multiset of monomials making up f."""
    if any(c <= 0 or c.denominator != 1 for c in f.terms.values()) or sum(f.terms.values()) != n:
        raise InvariantViolationError(f"{f} is not a sum of {n} monomials with coefficient 1")
    a = sum(e[0] * int(c) for e, c in f.terms.items())
    b = sum(e[1] * int(c) for e, c in f.terms.items())
    return LaurentPoly2.monomial(a, b)


def nabla_eigen(key: WreathKey, i: int) -> LaurentPoly2:
    return _monomial_product(B_w(key).coefficient(i), key.n)


def quiver_data_check(key: WreathKey, store: Optional[ResultCache] = None) -> Report:
    """<e_n[X^(i)], H^w_mu> equals the nabla eigenvalue for every residue."""
    H = solve_H(key, store)
    report = Report(title=f"quiver data {key.canonical_json()}")
    for i in range(key.r):
        lhs = e_eigenvalue(H, key.r, key.n, i)
        rhs = nabla_eigen(key, i)
        report.add(f"e_n[X^({i})]", lhs == rhs, lhs=lhs, rhs=rhs)
    return report


def procesi_normalization_check(key: WreathKey, store: Optional[ResultCache] = None) -> Report:
    r, n = key.r, key.n
    if n < 1:
        raise ValueError("the Procesi identities need n >= 1")
    H = solve_H(key, store)
    B = B_w(key)
    rest = (n - 1,) if n > 1 else ()
    report = Report(title=f"procesi {key.canonical_json()}")
    for i in range(r):
        if i == 0:
            # s_{(n-1,1)} reads as 0 when n = 1
            rhs = RatFn2.one()
            if n > 1:
                rhs = rhs + schur_coefficient(H, [(n - 1, 1)] + [()] * (r - 1))
        else:
            lam = [rest] + [()] * (r - 1)
            lam[i] = (1,)
            rhs = schur_coefficient(H, lam)
        lhs = B.coefficient(i)
        report.add(f"[chi^{i}]B", rhs == lhs, lhs=lhs, rhs=rhs)
    return report


def hecke_holds(i: int, f: CycPoly) -> bool:
    """(R*_i - 1)(R*_i + q^-1 t^-1) f == 0."""
    q, t = LaurentPoly2.gens()
    c = (q * t) ** -1
    once = R_star(i, f)
    twice = R_star(i, once)
    return (twice + once * c - once - f * c) == CycPoly(f.r)


def braid_holds(i: int, j: int, f: CycPoly) -> bool:
    """Braid relation of affine type A_{r-1}, r >= 3."""
    r = f.r
    if r < 3:
        raise ValueError(f"affine A_{r - 1} reflections satisfy no braid relation")
    if (i - j) % r in (1, r - 1):
        lhs = R_star(i, R_star(j, R_star(i, f)))
        rhs = R_star(j, R_star(i, R_star(j, f)))
    else:
        lhs = R_star(i, R_star(j, f))
        rhs = R_star(j, R_star(i, f))
    return lhs == rhs


def random_cycpoly(r: int, rng: random.Random, terms: int = 3, spread: int = 2) -> CycPoly:
    coeffs = []
    for _ in range(r):
        coeffs.append(LaurentPoly2({
            (rng.randint(-spread, spread), rng.randint(-spread, spread)): Fraction(rng.randint(-3, 3))
            for _ in range(terms)
        }))
    return CycPoly(r, coeffs)
