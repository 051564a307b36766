"""Symmetric functions in one alphabet over Q(q, t).

Values are stored in the power-sum basis.  Schur and monomial expansions go
through Murnaghan-Nakayama characters and the p-to-m transition matrix.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Dict, Iterable, List, Literal, Mapping, Optional, Tuple, Union

import sympy

from .exactalg import QT, LaurentPoly2, RatFn2, as_ratfn
from .partcomb import Partition, cells, hook_data, n_statistic, partition, partitions_of

logger = logging.getLogger(__name__)

Coeff = Union[RatFn2, LaurentPoly2, int, Fraction]


class NonSymmetricInputError(ValueError):
    pass


# ---------------------------------------------------------------- combinatorial tables

def merge(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted(lam + mu, reverse=True))


@lru_cache(maxsize=None)
def z_lambda(lam: Partition) -> int:
    out = 1
    for part in set(lam):
        m = lam.count(part)
        out *= part ** m
        for k in range(2, m + 1):
            out *= k
    return out


@lru_cache(maxsize=None)
def mn_character(lam: Partition, rho: Partition) -> int:
    """chi^lam(rho) by the Murnaghan-Nakayama rule on beta-numbers."""
    if sum(lam) != sum(rho):
        return 0
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    total = 0
    for x in beta:
        y = x - k
        if y < 0 or y in occupied:
            continue
        sign = -1 if sum(1 for z in beta if y < z < x) % 2 else 1
        moved = sorted((occupied - {x}) | {y}, reverse=True)
        total += sign * mn_character(partition(moved[i] - (ell - 1 - i) for i in range(ell)), rest)
    return total


@lru_cache(maxsize=None)
def _p_to_m_count(rho: Partition, bins: Tuple[int, ...]) -> int:
    if not rho:
        return 1 if not any(bins) else 0
    k, rest = rho[0], rho[1:]
    total = 0
    for j, room in enumerate(bins):
        if room >= k:
            total += _p_to_m_count(rest, bins[:j] + (room - k,) + bins[j + 1:])
    return total


@lru_cache(maxsize=None)
def _m_in_p(n: int) -> Dict[Partition, Dict[Partition, Fraction]]:
    parts = partitions_of(n)
    mat = sympy.Matrix(len(parts), len(parts), lambda i, j: _p_to_m_count(parts[i], parts[j]))
    inv = mat.inv()
    out: Dict[Partition, Dict[Partition, Fraction]] = {}
    for j, lam in enumerate(parts):
        col = {}
        for i, rho in enumerate(parts):
            v = inv[j, i]
            if v != 0:
                col[rho] = Fraction(int(v.p), int(v.q))
        out[lam] = col
    return out


# ---------------------------------------------------------------- the algebra

class SymFn:
    """Finite sum of power sums p_lambda with RatFn2 coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Partition, Coeff]] = None) -> None:
        clean: Dict[Partition, RatFn2] = {}
        if terms:
            for lam, c in terms.items():
                rc = as_ratfn(c)
                if not rc.is_zero():
                    clean[partition(lam)] = rc
        self.terms = clean

    @classmethod
    def zero(cls) -> "SymFn":
        return cls()

    @classmethod
    def one(cls) -> "SymFn":
        return cls({(): 1})

    @classmethod
    def p(cls, *lam: int) -> "SymFn":
        return cls({partition(lam): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({sum(lam) for lam in self.terms})

    def homogeneous(self, d: int) -> "SymFn":
        return SymFn({lam: c for lam, c in self.terms.items() if sum(lam) == d})

    def coefficient(self, lam: Partition) -> RatFn2:
        return self.terms.get(partition(lam), RatFn2.zero())

    def __add__(self, other: "SymFn") -> "SymFn":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFn(out)

    def __neg__(self) -> "SymFn":
        return SymFn({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymFn") -> "SymFn":
        return self + (-other)

    def __mul__(self, other: Union["SymFn", Coeff]) -> "SymFn":
        if not isinstance(other, SymFn):
            c = as_ratfn(other)
            return SymFn({lam: v * c for lam, v in self.terms.items()})
        out: Dict[Partition, RatFn2] = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                key = merge(l1, l2)
                v = c1 * c2
                out[key] = out[key] + v if key in out else v
        return SymFn(out)

    __rmul__ = __mul__

    def map_coeffs(self, fn: Callable[[RatFn2], RatFn2]) -> "SymFn":
        return SymFn({lam: fn(c) for lam, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFn):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def to_schur(self) -> Dict[Partition, RatFn2]:
        return to_schur(self)

    def __str__(self) -> str:
        terms = sorted(to_schur(self).items(), key=lambda kv: (sum(kv[0]), [-x for x in kv[0]]))
        return " + ".join(f"({c})*s{list(lam)}" for lam, c in terms) or "0"

    __repr__ = __str__


@lru_cache(maxsize=None)
def _schur_p(lam: Partition) -> Dict[Partition, Fraction]:
    n = sum(lam)
    out = {}
    for rho in partitions_of(n):
        chi = mn_character(lam, rho)
        if chi:
            out[rho] = Fraction(chi, z_lambda(rho))
    return out


def schur(lam: Iterable[int]) -> SymFn:
    return SymFn(_schur_p(partition(lam)))


def complete_h(n: int) -> SymFn:
    if n < 0:
        return SymFn.zero()
    return SymFn({rho: Fraction(1, z_lambda(rho)) for rho in partitions_of(n)})


def elementary_e(n: int) -> SymFn:
    if n < 0:
        return SymFn.zero()
    return SymFn({rho: Fraction((-1) ** (n - len(rho)), z_lambda(rho)) for rho in partitions_of(n)})


def monomial_m(lam: Iterable[int]) -> SymFn:
    lam = partition(lam)
    return SymFn(_m_in_p(sum(lam))[lam])


def from_schur(coeffs: Mapping[Partition, Coeff]) -> SymFn:
    out = SymFn.zero()
    for lam, c in coeffs.items():
        out = out + schur(lam) * c
    return out


def to_schur(f: SymFn) -> Dict[Partition, RatFn2]:
    out: Dict[Partition, RatFn2] = {}
    for d in f.degrees():
        for lam in partitions_of(d):
            acc = RatFn2.zero()
            for rho, c in f.terms.items():
                if sum(rho) == d:
                    chi = mn_character(lam, rho)
                    if chi:
                        acc = acc + c * chi
            if not acc.is_zero():
                out[lam] = acc
    return out


def to_monomial(f: SymFn) -> Dict[Partition, RatFn2]:
    out: Dict[Partition, RatFn2] = {}
    for rho, c in f.terms.items():
        for lam in partitions_of(sum(rho)):
            k = _p_to_m_count(rho, lam)
            if k:
                out[lam] = out[lam] + c * k if lam in out else c * k
    return {lam: c for lam, c in out.items() if not c.is_zero()}


def pair_hall(f: SymFn, g: SymFn) -> RatFn2:
    acc = RatFn2.zero()
    for lam, c in f.terms.items():
        if lam in g.terms:
            acc = acc + c * g.terms[lam] * z_lambda(lam)
    return acc


# ---------------------------------------------------------------- plethysm

def pleth_sub(f: SymFn, A: Coeff, B: Coeff = 0) -> SymFn:
    """f[AX + B]: p_n -> A(q^n, t^n) p_n + B(q^n, t^n)."""
    A, B = as_ratfn(A), as_ratfn(B)
    images: Dict[int, Tuple[RatFn2, RatFn2]] = {}
    out: Dict[Partition, RatFn2] = {}
    for rho, c in f.terms.items():
        partial: Dict[Partition, RatFn2] = {(): c}
        for k in rho:
            if k not in images:
                images[k] = (A.power_substitute(k), B.power_substitute(k))
            ak, bk = images[k]
            nxt: Dict[Partition, RatFn2] = {}
            for key, v in partial.items():
                if not ak.is_zero():
                    kk = merge(key, (k,))
                    nxt[kk] = nxt[kk] + v * ak if kk in nxt else v * ak
                if not bk.is_zero():
                    nxt[key] = nxt[key] + v * bk if key in nxt else v * bk
            partial = nxt
        for key, v in partial.items():
            out[key] = out[key] + v if key in out else v
    return SymFn(out)


def _p_perp_once(k: int, f: Dict[Partition, RatFn2]) -> Dict[Partition, RatFn2]:
    out: Dict[Partition, RatFn2] = {}
    for lam, c in f.items():
        m = lam.count(k)
        if not m:
            continue
        rest = list(lam)
        rest.remove(k)
        key = tuple(rest)
        v = c * (k * m)
        out[key] = out[key] + v if key in out else v
    return out


def perp(g: SymFn, f: SymFn) -> SymFn:
    """Hall adjoint of multiplication by g, applied to f."""
    out = SymFn.zero()
    top = max(f.degrees(), default=0)
    for sigma, c in g.terms.items():
        if sum(sigma) > top:
            continue
        cur = dict(f.terms)
        for k in sigma:
            cur = _p_perp_once(k, cur)
            if not cur:
                break
        if cur:
            out = out + SymFn(cur) * c
    return out


@lru_cache(maxsize=None)
def h_of_alphabet(n: int, A: RatFn2) -> SymFn:
    """h_n[A X]."""
    return pleth_sub(complete_h(n), A)


@dataclass(frozen=True)
class VertexHalfSpec:
    """One half of Omega[z A X] Omega[z^-1 B X]^perp."""

    side: Literal["creation", "annihilation"]
    alphabet: RatFn2


def vertex_mode(creation: VertexHalfSpec, annihilation: VertexHalfSpec, k: int, f: SymFn) -> SymFn:
    """V_k f with V_k = sum over l - m = k of h_l[AX] h_m[BX]^perp."""
    if creation.side != "creation" or annihilation.side != "annihilation":
        raise ValueError("vertex_mode expects a creation half and an annihilation half")
    out = SymFn.zero()
    for d in f.degrees():
        fd = f.homogeneous(d)
        for m in range(0, d + 1):
            ell = k + m
            if ell < 0:
                continue
            inner = perp(h_of_alphabet(m, annihilation.alphabet), fd)
            if inner.is_zero():
                continue
            out = out + h_of_alphabet(ell, creation.alphabet) * inner
    return out


def _qt() -> Tuple[RatFn2, RatFn2]:
    return RatFn2.gens(QT)


def D0(f: SymFn) -> SymFn:
    """Constant term of Omega[z(t-1)X] Omega[z^-1 (q-1)/t X]^perp."""
    q, t = _qt()
    return vertex_mode(VertexHalfSpec("creation", t - 1), VertexHalfSpec("annihilation", (q - 1) / t), 0, f)


def D_tilde(f: SymFn) -> SymFn:
    q, t = _qt()
    return vertex_mode(VertexHalfSpec("creation", RatFn2(-1)), VertexHalfSpec("annihilation", (1 - q) * (1 - t)), 0, f)


def D_tilde_star(f: SymFn) -> SymFn:
    q, t = _qt()
    return vertex_mode(
        VertexHalfSpec("creation", RatFn2(1)),
        VertexHalfSpec("annihilation", -(1 - q.inverse()) * (1 - t.inverse())),
        0,
        f,
    )


# ---------------------------------------------------------------- Macdonald functions

def pair_qt_classical(f: SymFn, g: SymFn) -> RatFn2:
    """<p_lam, p_mu>_{q,t} = delta z_lam prod (1 - q^lam_i)/(1 - t^lam_i)."""
    q, t = _qt()
    acc = RatFn2.zero()
    for lam, c in f.terms.items():
        if lam not in g.terms:
            continue
        w = RatFn2(z_lambda(lam))
        for k in lam:
            w = w * (1 - q ** k) / (1 - t ** k)
        acc = acc + c * g.terms[lam] * w
    return acc


@lru_cache(maxsize=None)
def _macdonald_P_degree(n: int) -> Dict[Partition, SymFn]:
    order = list(reversed(partitions_of(n)))
    done: Dict[Partition, SymFn] = {}
    norms: Dict[Partition, RatFn2] = {}
    for mu in order:
        m = monomial_m(mu)
        p = m
        for lam, pl in done.items():
            coef = pair_qt_classical(m, pl) / norms[lam]
            if not coef.is_zero():
                p = p - pl * coef
        done[mu] = p
        norms[mu] = pair_qt_classical(p, p)
    logger.debug("Macdonald P computed in degree %d", n)
    return done


def macdonald_P(mu: Iterable[int]) -> SymFn:
    mu = partition(mu)
    return _macdonald_P_degree(sum(mu))[mu]


def macdonald_J(mu: Iterable[int]) -> SymFn:
    mu = partition(mu)
    q, t = _qt()
    c = RatFn2.one()
    for cell in cells(mu):
        a, l, _ = hook_data(mu, cell)
        c = c * (1 - q ** a * t ** (l + 1))
    return macdonald_P(mu) * c


@lru_cache(maxsize=None)
def tilde_H(mu: Partition) -> SymFn:
    """t^{n(mu)} J_mu[X/(1-t)] with t -> 1/t."""
    mu = partition(mu)
    _, t = _qt()
    j = pleth_sub(macdonald_J(mu), 1 / (1 - t))
    flipped = j.map_coeffs(lambda c: c.substitute_exponents((1, 0, 0, -1)))
    return flipped * RatFn2.monomial(0, n_statistic(mu))


# ---------------------------------------------------------------- finitely many variables

Poly = Dict[Tuple[int, ...], RatFn2]


def _padd(p: Poly, e: Tuple[int, ...], c: RatFn2) -> None:
    if e in p:
        v = p[e] + c
        if v.is_zero():
            del p[e]
        else:
            p[e] = v
    elif not c.is_zero():
        p[e] = c


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            _padd(out, tuple(x + y for x, y in zip(e1, e2)), c1 * c2)
    return out


def _linear(N: int, terms: Iterable[Tuple[int, RatFn2]]) -> Poly:
    out: Poly = {}
    for idx, c in terms:
        e = [0] * N
        e[idx] = 1
        _padd(out, tuple(e), c)
    return out


def _divide_by_difference(p: Poly, i: int, j: int) -> Poly:
    """Exact quotient p / (x_i - x_j)."""
    rem = dict(p)
    quot: Poly = {}
    while rem:
        e = max(rem, key=lambda x: x[i])
        if e[i] == 0:
            raise ArithmeticError(f"polynomial not divisible by x{i} - x{j}")
        c = rem[e]
        lower = list(e)
        lower[i] -= 1
        _padd(quot, tuple(lower), c)
        del rem[e]
        raised = list(lower)
        raised[j] += 1
        _padd(rem, tuple(raised), c)
    return quot


def is_symmetric(p: Poly, N: int) -> bool:
    for k in range(N - 1):
        for e, c in p.items():
            swapped = list(e)
            swapped[k], swapped[k + 1] = swapped[k + 1], swapped[k]
            if p.get(tuple(swapped)) != c:
                return False
    return True


def monomial_poly(lam: Iterable[int], N: int) -> Poly:
    lam = partition(lam)
    if len(lam) > N:
        return {}
    padded = lam + (0,) * (N - len(lam))
    return {e: RatFn2.one() for e in set(permutations(padded))}


def poly_from_symfn(f: SymFn, N: int) -> Poly:
    out: Poly = {}
    for lam, c in to_monomial(f).items():
        for e, v in monomial_poly(lam, N).items():
            _padd(out, e, v * c)
    return out


def monomial_coefficients(p: Poly) -> Dict[Partition, RatFn2]:
    return {partition(e): c for e, c in p.items() if list(e) == sorted(e, reverse=True)}


def macdonald_MN(N: int, f: Poly) -> Poly:
    """sum_k prod_{l != k} (t x_k - x_l)/(x_k - x_l) T_{q, x_k} f."""
    if not is_symmetric(f, N):
        raise NonSymmetricInputError("Macdonald operator needs a symmetric polynomial")
    q, t = _qt()
    zero = tuple([0] * N)
    total: Poly = {}
    for k in range(N):
        shifted: Poly = {e: c * q ** e[k] for e, c in f.items()}
        factor: Poly = {zero: RatFn2.one()}
        for ell in range(N):
            if ell != k:
                factor = _pmul(factor, _linear(N, [(k, t), (ell, RatFn2(-1))]))
        for a in range(N):
            for b in range(a + 1, N):
                if k not in (a, b):
                    factor = _pmul(factor, _linear(N, [(a, RatFn2(1)), (b, RatFn2(-1))]))
        sign = -1 if k % 2 else 1
        for e, c in _pmul(factor, shifted).items():
            _padd(total, e, c * sign)
    for a in range(N):
        for b in range(a + 1, N):
            total = _divide_by_difference(total, a, b)
    return total


def macdonald_MN_matrix(N: int, degree: int) -> Dict[Partition, Dict[Partition, RatFn2]]:
    """Columns: monomial expansion of M_N m_lam for all lam with at most N parts, |lam| <= degree."""
    out: Dict[Partition, Dict[Partition, RatFn2]] = {}
    for d in range(degree + 1):
        for lam in partitions_of(d):
            if len(lam) > N:
                continue
            out[lam] = monomial_coefficients(macdonald_MN(N, monomial_poly(lam, N)))
    return out
