"""Multisymmetric functions: the tensor power Lambda^{(x) I} with I = Z/r.

An element is stored in the tensor power-sum basis p_{lam} = prod_i p_{lam^(i)}[X^(i)].
Matrix plethysms use the column convention
    P_M(p_k[X^(i)]) = sum_j M[j][i](q^k, t^k) p_k[X^(j)],
so that P_{MM'} = P_M o P_{M'} and permutation matrices carry entry 1 at (u(i), i).
"""
from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .exactalg import QT, LaurentPoly2, MatRF, RatFn2, as_ratfn, to_su
from .partcomb import MultiPartition, Partition, multipartitions_of, partition, partitions_of
from .symfn import SymFn, _schur_p, merge, mn_character, z_lambda

logger = logging.getLogger(__name__)

Coeff = Union[RatFn2, LaurentPoly2, int, Fraction]
Alphabet = Tuple[RatFn2, ...]


def _key(mu: Sequence[Sequence[int]]) -> MultiPartition:
    return tuple(partition(c) for c in mu)


def _merge_key(a: MultiPartition, b: MultiPartition) -> MultiPartition:
    return tuple(merge(x, y) for x, y in zip(a, b))


def _accumulate(out: Dict[MultiPartition, RatFn2], key: MultiPartition, value: RatFn2) -> None:
    if key in out:
        v = out[key] + value
        if v.is_zero():
            del out[key]
        else:
            out[key] = v
    elif not value.is_zero():
        out[key] = value


class MultiSymFn:
    """Finite sum of tensor power sums with RatFn2 coefficients."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: Optional[Mapping[MultiPartition, Coeff]] = None) -> None:
        self.r = r
        clean: Dict[MultiPartition, RatFn2] = {}
        if terms:
            for mu, c in terms.items():
                if len(mu) != r:
                    raise ValueError(f"multipartition {mu} does not have {r} components")
                rc = as_ratfn(c)
                if not rc.is_zero():
                    clean[_key(mu)] = rc
        self.terms = clean

    @classmethod
    def zero(cls, r: int) -> "MultiSymFn":
        return cls(r)

    @classmethod
    def one(cls, r: int, vars: str = QT) -> "MultiSymFn":
        return cls(r, {tuple(() for _ in range(r)): RatFn2.one(vars)})

    @classmethod
    def p(cls, r: int, k: int, i: int) -> "MultiSymFn":
        key = [()] * r
        key[i] = (k,)
        return cls(r, {tuple(key): 1})

    def _check(self, other: "MultiSymFn") -> None:
        if other.r != self.r:
            raise ValueError(f"tensor factors differ: r={self.r} vs r={other.r}")

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({sum(sum(c) for c in mu) for mu in self.terms})

    def homogeneous(self, d: int) -> "MultiSymFn":
        return MultiSymFn(self.r, {mu: c for mu, c in self.terms.items() if sum(sum(x) for x in mu) == d})

    def __add__(self, other: "MultiSymFn") -> "MultiSymFn":
        self._check(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            _accumulate(out, mu, c)
        return MultiSymFn(self.r, out)

    def __neg__(self) -> "MultiSymFn":
        return MultiSymFn(self.r, {mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other: "MultiSymFn") -> "MultiSymFn":
        return self + (-other)

    def __mul__(self, other: Union["MultiSymFn", Coeff]) -> "MultiSymFn":
        if not isinstance(other, MultiSymFn):
            c = as_ratfn(other)
            if c.is_zero():
                return MultiSymFn.zero(self.r)
            return MultiSymFn(self.r, {mu: v * c for mu, v in self.terms.items()})
        self._check(other)
        out: Dict[MultiPartition, RatFn2] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _accumulate(out, _merge_key(m1, m2), c1 * c2)
        return MultiSymFn(self.r, out)

    __rmul__ = __mul__

    def __truediv__(self, c: Coeff) -> "MultiSymFn":
        return self * as_ratfn(c).inverse()

    def map_coeffs(self, fn: Callable[[RatFn2], RatFn2]) -> "MultiSymFn":
        return MultiSymFn(self.r, {mu: fn(c) for mu, c in self.terms.items()})

    def inv(self) -> "MultiSymFn":
        return self.map_coeffs(RatFn2.inv)

    def swap(self) -> "MultiSymFn":
        return self.map_coeffs(RatFn2.swap)

    def to_su(self) -> "MultiSymFn":
        return self.map_coeffs(to_su)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiSymFn):
            return NotImplemented
        return self.r == other.r and (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.r, frozenset(self.terms.items())))

    def to_schur(self) -> Dict[MultiPartition, RatFn2]:
        return to_schur(self)

    def __str__(self) -> str:
        items = sorted(to_schur(self).items())
        return " + ".join(f"({c})*s{[list(x) for x in mu]}" for mu, c in items) or "0"

    __repr__ = __str__


# ---------------------------------------------------------------- bases

def from_symfn(f: SymFn, i: int, r: int) -> MultiSymFn:
    """Place a single-alphabet function in tensor slot i."""
    out = {}
    for lam, c in f.terms.items():
        key = [()] * r
        key[i] = lam
        out[tuple(key)] = c
    return MultiSymFn(r, out)


@lru_cache(maxsize=None)
def _tensor_schur_p(mu: MultiPartition) -> Dict[MultiPartition, Fraction]:
    acc: Dict[MultiPartition, Fraction] = {tuple(() for _ in mu): Fraction(1)}
    for i, lam in enumerate(mu):
        nxt: Dict[MultiPartition, Fraction] = {}
        for key, v in acc.items():
            for rho, c in _schur_p(lam).items():
                k = list(key)
                k[i] = rho
                nxt[tuple(k)] = v * c
        acc = nxt
    return acc


def schur(mu: Sequence[Sequence[int]]) -> MultiSymFn:
    mu = _key(mu)
    return MultiSymFn(len(mu), _tensor_schur_p(mu))


def from_schur(r: int, coeffs: Mapping[MultiPartition, Coeff]) -> MultiSymFn:
    out: Dict[MultiPartition, RatFn2] = {}
    for mu, c in coeffs.items():
        rc = as_ratfn(c)
        for key, v in _tensor_schur_p(_key(mu)).items():
            _accumulate(out, key, rc * v)
    return MultiSymFn(r, out)


def _tensor_character(lam: MultiPartition, rho: MultiPartition) -> int:
    out = 1
    for a, b in zip(lam, rho):
        if sum(a) != sum(b):
            return 0
        out *= mn_character(a, b)
        if not out:
            return 0
    return out


def to_schur(f: MultiSymFn) -> Dict[MultiPartition, RatFn2]:
    out: Dict[MultiPartition, RatFn2] = {}
    for d in f.degrees():
        for lam in multipartitions_of(f.r, d):
            acc = RatFn2.zero()
            for rho, c in f.terms.items():
                chi = _tensor_character(lam, rho)
                if chi:
                    acc = acc + c * chi
            if not acc.is_zero():
                out[lam] = acc
    return out


def schur_coefficient(f: MultiSymFn, lam: Sequence[Sequence[int]]) -> RatFn2:
    lam = _key(lam)
    acc = RatFn2.zero()
    for rho, c in f.terms.items():
        chi = _tensor_character(lam, rho)
        if chi:
            acc = acc + c * chi
    return acc


def z_multi(mu: MultiPartition) -> int:
    out = 1
    for lam in mu:
        out *= z_lambda(lam)
    return out


# ---------------------------------------------------------------- plethysms

def substitute_generators(f: MultiSymFn, image: Callable[[int, int], Dict[int, RatFn2]]) -> MultiSymFn:
    """Algebra map sending p_k[X^(i)] to sum_j image(k, i)[j] p_k[X^(j)]."""
    r = f.r
    cache: Dict[Tuple[int, int], Dict[int, RatFn2]] = {}
    out: Dict[MultiPartition, RatFn2] = {}
    empty = tuple(() for _ in range(r))
    for mu, c in f.terms.items():
        partial: Dict[MultiPartition, RatFn2] = {empty: c}
        for i, lam in enumerate(mu):
            for k in lam:
                if (k, i) not in cache:
                    cache[(k, i)] = {j: v for j, v in image(k, i).items() if not v.is_zero()}
                nxt: Dict[MultiPartition, RatFn2] = {}
                for key, v in partial.items():
                    for j, coeff in cache[(k, i)].items():
                        kk = list(key)
                        kk[j] = merge(kk[j], (k,))
                        _accumulate(nxt, tuple(kk), v * coeff)
                partial = nxt
        for key, v in partial.items():
            _accumulate(out, key, v)
    return MultiSymFn(r, out)


def matrix_plethysm(M: MatRF, f: MultiSymFn) -> MultiSymFn:
    if M.r != f.r:
        raise ValueError(f"dimension mismatch: {M.r}x{M.r} matrix on r={f.r}")
    return substitute_generators(f, lambda k, i: {j: M[j, i].power_substitute(k) for j in range(M.r)})


def perm_plethysm(u: Sequence[int], f: MultiSymFn) -> MultiSymFn:
    """Move tensor slot i to slot u(i)."""
    out = {}
    for mu, c in f.terms.items():
        key: List[Partition] = [()] * f.r
        for i, lam in enumerate(mu):
            key[u[i]] = lam
        out[tuple(key)] = c
    return MultiSymFn(f.r, out)


def neg_perm(r: int) -> Tuple[int, ...]:
    return tuple((-i) % r for i in range(r))


def w0_perm(r: int) -> Tuple[int, ...]:
    return tuple(r - 1 - i for i in range(r))


def chi_perm(r: int, power: int = 1) -> Tuple[int, ...]:
    return tuple((i + power) % r for i in range(r))


def neg(f: MultiSymFn) -> MultiSymFn:
    return perm_plethysm(neg_perm(f.r), f)


def omega(f: MultiSymFn) -> MultiSymFn:
    """omega(p_lam) = (-1)^{|lam| - l(lam)} p_lam, slotwise."""
    out = {}
    for mu, c in f.terms.items():
        d = sum(sum(x) for x in mu)
        ell = sum(len(x) for x in mu)
        out[mu] = -c if (d - ell) % 2 else c
    return MultiSymFn(f.r, out)


def down(f: MultiSymFn) -> MultiSymFn:
    """inv o neg o omega."""
    return omega(neg(f)).inv()


# ---------------------------------------------------------------- matrices

def chi_matrix(r: int, power: int = 1, vars: str = QT) -> MatRF:
    return MatRF.from_perm(chi_perm(r, power), vars)


def neg_matrix(r: int, vars: str = QT) -> MatRF:
    return MatRF.from_perm(neg_perm(r), vars)


def _qt() -> Tuple[RatFn2, RatFn2]:
    return RatFn2.gens(QT)


@lru_cache(maxsize=None)
def A_matrix(r: int) -> MatRF:
    """(id - q chi^-1)^-1 (id - t chi)^-1 neg."""
    q, t = _qt()
    ident = MatRF.identity(r)
    left = (ident - chi_matrix(r, -1) * q).inverse()
    right = (ident - chi_matrix(r, 1) * t).inverse()
    return left * right * neg_matrix(r)


@lru_cache(maxsize=None)
def B_matrix(r: int) -> MatRF:
    """(id - q chi^-1)^-1 (id - t^-1 chi^-1) neg."""
    q, t = _qt()
    ident = MatRF.identity(r)
    left = (ident - chi_matrix(r, -1) * q).inverse()
    return left * (ident - chi_matrix(r, -1) * t.inverse()) * neg_matrix(r)


@lru_cache(maxsize=None)
def _pairing_matrix(kind: str, r: int) -> MatRF:
    base = A_matrix(r) if kind == "qt" else B_matrix(r)
    return base.inverse().transpose()


# ---------------------------------------------------------------- pairings

def pair_hall(f: MultiSymFn, g: MultiSymFn) -> RatFn2:
    if f.r != g.r:
        raise ValueError("pairing needs equal r")
    acc = RatFn2.zero()
    for mu, c in f.terms.items():
        if mu in g.terms:
            acc = acc + c * g.terms[mu] * z_multi(mu)
    return acc


def pair_qt(f: MultiSymFn, g: MultiSymFn) -> RatFn2:
    """<f, g[A^{-1} X]>."""
    return pair_hall(f, matrix_plethysm(_pairing_matrix("qt", f.r), g))


def pair_P(f: MultiSymFn, g: MultiSymFn) -> RatFn2:
    """<f, g[B^{-1} X]>."""
    return pair_hall(f, matrix_plethysm(_pairing_matrix("P", f.r), g))


# ---------------------------------------------------------------- Schur matrices

@lru_cache(maxsize=None)
def schur_matrix(M: MatRF, n: int) -> Tuple[Tuple[RatFn2, ...], ...]:
    """Rows lam, columns mu: [s_lam] P_M(s_mu) over multipartitions of n in canonical order."""
    basis = multipartitions_of(M.r, n)
    index = {mu: i for i, mu in enumerate(basis)}
    cols: List[List[RatFn2]] = []
    for mu in basis:
        image = to_schur(matrix_plethysm(M, schur(mu)))
        col = [RatFn2.zero() for _ in basis]
        for lam, c in image.items():
            col[index[lam]] = c
        cols.append(col)
    logger.debug("schur matrix for r=%d n=%d built (%d x %d)", M.r, n, len(basis), len(basis))
    return tuple(tuple(cols[j][i] for j in range(len(basis))) for i in range(len(basis)))


# ---------------------------------------------------------------- general alphabets

def alphabet_power(k: int, alphabet: Alphabet) -> Dict[int, RatFn2]:
    """p_k of sum_j alphabet[j] X^(j), as slot coefficients."""
    return {j: c.power_substitute(k) for j, c in enumerate(alphabet) if not c.is_zero()}


@lru_cache(maxsize=None)
def h_of_alphabet(n: int, alphabet: Alphabet) -> MultiSymFn:
    """h_n[sum_j alphabet[j] X^(j)]."""
    r = len(alphabet)
    out: Dict[MultiPartition, RatFn2] = {}
    empty = tuple(() for _ in range(r))
    for rho in partitions_of(n):
        partial: Dict[MultiPartition, RatFn2] = {empty: RatFn2(Fraction(1, z_lambda(rho)))}
        for k in rho:
            img = alphabet_power(k, alphabet)
            nxt: Dict[MultiPartition, RatFn2] = {}
            for key, v in partial.items():
                for j, c in img.items():
                    kk = list(key)
                    kk[j] = merge(kk[j], (k,))
                    _accumulate(nxt, tuple(kk), v * c)
            partial = nxt
        for key, v in partial.items():
            _accumulate(out, key, v)
    return MultiSymFn(r, out)


def _perp_generator(k: int, j: int, f: Dict[MultiPartition, RatFn2]) -> Dict[MultiPartition, RatFn2]:
    out: Dict[MultiPartition, RatFn2] = {}
    for mu, c in f.items():
        m = mu[j].count(k)
        if not m:
            continue
        rest = list(mu[j])
        rest.remove(k)
        key = list(mu)
        key[j] = tuple(rest)
        _accumulate(out, tuple(key), c * (k * m))
    return out


def perp(g: MultiSymFn, f: MultiSymFn) -> MultiSymFn:
    """Hall adjoint of multiplication by g, applied to f."""
    top = max(f.degrees(), default=0)
    out: Dict[MultiPartition, RatFn2] = {}
    for sigma, c in g.terms.items():
        if sum(sum(x) for x in sigma) > top:
            continue
        cur = dict(f.terms)
        for j, lam in enumerate(sigma):
            for k in lam:
                cur = _perp_generator(k, j, cur)
                if not cur:
                    break
        for key, v in cur.items():
            _accumulate(out, key, v * c)
    return MultiSymFn(f.r, out)


def vertex_mode(creation: Alphabet, annihilation: Alphabet, k: int, f: MultiSymFn) -> MultiSymFn:
    """sum over l - m = k of h_l[creation] h_m[annihilation]^perp, applied to f."""
    out = MultiSymFn.zero(f.r)
    for d in f.degrees():
        fd = f.homogeneous(d)
        for m in range(0, d + 1):
            ell = k + m
            if ell < 0:
                continue
            inner = perp(h_of_alphabet(m, annihilation), fd) if m else fd
            if inner.is_zero():
                continue
            out = out + (h_of_alphabet(ell, creation) * inner if ell else inner)
    return out


def multiply_power_sum(f: MultiSymFn, k: int, alphabet: Alphabet) -> MultiSymFn:
    """Multiplication by p_k[alphabet]."""
    out: Dict[MultiPartition, RatFn2] = {}
    for j, c in alphabet_power(k, alphabet).items():
        for mu, v in f.terms.items():
            key = list(mu)
            key[j] = merge(key[j], (k,))
            _accumulate(out, tuple(key), v * c)
    return MultiSymFn(f.r, out)


def skew_power_sum(f: MultiSymFn, k: int, alphabet: Alphabet) -> MultiSymFn:
    """p_k[alphabet]^perp applied to f."""
    out: Dict[MultiPartition, RatFn2] = {}
    for j, c in alphabet_power(k, alphabet).items():
        for key, v in _perp_generator(k, j, f.terms).items():
            _accumulate(out, key, v * c)
    return MultiSymFn(f.r, out)
