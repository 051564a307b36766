"""Partitions, Maya diagrams, cores and quotients, and the affine Weyl group.

Conventions:
- a cell (a, b) sits in column a and row b; its residue is (b - a) mod r;
- the holes of a Maya diagram with shape lam and charge c are {b - lam_b + c : b >= 0};
- an affine Weyl element (u, beta) stands for u * t_{-beta} and moves Maya
  positions by kr + i -> (k - beta_i) r + u(i).
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Set, Tuple

from .exactalg import LaurentPoly2

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]
MultiPartition = Tuple[Partition, ...]
RootVec = Tuple[int, ...]


class CellOutsideDiagramError(ValueError):
    pass


class SizeMismatchError(ValueError):
    pass


class WeylParseError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at character {position})")
        self.position = position


class Cell(NamedTuple):
    a: int
    b: int

    def residue(self, r: int) -> int:
        return (self.b - self.a) % r


# ---------------------------------------------------------------- partitions

def partition(parts: Sequence[int]) -> Partition:
    """Normalize to a weakly decreasing tuple without zeros."""
    out = tuple(sorted((int(p) for p in parts if p), reverse=True))
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {parts}")
    return out


def size(mu: Partition) -> int:
    return sum(mu)


def multi_size(mu: MultiPartition) -> int:
    return sum(sum(c) for c in mu)


def transpose(mu: Partition) -> Partition:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > j) for j in range(mu[0]))


def cells(mu: Partition) -> List[Cell]:
    return [Cell(a, b) for b, row in enumerate(mu) for a in range(row)]


def n_statistic(mu: Partition) -> int:
    return sum(i * p for i, p in enumerate(mu))


def contains(mu: Partition, cell: Cell) -> bool:
    return 0 <= cell.b < len(mu) and 0 <= cell.a < mu[cell.b]


def hook_data(mu: Partition, cell: Cell) -> Tuple[int, int, int]:
    """(arm, leg, hook) of a cell of mu."""
    if not contains(mu, cell):
        raise CellOutsideDiagramError(f"cell {tuple(cell)} is not in {mu}")
    mut = transpose(mu)
    arm = mu[cell.b] - cell.a - 1
    leg = mut[cell.a] - cell.b - 1
    return arm, leg, arm + leg + 1


def B_poly(mu: Partition) -> LaurentPoly2:
    return LaurentPoly2({(c.a, c.b): 1 for c in cells(mu)})


def A_poly(mu: Partition, inverse: bool = False) -> LaurentPoly2:
    q, t = LaurentPoly2.gens()
    f = 1 - (1 - q) * (1 - t) * B_poly(mu)
    return f.inv() if inverse else f


def addable_cells(mu: Partition) -> List[Cell]:
    out = []
    for b in range(len(mu) + 1):
        a = mu[b] if b < len(mu) else 0
        if b == 0 or mu[b - 1] > a:
            out.append(Cell(a, b))
    return out


def removable_cells(mu: Partition) -> List[Cell]:
    return [Cell(mu[b] - 1, b) for b in range(len(mu)) if b == len(mu) - 1 or mu[b + 1] < mu[b]]


def addable_removable(mu: Partition, r: int, i: Optional[int] = None) -> Tuple[List[Cell], List[Cell]]:
    """Addable and removable cells of residue i; all residues when i is None."""
    adds = addable_cells(mu)
    rems = removable_cells(mu)
    if i is None:
        return adds, rems
    if not 0 <= i < r:
        raise ValueError(f"residue {i} out of range for r={r}")
    return [c for c in adds if c.residue(r) == i], [c for c in rems if c.residue(r) == i]


def partitions_of(n: int, max_part: Optional[int] = None) -> List[Partition]:
    """Partitions of n in reverse lexicographic order, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out: List[Partition] = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def multipartitions_of(r: int, n: int) -> Tuple[MultiPartition, ...]:
    out: List[MultiPartition] = []

    def rec(i: int, left: int, acc: Tuple[Partition, ...]) -> None:
        if i == r - 1:
            for lam in partitions_of(left):
                out.append(acc + (lam,))
            return
        for k in range(left, -1, -1):
            for lam in partitions_of(k):
                rec(i + 1, left - k, acc + (lam,))

    rec(0, n, ())
    return tuple(out)


def empty_multipartition(r: int) -> MultiPartition:
    return tuple(() for _ in range(r))


def dominates(lam: Partition, mu: Partition) -> bool:
    if size(lam) != size(mu):
        raise SizeMismatchError(f"|{lam}| != |{mu}|")
    s1 = s2 = 0
    for k in range(max(len(lam), len(mu))):
        s1 += lam[k] if k < len(lam) else 0
        s2 += mu[k] if k < len(mu) else 0
        if s1 < s2:
            return False
    return True


def multi_transpose_star(mu: MultiPartition) -> MultiPartition:
    """Reverse the components after transposing each one."""
    return tuple(transpose(c) for c in reversed(mu))


def permute_multipartition(u: Sequence[int], mu: MultiPartition) -> MultiPartition:
    """(u mu)^{(u(i))} = mu^{(i)}."""
    out: List[Partition] = [()] * len(u)
    for i, ui in enumerate(u):
        out[ui] = mu[i]
    return tuple(out)


def hook_length_count(mu: Partition) -> int:
    """Number of standard Young tableaux of shape mu."""
    n = size(mu)
    num = 1
    for k in range(2, n + 1):
        num *= k
    den = 1
    for c in cells(mu):
        den *= hook_data(mu, c)[2]
    return num // den


# ---------------------------------------------------------------- Maya diagrams

@dataclass(frozen=True)
class MayaDiagram:
    """A partition together with a charge, seen as a set of hole positions."""

    shape: Partition
    charge: int = 0

    def is_hole(self, x: int) -> bool:
        k = x - self.charge
        if k >= len(self.shape):
            return True
        return k in self._finite_holes()

    def _finite_holes(self) -> FrozenSet[int]:
        return frozenset(b - p for b, p in enumerate(self.shape))

    def holes_from(self, lo: int, hi: int) -> List[int]:
        return [x for x in range(lo, hi) if self.is_hole(x)]

    @classmethod
    def from_holes(cls, holes: Set[int], lo: int, hi: int) -> "MayaDiagram":
        """Rebuild from the holes inside [lo, hi); below lo all beads, from hi all holes."""
        finite = sorted(x for x in holes if lo <= x < hi)
        beads_nonneg = sum(1 for x in range(max(lo, 0), hi) if x not in holes)
        holes_neg = sum(1 for x in finite if x < 0)
        charge = beads_nonneg - holes_neg
        parts = [b + charge - h for b, h in enumerate(finite)]
        return cls(partition(parts), charge)


def _window(lam: Partition, charge: int, pad: int) -> Tuple[int, int]:
    lo = charge - (lam[0] if lam else 0) - pad
    hi = charge + len(lam) + pad
    return lo, hi


def runner_charges_and_quotient(mu: Partition, r: int) -> Tuple[MultiPartition, RootVec]:
    maya = MayaDiagram(mu, 0)
    lo, hi = _window(mu, 0, r)
    quot: List[Partition] = []
    charges: List[int] = []
    for i in range(r):
        klo = (lo - i) // r - 1
        khi = (hi - i) // r + 2
        holes = {k for k in range(klo, khi) if maya.is_hole(k * r + i)}
        sub = MayaDiagram.from_holes(holes, klo, khi)
        quot.append(sub.shape)
        charges.append(sub.charge)
    return tuple(quot), tuple(charges)


def kappa_bar(mu: Partition, r: int) -> RootVec:
    v = [0] * r
    for c in cells(mu):
        res = c.residue(r)
        v[res] += 1
        v[(res - 1) % r] -= 1
    return tuple(v)


def tau(mu_bullet: MultiPartition, beta: RootVec) -> Partition:
    """Partition whose r-quotient is mu_bullet and whose runner charges are beta."""
    r = len(mu_bullet)
    if len(beta) != r or sum(beta) != 0:
        raise ValueError(f"beta {beta} must be a zero-sum vector of length {r}")
    kmax = max(len(mu_bullet[i]) + beta[i] for i in range(r)) + 1
    positions: List[int] = []
    for i in range(r):
        lam = mu_bullet[i]
        for b in range(max(len(lam), kmax - beta[i]) + 1):
            k = b - (lam[b] if b < len(lam) else 0) + beta[i]
            if k < kmax:
                positions.append(k * r + i)
    positions.sort()
    return partition([b - h for b, h in enumerate(positions)])


def core_of_root(beta: RootVec, r: int) -> Partition:
    return tau(empty_multipartition(r), beta)


def quot_core(mu: Partition, r: int) -> Tuple[MultiPartition, Partition, RootVec]:
    quot, charges = runner_charges_and_quotient(mu, r)
    return quot, core_of_root(charges, r), charges


# ---------------------------------------------------------------- root vectors

def theta(r: int) -> RootVec:
    v = [0] * r
    v[0] += 1
    v[r - 1] -= 1
    return tuple(v)


def to_simple_coords(beta: RootVec) -> Tuple[int, ...]:
    """Coordinates n_1..n_{r-1} with beta = sum n_i alpha_i."""
    out, acc = [], 0
    for x in beta[:-1]:
        acc += x
        out.append(acc)
    return tuple(out)


def from_simple_coords(n: Sequence[int]) -> RootVec:
    r = len(n) + 1
    v = [0] * r
    for i, c in enumerate(n, start=1):
        v[i - 1] += c
        v[i] -= c
    return tuple(v)


def permute_vector(u: Sequence[int], beta: Sequence[int]) -> RootVec:
    """(u beta)_{u(i)} = beta_i."""
    out = [0] * len(u)
    for i, ui in enumerate(u):
        out[ui] = beta[i]
    return tuple(out)


def _compose(u1: Sequence[int], u2: Sequence[int]) -> Tuple[int, ...]:
    return tuple(u1[u2[i]] for i in range(len(u2)))


def _invert(u: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(u)
    for i, ui in enumerate(u):
        out[ui] = i
    return tuple(out)


# ---------------------------------------------------------------- affine Weyl group

@dataclass(frozen=True)
class AffineWeylElt:
    """w = u * t_{-beta} in the extended affine symmetric group."""

    u: Tuple[int, ...]
    beta: RootVec

    @property
    def r(self) -> int:
        return len(self.u)

    @classmethod
    def identity(cls, r: int) -> "AffineWeylElt":
        return cls(tuple(range(r)), (0,) * r)

    @classmethod
    def s(cls, i: int, r: int) -> "AffineWeylElt":
        if not 0 <= i < r:
            raise ValueError(f"s{i} is not a generator for r={r}")
        if r == 1:
            return cls.identity(1)
        u = list(range(r))
        if i == 0:
            u[0], u[r - 1] = r - 1, 0
            return cls(tuple(u), theta(r))
        u[i - 1], u[i] = i, i - 1
        return cls(tuple(u), (0,) * r)

    @classmethod
    def translation(cls, gamma: Sequence[int]) -> "AffineWeylElt":
        """t_{gamma} as an element, i.e. (id, -gamma)."""
        return cls(tuple(range(len(gamma))), tuple(-g for g in gamma))

    @classmethod
    def w0(cls, r: int) -> "AffineWeylElt":
        return cls(tuple(r - 1 - i for i in range(r)), (0,) * r)

    @classmethod
    def chi(cls, r: int) -> "AffineWeylElt":
        return cls(tuple((i + 1) % r for i in range(r)), (0,) * r)

    def __mul__(self, other: "AffineWeylElt") -> "AffineWeylElt":
        pulled = tuple(self.beta[other.u[i]] for i in range(self.r))
        return AffineWeylElt(_compose(self.u, other.u), tuple(p + b for p, b in zip(pulled, other.beta)))

    def inverse(self) -> "AffineWeylElt":
        return AffineWeylElt(_invert(self.u), tuple(-x for x in permute_vector(self.u, self.beta)))

    def star(self) -> "AffineWeylElt":
        r = self.r
        w0 = tuple(r - 1 - i for i in range(r))
        return AffineWeylElt(_compose(w0, _compose(self.u, w0)), tuple(-x for x in permute_vector(w0, self.beta)))

    def position(self, x: int) -> int:
        k, i = divmod(x, self.r)
        return (k - self.beta[i]) * self.r + self.u[i]

    def window(self) -> Tuple[int, ...]:
        return tuple(self.position(i) for i in range(self.r))

    def length(self) -> int:
        f = self.window()
        r = self.r
        return sum(abs((f[j] - f[i]) // r) for i, j in combinations(range(r), 2))

    def reduced_word(self) -> List[int]:
        word: List[int] = []
        w = self
        while True:
            ell = w.length()
            if ell == 0:
                break
            for j in range(self.r):
                shorter = w * AffineWeylElt.s(j, self.r)
                if shorter.length() < ell:
                    word.append(j)
                    w = shorter
                    break
            else:  # pragma: no cover
                raise RuntimeError(f"no descent found for {self}")
        return list(reversed(word))

    def act(self, mu_bullet: MultiPartition, alpha: RootVec) -> Tuple[MultiPartition, RootVec]:
        """w (mu, alpha) = (u mu, u(alpha - beta))."""
        diff = tuple(a - b for a, b in zip(alpha, self.beta))
        return permute_multipartition(self.u, mu_bullet), permute_vector(self.u, diff)

    def render(self) -> str:
        return " ".join(f"s{i}" for i in self.reduced_word())


def weyl_word(word: Sequence[int], r: int) -> AffineWeylElt:
    w = AffineWeylElt.identity(r)
    for i in word:
        w = w * AffineWeylElt.s(i, r)
    return w


_TOKEN = re.compile(r"\s*(?:(s)(\d+)|(w0)|(t)\[([-\d,\s]*)\])")


def weyl_canonical(text: str, r: int) -> AffineWeylElt:
    """Parse "s0".."s{r-1}", "w0" and "t[c0,...]" tokens, composed left to right.

    ``t[c]`` is the element (id, c), the translation t_{-c}.
    """
    w = AffineWeylElt.identity(r)
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WeylParseError(f"unexpected token in {text!r}", pos)
        if m.group(1):
            i = int(m.group(2))
            if i >= r:
                raise WeylParseError(f"s{i} is not a generator for r={r}", m.start(1))
            w = w * AffineWeylElt.s(i, r)
        elif m.group(3):
            w = w * AffineWeylElt.w0(r)
        else:
            try:
                coords = tuple(int(c) for c in m.group(5).split(",") if c.strip())
            except ValueError:
                raise WeylParseError("bad translation vector", m.start(4)) from None
            if len(coords) != r or sum(coords) != 0:
                raise WeylParseError(f"translation {coords} must be zero-sum of length {r}", m.start(4))
            w = w * AffineWeylElt(tuple(range(r)), coords)
        pos = m.end()
    return w


def reduced_word(w: AffineWeylElt) -> List[int]:
    return w.reduced_word()


def length(w: AffineWeylElt) -> int:
    return w.length()


def weyl_act_partition(w: AffineWeylElt, lam: Partition) -> Partition:
    """Act on the charge-0 Maya diagram of lam by the affine permutation of w."""
    r = w.r
    maya = MayaDiagram(lam, 0)
    winv = w.inverse()
    pad = r * (max((abs(b) for b in w.beta), default=0) + 2)
    lo, hi = _window(lam, 0, pad)
    holes = {y for y in range(lo, hi) if maya.is_hole(winv.position(y))}
    return MayaDiagram.from_holes(holes, lo, hi).shape


def tau_w(w: AffineWeylElt, mu_bullet: MultiPartition) -> Partition:
    """tau(w^{-1} (mu, 0))."""
    uinv = _invert(w.u)
    return tau(permute_multipartition(uinv, mu_bullet), w.beta)


def order_ge_w(w: AffineWeylElt, lam_bullet: MultiPartition, mu_bullet: MultiPartition) -> bool:
    if multi_size(lam_bullet) != multi_size(mu_bullet):
        raise SizeMismatchError(f"|{lam_bullet}| != |{mu_bullet}|")
    return dominates(tau_w(w, lam_bullet), tau_w(w, mu_bullet))


def multitableaux_count(lam: MultiPartition) -> int:
    n = multi_size(lam)
    total = 1
    for k in range(2, n + 1):
        total *= k
    for c in lam:
        f = 1
        for k in range(2, size(c) + 1):
            f *= k
        total //= f
        total *= hook_length_count(c)
    return total
