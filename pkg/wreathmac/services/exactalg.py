"""Exact arithmetic in two variables.

Laurent polynomials and rational functions over Q in a pair of variables tagged
either ``"q,t"`` or ``"s,u"``, the cyclic character ring Z[q,t][chi]/(chi^r - 1),
small matrices over rational functions and the exact linear algebra the solvers
need.  Reduction to lowest terms and exact division go through sympy's sparse
polynomial ring over QQ.
"""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

logger = logging.getLogger(__name__)

QT = "q,t"
SU = "s,u"

Exponent = Tuple[int, int]
ExponentMap = Tuple[int, int, int, int]
Scalar = Union[int, Fraction]

_RING, _X, _Y = ring("x,y", QQ)

INV_MAP: ExponentMap = (-1, 0, 0, -1)
SWAP_MAP: ExponentMap = (0, 1, 1, 0)
SU_MAP: ExponentMap = (2, 2, 2, -2)


class VariableMismatchError(ValueError):
    pass


class SingularMatrixError(ZeroDivisionError):
    pass


def _map_exponent(e: Exponent, m: ExponentMap) -> Exponent:
    return (m[0] * e[0] + m[1] * e[1], m[2] * e[0] + m[3] * e[1])


class LaurentPoly2:
    """Element of Q[v1^{+-1}, v2^{+-1}] stored as {(a, b): coefficient}.

    Values are never mutated after construction.  Constants are tag-neutral: they
    combine with values of either tag.
    """

    __slots__ = ("terms", "vars")

    def __init__(self, terms: Optional[Dict[Exponent, Scalar]] = None, vars: str = QT) -> None:
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            for (a, b), c in terms.items():
                if c:
                    clean[(int(a), int(b))] = Fraction(c)
        self.terms = clean
        self.vars = vars

    # construction
    @classmethod
    def zero(cls, vars: str = QT) -> "LaurentPoly2":
        return cls({}, vars)

    @classmethod
    def const(cls, c: Scalar, vars: str = QT) -> "LaurentPoly2":
        return cls({(0, 0): c}, vars)

    @classmethod
    def monomial(cls, a: int, b: int, c: Scalar = 1, vars: str = QT) -> "LaurentPoly2":
        return cls({(a, b): c}, vars)

    @classmethod
    def gens(cls, vars: str = QT) -> Tuple["LaurentPoly2", "LaurentPoly2"]:
        return cls.monomial(1, 0, vars=vars), cls.monomial(0, 1, vars=vars)

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def is_one(self) -> bool:
        return self.terms == {(0, 0): Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(c > 0 and c.denominator == 1 for c in self.terms.values())

    # coercion
    def _coerce(self, other: object) -> Optional["LaurentPoly2"]:
        if isinstance(other, LaurentPoly2):
            if other.vars != self.vars and not (other.is_constant() or self.is_constant()):
                raise VariableMismatchError(f"cannot combine {self.vars} with {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly2.const(other, self.vars)
        return None

    def _tag(self, other: "LaurentPoly2") -> str:
        return other.vars if self.is_constant() else self.vars

    # ring operations
    def __add__(self, other: object) -> "LaurentPoly2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly2(out, self._tag(o))

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other: object) -> "LaurentPoly2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "LaurentPoly2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "LaurentPoly2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: Dict[Exponent, Fraction] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in o.terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly2(out, self._tag(o))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly2":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers exist only for monomials")
            ((a, b), c), = self.terms.items()
            return LaurentPoly2({(a * k, b * k): Fraction(1) / c ** (-k)}, self.vars)
        result = LaurentPoly2.const(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFn2):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # exponent maps
    def substitute_exponents(self, m: ExponentMap, vars: Optional[str] = None) -> "LaurentPoly2":
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            key = _map_exponent(e, m)
            out[key] = out.get(key, 0) + c
        return LaurentPoly2(out, vars or self.vars)

    def power_substitute(self, k: int) -> "LaurentPoly2":
        if k < 1:
            raise ValueError("power substitution needs k >= 1")
        return self.substitute_exponents((k, 0, 0, k))

    def inv(self) -> "LaurentPoly2":
        return self.substitute_exponents(INV_MAP)

    def swap(self) -> "LaurentPoly2":
        return self.substitute_exponents(SWAP_MAP)

    def shift(self, a: int, b: int) -> "LaurentPoly2":
        return LaurentPoly2({(x + a, y + b): c for (x, y), c in self.terms.items()}, self.vars)

    def scale(self, c: Scalar) -> "LaurentPoly2":
        return LaurentPoly2({e: v * c for e, v in self.terms.items()}, self.vars)

    # accessors
    def coefficient(self, a: int, b: int) -> Fraction:
        return self.terms.get((a, b), Fraction(0))

    def min_exponents(self) -> Exponent:
        if not self.terms:
            return (0, 0)
        return (min(a for a, _ in self.terms), min(b for _, b in self.terms))

    def evaluate(self, x: Scalar, y: Scalar) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((c * x ** a * y ** b for (a, b), c in self.terms.items()), Fraction(0))

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self.terms.items())

    # sympy bridge
    def to_poly(self) -> Tuple[Exponent, object]:
        """Split off the monomial content: self = v^shift * poly."""
        ma, mb = self.min_exponents()
        poly = _RING.from_dict({(a - ma, b - mb): QQ(c.numerator, c.denominator) for (a, b), c in self.terms.items()})
        return (ma, mb), poly

    @classmethod
    def from_poly(cls, poly: object, shift: Exponent = (0, 0), vars: str = QT) -> "LaurentPoly2":
        out: Dict[Exponent, Fraction] = {}
        for (a, b), c in poly.terms():  # type: ignore[attr-defined]
            rat = QQ.to_sympy(c)
            out[(a + shift[0], b + shift[1])] = Fraction(int(rat.p), int(rat.q))
        return cls(out, vars)

    def exquo(self, other: "LaurentPoly2") -> "LaurentPoly2":
        """Exact division; raises ArithmeticError when other does not divide self."""
        o = self._coerce(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly2.zero(self.vars)
        if o.is_monomial():
            ((a, b), c), = o.terms.items()
            return self.shift(-a, -b).scale(1 / c)
        (sa, sb), p = self.to_poly()
        (oa, ob), d = o.to_poly()
        quotient = p.exquo(d)
        return LaurentPoly2.from_poly(quotient, (sa - oa, sb - ob), self._tag(o))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.vars.split(",")
        out = ""
        for i, ((a, b), c) in enumerate(self.sorted_terms()):
            parts = []
            for name, e in zip(names, (a, b)):
                if e == 1:
                    parts.append(name)
                elif e:
                    parts.append(f"{name}^{e}")
            mono = "*".join(parts)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                out = f"-{body}" if c < 0 else body
            else:
                out += f" - {body}" if c < 0 else f" + {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly2({str(self)!r}, vars={self.vars!r})"


def _as_laurent(x: object, vars: str) -> LaurentPoly2:
    if isinstance(x, LaurentPoly2):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly2.const(x, vars)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


def _content(f: LaurentPoly2) -> Fraction:
    """Positive c with f / c integral and primitive."""
    cs = f.terms.values()
    return Fraction(math.gcd(*(c.numerator for c in cs)), math.lcm(*(c.denominator for c in cs)))


def _reduce(num: LaurentPoly2, den: LaurentPoly2) -> Tuple[LaurentPoly2, LaurentPoly2]:
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    vars = den.vars if num.is_constant() else num.vars
    one = LaurentPoly2.const(1, vars)
    if num.is_zero():
        return LaurentPoly2.zero(vars), one
    if den.is_monomial():
        return num.exquo(den), one
    (na, nb), p = num.to_poly()
    (da, db), d = den.to_poly()
    _, p, d = p.cofactors(d)
    num = LaurentPoly2.from_poly(p, (na - da, nb - db), vars)
    den = LaurentPoly2.from_poly(d, (0, 0), vars)
    if den.is_constant():
        return num.scale(1 / den.coefficient(0, 0)), one
    cn, cd = _content(num), _content(den)
    sign = 1 if den.sorted_terms()[0][1] > 0 else -1
    ratio = cn / cd
    return num.scale(sign * ratio.numerator / cn), den.scale(sign * ratio.denominator / cd)


class RatFn2:
    """Quotient num/den of Laurent polynomials, kept in lowest terms.

    Numerator and denominator carry integer coefficients with coprime contents, the
    denominator has a positive leading coefficient, no monomial factor, and equals 1
    when the value is a Laurent polynomial.  Equality is decided by cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Union[LaurentPoly2, Scalar] = 0, den: Union[LaurentPoly2, Scalar] = 1, vars: str = QT, *, reduced: bool = False) -> None:
        n = _as_laurent(num, vars)
        d = _as_laurent(den, n.vars if not n.is_constant() else vars)
        if not reduced:
            n, d = _reduce(n, d)
        self.num = n
        self.den = d

    @classmethod
    def zero(cls, vars: str = QT) -> "RatFn2":
        return cls(0, 1, vars)

    @classmethod
    def one(cls, vars: str = QT) -> "RatFn2":
        return cls(1, 1, vars)

    @classmethod
    def monomial(cls, a: int, b: int, c: Scalar = 1, vars: str = QT) -> "RatFn2":
        return cls(LaurentPoly2.monomial(a, b, c, vars), 1, vars)

    @classmethod
    def gens(cls, vars: str = QT) -> Tuple["RatFn2", "RatFn2"]:
        return cls.monomial(1, 0, vars=vars), cls.monomial(0, 1, vars=vars)

    @property
    def vars(self) -> str:
        return self.den.vars if self.num.is_constant() else self.num.vars

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def is_monomial(self) -> bool:
        return self.is_laurent() and self.num.is_monomial()

    def to_laurent(self) -> LaurentPoly2:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def _coerce(self, other: object) -> Optional["RatFn2"]:
        if isinstance(other, RatFn2):
            return other
        if isinstance(other, LaurentPoly2):
            return RatFn2(other, 1, other.vars)
        if isinstance(other, (int, Fraction)):
            return RatFn2(other, 1, self.vars)
        return None

    def __add__(self, other: object) -> "RatFn2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            return RatFn2(self.num + o.num, self.den)
        return RatFn2(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFn2":
        return RatFn2(-self.num, self.den, reduced=True)

    def __sub__(self, other: object) -> "RatFn2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "RatFn2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> "RatFn2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatFn2.zero(self.vars)
        if self.den.is_one() and o.den.is_one():
            return RatFn2(self.num * o.num, 1, reduced=True)
        return RatFn2(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFn2":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFn2(self.den, self.num)

    def __truediv__(self, other: object) -> "RatFn2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "RatFn2":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "RatFn2":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFn2(self.num ** k, self.den ** k)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def substitute_exponents(self, m: ExponentMap, vars: Optional[str] = None) -> "RatFn2":
        return RatFn2(self.num.substitute_exponents(m, vars), self.den.substitute_exponents(m, vars))

    def power_substitute(self, k: int) -> "RatFn2":
        if k == 1:
            return self
        return RatFn2(self.num.power_substitute(k), self.den.power_substitute(k))

    def inv(self) -> "RatFn2":
        return self.substitute_exponents(INV_MAP)

    def swap(self) -> "RatFn2":
        return self.substitute_exponents(SWAP_MAP)

    def evaluate(self, x: Scalar, y: Scalar) -> Fraction:
        d = self.den.evaluate(x, y)
        if d == 0:
            raise ZeroDivisionError(f"denominator of {self} vanishes at ({x}, {y})")
        return self.num.evaluate(x, y) / d

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFn2({str(self)!r})"


Coefficient = Union[RatFn2, LaurentPoly2, Scalar]


def as_ratfn(x: Coefficient, vars: str = QT) -> RatFn2:
    if isinstance(x, RatFn2):
        return x
    if isinstance(x, LaurentPoly2):
        return RatFn2(x, 1, x.vars)
    return RatFn2(x, 1, vars)


def power_substitute(f: Union[LaurentPoly2, RatFn2], k: int) -> Union[LaurentPoly2, RatFn2]:
    """Replace both variables v by v^k."""
    if k < 1:
        raise ValueError("power substitution needs k >= 1")
    return f.power_substitute(k)


def to_su(f: Union[LaurentPoly2, RatFn2]) -> RatFn2:
    """Image under q -> s^2 u^2, t -> s^2 u^-2."""
    g = as_ratfn(f)
    if g.vars != QT and not (g.num.is_constant() and g.den.is_constant()):
        raise VariableMismatchError(f"to_su expects a (q,t) value, got {g.vars}")
    return g.substitute_exponents(SU_MAP, SU)


def specialize_t_to_inverse_q(f: RatFn2) -> RatFn2:
    """Set t = 1/q; raises ZeroDivisionError if the denominator vanishes."""
    return f.substitute_exponents((1, -1, 0, 0))


def poly_lcm(polys: Iterable[LaurentPoly2], vars: str = QT) -> LaurentPoly2:
    """Least common multiple up to units, ignoring monomial content."""
    acc = None
    for p in polys:
        if p.is_constant() or p.is_monomial():
            continue
        _, q = p.to_poly()
        acc = q if acc is None else acc.lcm(q)
    if acc is None:
        return LaurentPoly2.const(1, vars)
    return LaurentPoly2.from_poly(acc, (0, 0), vars)


class CycPoly:
    """Element of Z[q^{+-1}, t^{+-1}][chi] / (chi^r - 1); coeffs[i] pairs with chi^i."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: Optional[Sequence[Union[LaurentPoly2, Scalar]]] = None) -> None:
        if r < 1:
            raise ValueError("r must be positive")
        cs = list(coeffs) if coeffs is not None else []
        if len(cs) > r:
            raise ValueError("too many coefficients")
        cs += [0] * (r - len(cs))
        self.r = r
        self.coeffs: Tuple[LaurentPoly2, ...] = tuple(_as_laurent(c, QT) for c in cs)

    @classmethod
    def from_graded(cls, f: LaurentPoly2, r: int) -> "CycPoly":
        """Image of f(q, t) under q -> q chi^-1, t -> t chi."""
        parts: List[Dict[Exponent, Fraction]] = [{} for _ in range(r)]
        for (a, b), c in f.terms.items():
            parts[(b - a) % r][(a, b)] = c
        return cls(r, [LaurentPoly2(p) for p in parts])

    def coefficient(self, i: int) -> LaurentPoly2:
        return self.coeffs[i % self.r]

    def _check(self, other: "CycPoly") -> None:
        if other.r != self.r:
            raise ValueError(f"cyclic rings differ: r={self.r} vs r={other.r}")

    def __add__(self, other: "CycPoly") -> "CycPoly":
        self._check(other)
        return CycPoly(self.r, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CycPoly") -> "CycPoly":
        self._check(other)
        return CycPoly(self.r, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CycPoly":
        return CycPoly(self.r, [-a for a in self.coeffs])

    def __mul__(self, other: Union["CycPoly", LaurentPoly2, Scalar]) -> "CycPoly":
        if not isinstance(other, CycPoly):
            return CycPoly(self.r, [a * other for a in self.coeffs])
        self._check(other)
        out: List[LaurentPoly2] = [LaurentPoly2.zero() for _ in range(self.r)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[(i + j) % self.r] = out[(i + j) % self.r] + a * b
        return CycPoly(self.r, out)

    __rmul__ = __mul__

    def with_coefficient(self, i: int, value: LaurentPoly2) -> "CycPoly":
        cs = list(self.coeffs)
        cs[i % self.r] = value
        return CycPoly(self.r, cs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycPoly):
            return NotImplemented
        return self.r == other.r and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.r, self.coeffs))

    def __str__(self) -> str:
        parts = [f"({c})*chi^{i}" for i, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


class MatRF:
    """Square matrix over RatFn2; entries[i][j] is row i, column j."""

    __slots__ = ("r", "entries")

    def __init__(self, entries: Sequence[Sequence[Coefficient]], vars: str = QT) -> None:
        r = len(entries)
        if any(len(row) != r for row in entries):
            raise ValueError("matrix must be square")
        self.r = r
        self.entries: Tuple[Tuple[RatFn2, ...], ...] = tuple(tuple(as_ratfn(x, vars) for x in row) for row in entries)

    @classmethod
    def identity(cls, r: int, vars: str = QT) -> "MatRF":
        return cls([[1 if i == j else 0 for j in range(r)] for i in range(r)], vars)

    @classmethod
    def from_perm(cls, u: Sequence[int], vars: str = QT) -> "MatRF":
        """Permutation matrix with entry 1 at (u(i), i)."""
        r = len(u)
        rows: List[List[Coefficient]] = [[0] * r for _ in range(r)]
        for i, ui in enumerate(u):
            rows[ui][i] = 1
        return cls(rows, vars)

    def __getitem__(self, ij: Tuple[int, int]) -> RatFn2:
        return self.entries[ij[0]][ij[1]]

    def _check(self, other: "MatRF") -> None:
        if other.r != self.r:
            raise ValueError(f"dimension mismatch: {self.r} vs {other.r}")

    def __add__(self, other: "MatRF") -> "MatRF":
        self._check(other)
        return MatRF([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "MatRF") -> "MatRF":
        self._check(other)
        return MatRF([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self) -> "MatRF":
        return MatRF([[-a for a in row] for row in self.entries])

    def __mul__(self, other: Union["MatRF", Coefficient]) -> "MatRF":
        if not isinstance(other, MatRF):
            c = as_ratfn(other)
            return MatRF([[a * c for a in row] for row in self.entries])
        self._check(other)
        r = self.r
        out = []
        for i in range(r):
            row = []
            for j in range(r):
                acc = RatFn2.zero()
                for k in range(r):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatRF(out)

    __matmul__ = __mul__

    def __rmul__(self, other: Coefficient) -> "MatRF":
        return self * other

    def transpose(self) -> "MatRF":
        return MatRF([[self.entries[j][i] for j in range(self.r)] for i in range(self.r)])

    def map_entries(self, fn: Callable[[RatFn2], RatFn2]) -> "MatRF":
        return MatRF([[fn(a) for a in row] for row in self.entries])

    def inv(self) -> "MatRF":
        """Entrywise (q, t) -> (1/q, 1/t)."""
        return self.map_entries(RatFn2.inv)

    def swap(self) -> "MatRF":
        return self.map_entries(RatFn2.swap)

    def inverse(self) -> "MatRF":
        return mat_inverse(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatRF):
            return NotImplemented
        return self.r == other.r and all(a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(a) for a in row) for row in self.entries) + "]"

    __repr__ = __str__


def mat_inverse(m: MatRF) -> MatRF:
    """Gauss-Jordan inverse over RatFn2."""
    r = m.r
    aug = [list(m.entries[i]) + [RatFn2.one() if i == j else RatFn2.zero() for j in range(r)] for i in range(r)]
    for col in range(r):
        pivot = next((i for i in range(col, r) if not aug[i][col].is_zero()), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col].inverse()
        aug[col] = [x * scale for x in aug[col]]
        for i in range(r):
            if i != col and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return MatRF([row[r:] for row in aug])


def solve_linear(rows: Sequence[Sequence[Coefficient]], rhs: Sequence[Coefficient], vars: str = QT) -> List[RatFn2]:
    """Solve the square system rows * x = rhs by Gaussian elimination over RatFn2."""
    n = len(rows)
    aug = [[as_ratfn(x, vars) for x in rows[i]] + [as_ratfn(rhs[i], vars)] for i in range(n)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if not aug[i][col].is_zero()), None)
        if pivot is None:
            raise SingularMatrixError("linear system is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = aug[col][col].inverse()
        aug[col] = [x * scale for x in aug[col]]
        for i in range(n):
            if i != col and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def _clear_row(row: Sequence[RatFn2]) -> List[LaurentPoly2]:
    dens = [x.den for x in row if not x.is_zero()]
    common = poly_lcm(dens)
    out = []
    for x in row:
        if x.is_zero():
            out.append(LaurentPoly2.zero())
        else:
            out.append(x.num * common.exquo(x.den))
    return out


def nullspace(rows: Sequence[Sequence[RatFn2]], ncols: int) -> List[List[RatFn2]]:
    """Basis of the right nullspace, one vector per free column.

    Rows are cleared of denominators and reduced by fraction-free Bareiss
    elimination over Laurent polynomials; back substitution happens over RatFn2.
    """
    a = [_clear_row(row) for row in rows]
    m = len(a)
    prev = LaurentPoly2.const(1)
    pivots: List[int] = []
    k = 0
    for c in range(ncols):
        if k >= m:
            break
        p = next((i for i in range(k, m) if not a[i][c].is_zero()), None)
        if p is None:
            continue
        a[k], a[p] = a[p], a[k]
        piv = a[k][c]
        for i in range(k + 1, m):
            lead = a[i][c]
            # columns left of c are already zero below the pivot row
            new = a[i][:c] + [LaurentPoly2.zero()]
            for j in range(c + 1, ncols):
                new.append((piv * a[i][j] - lead * a[k][j]).exquo(prev))
            a[i] = new
        prev = piv
        pivots.append(c)
        k += 1
    logger.debug("bareiss: %d rows, %d columns, rank %d", m, ncols, len(pivots))
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis: List[List[RatFn2]] = []
    for f in free:
        x = [RatFn2.zero() for _ in range(ncols)]
        x[f] = RatFn2.one()
        for row_idx in range(len(pivots) - 1, -1, -1):
            pc = pivots[row_idx]
            acc = RatFn2.zero()
            for j in range(pc + 1, ncols):
                coeff = a[row_idx][j]
                if not coeff.is_zero() and not x[j].is_zero():
                    acc = acc + RatFn2(coeff) * x[j]
            x[pc] = -acc / RatFn2(a[row_idx][pc])
        basis.append(x)
    return basis
