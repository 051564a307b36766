"""Wreath Macdonald polynomials and everything read off from them.

H^w_mu is the unique multisymmetric function with
  P_{id - q chi^-1}(H) in span{s_lam : lam >=_w mu},
  P_{id - t^-1 chi^-1}(H) in span{s_lam : lam <=_w mu},
  <s_n[X^(0)], H> = 1.
The solver works in tensor-Schur coordinates of degree n, where both
triangularity conditions are linear.
"""
from __future__ import annotations

import logging
import threading
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from wreathmac.config import get_settings
from wreathmac.models.keys import Variant, WreathKey
from wreathmac.models.report import Report

from .cache import ResultCache
from .exactalg import LaurentPoly2, MatRF, RatFn2, nullspace, solve_linear, specialize_t_to_inverse_q
from .multisym import (
    MultiSymFn,
    chi_matrix,
    chi_perm,
    down,
    from_schur,
    from_symfn,
    matrix_plethysm,
    neg,
    pair_P,
    pair_qt,
    perm_plethysm,
    schur,
    schur_coefficient,
    schur_matrix,
    substitute_generators,
    w0_perm,
)
from .partcomb import (
    AffineWeylElt,
    MultiPartition,
    Partition,
    cells,
    dominates,
    hook_data,
    multi_size,
    multi_transpose_star,
    multipartitions_of,
    multitableaux_count,
    permute_multipartition,
    tau_w,
    weyl_canonical,
)
from .symfn import tilde_H

logger = logging.getLogger(__name__)

KostkaTable = Dict[MultiPartition, LaurentPoly2]
SchurMatrix = Tuple[Tuple[RatFn2, ...], ...]


class SolverDegenerateError(RuntimeError):
    def __init__(self, message: str, key: WreathKey) -> None:
        super().__init__(f"{message} (key={key.canonical_json()})")
        self.message = message
        self.key = key

    def __reduce__(self):  # type: ignore[override]
        return type(self), (self.message, self.key)


_SOLVED: Dict[WreathKey, MultiSymFn] = {}
_SCHUR: Dict[WreathKey, Dict[MultiPartition, RatFn2]] = {}
_LOCK = threading.Lock()


def weyl_of(text: str, r: int) -> AffineWeylElt:
    return weyl_canonical(text, r)


def make_key(
    r: int,
    w: Union[str, AffineWeylElt],
    mu: Sequence[Sequence[int]],
    variant: Variant = "standard",
) -> WreathKey:
    elt = weyl_canonical(w, r) if isinstance(w, str) else w
    return WreathKey.of(elt, tuple(tuple(p) for p in mu), variant)


def _qt() -> Tuple[RatFn2, RatFn2]:
    return RatFn2.gens()


@lru_cache(maxsize=None)
def _condition_matrices(r: int, variant: Variant) -> Tuple[MatRF, MatRF]:
    """(U, V) with U = id - q chi^p, V = id - t^-1 chi^p."""
    q, t = _qt()
    power = 1 if variant == "forward" else -1
    ident = MatRF.identity(r)
    chi = chi_matrix(r, power)
    return ident - chi * q, ident - chi * t.inverse()


def _supports(key: WreathKey, basis: Sequence[MultiPartition]) -> Tuple[List[int], List[int]]:
    """Index sets allowed for P_U(H) and for P_V(H)."""
    w = key.w
    big = [tau_w(w, lam) for lam in basis]
    target = tau_w(w, key.mu)
    upper = [j for j, b in enumerate(big) if dominates(b, target)]
    lower = [j for j, b in enumerate(big) if dominates(target, b)]
    if key.variant == "opposite":
        return lower, upper
    return upper, lower


@lru_cache(maxsize=None)
def _transfer(r: int, n: int, variant: Variant, from_upper: bool) -> Tuple[SchurMatrix, SchurMatrix]:
    """Schur matrices of (transfer, back), shared by every key of one (r, n, variant)."""
    U, V = _condition_matrices(r, variant)
    if from_upper:
        transfer, back = V * U.inverse(), U.inverse()
    else:
        transfer, back = U * V.inverse(), V.inverse()
    return schur_matrix(transfer, n), schur_matrix(back, n)


def _normalization_index(basis: Sequence[MultiPartition], r: int, n: int) -> int:
    target = ((n,) if n else (),) + tuple(() for _ in range(r - 1))
    return basis.index(target)


def _solve_schur_uncached(key: WreathKey) -> Dict[MultiPartition, RatFn2]:
    r, n = key.r, key.n
    basis = multipartitions_of(r, n)
    sa, sb = _supports(key, basis)
    mu_index = basis.index(key.mu)
    from_upper = len(sa) <= len(sb)
    free, allowed = (sa, set(sb)) if from_upper else (sb, set(sa))
    T, B = _transfer(r, n, key.variant, from_upper)
    rows = [[T[i][j] for j in free] for i in range(len(basis)) if i not in allowed]
    logger.debug(
        "solving %s: basis=%d unknowns=%d constraints=%d",
        key.canonical_json(), len(basis), len(free), len(rows),
    )
    kernel = nullspace(rows, len(free))
    if len(kernel) != 1:
        raise SolverDegenerateError(f"constraint nullspace has dimension {len(kernel)}", key)
    vec = kernel[0]
    lead_free = vec[free.index(mu_index)]
    lead_other = RatFn2.zero()
    for j, c in zip(free, vec):
        lead_other = lead_other + T[mu_index][j] * c
    if lead_free.is_zero() or lead_other.is_zero():
        raise SolverDegenerateError("leading coefficient at mu vanishes", key)
    coords = []
    for i in range(len(basis)):
        acc = RatFn2.zero()
        for j, c in zip(free, vec):
            acc = acc + B[i][j] * c
        coords.append(acc)
    scale = coords[_normalization_index(basis, r, n)]
    if scale.is_zero():
        raise SolverDegenerateError("normalization coefficient vanishes", key)
    return {lam: c / scale for lam, c in zip(basis, coords) if not c.is_zero()}


def _solve_uncached(key: WreathKey) -> MultiSymFn:
    return from_schur(key.r, solve_schur(key))


def solve_H(key: WreathKey, store: Optional[ResultCache] = None) -> MultiSymFn:
    with _LOCK:
        hit = _SOLVED.get(key)
    if hit is not None:
        return hit
    value = store.get(key) if store is not None else None
    if value is None:
        value = _solve_uncached(key)
        if store is not None:
            store.put(key, value)
    with _LOCK:
        _SOLVED.setdefault(key, value)
    return value


def solve_schur(key: WreathKey, store: Optional[ResultCache] = None) -> Dict[MultiPartition, RatFn2]:
    """Tensor-Schur coefficients of H; skips the power-sum expansion when nothing is cached."""
    with _LOCK:
        hit = _SCHUR.get(key)
        solved = _SOLVED.get(key)
    if hit is not None:
        return hit
    if solved is None and store is not None:
        solved = store.get(key)
    value = solved.to_schur() if solved is not None else _solve_schur_uncached(key)
    with _LOCK:
        _SCHUR.setdefault(key, value)
    return value


def basis_H(r: int, n: int, w: AffineWeylElt, variant: Variant = "standard", store: Optional[ResultCache] = None) -> Dict[MultiPartition, MultiSymFn]:
    return {mu: solve_H(WreathKey.of(w, mu, variant), store) for mu in multipartitions_of(r, n)}


def defining_conditions(key: WreathKey, f: MultiSymFn) -> Report:
    """Re-check both triangularities and the normalization on an arbitrary f."""
    r, n = key.r, key.n
    basis = multipartitions_of(r, n)
    U, V = _condition_matrices(r, key.variant)
    sa, sb = _supports(key, basis)
    report = Report(title=f"defining conditions {key.canonical_json()}")
    for name, M, allowed in (("q-triangularity", U, sa), ("t-triangularity", V, sb)):
        image = matrix_plethysm(M, f).to_schur()
        stray = [lam for lam in image if basis.index(lam) not in allowed]
        report.add(name, not stray, detail=f"terms outside support: {stray}" if stray else "")
    norm = schur_coefficient(f, basis[_normalization_index(basis, r, n)])
    report.add("normalization", norm.is_one(), lhs=norm, rhs=1)
    return report


# ---------------------------------------------------------------- Kostka coefficients

def kostka(key: WreathKey, store: Optional[ResultCache] = None) -> KostkaTable:
    return {lam: c.to_laurent() for lam, c in solve_schur(key, store).items()}


def gamma_degree(lam: MultiPartition, r: int) -> int:
    return sum(i * sum(part) for i, part in enumerate(lam)) % r


def kostka_checks(key: WreathKey, store: Optional[ResultCache] = None) -> Report:
    table = kostka(key, store)
    report = Report(title=f"kostka {key.canonical_json()}")
    for lam in multipartitions_of(key.r, key.n):
        k = table.get(lam, LaurentPoly2.zero())
        report.add(f"positive {list(map(list, lam))}", k.is_zero() or k.has_nonnegative_integer_coefficients(), lhs=k)
        degree = gamma_degree(lam, key.r)
        graded = all((b - a) % key.r == degree for (a, b) in k.terms)
        report.add(f"gamma-degree {list(map(list, lam))}", graded, detail=f"expected {degree}", lhs=k)
        count = k.evaluate(1, 1)
        report.add(f"K(1,1) {list(map(list, lam))}", count == multitableaux_count(lam), lhs=count, rhs=multitableaux_count(lam))
    return report


# ---------------------------------------------------------------- symmetries

def _proportionality(lhs: MultiSymFn, rhs: MultiSymFn) -> Optional[RatFn2]:
    """c with lhs == c * rhs, or None."""
    rs = rhs.to_schur()
    if not rs:
        return RatFn2.one() if lhs.is_zero() else None
    lam = min(rs)
    c = schur_coefficient(lhs, lam) / rs[lam]
    return c if lhs == rhs * c else None


def _with(key: WreathKey, w: AffineWeylElt, mu: MultiPartition, variant: Variant = "standard") -> WreathKey:
    return WreathKey.of(w, mu, variant)


def e_eigenvalue(H: MultiSymFn, r: int, n: int, i: int) -> RatFn2:
    """<e_n[X^(i)], H>: coefficient of s_{1^n} in slot i."""
    lam: List[Partition] = [()] * r
    lam[i] = (1,) * n
    return schur_coefficient(H, lam)


def check_symmetries(key: WreathKey, store: Optional[ResultCache] = None) -> Report:
    r, n, w, mu = key.r, key.n, key.w, key.mu
    H = solve_H(key, store)
    report = Report(title=f"symmetries {key.canonical_json()}")

    lhs = neg(H).swap()
    rhs = solve_H(_with(key, w.star(), multi_transpose_star(mu)), store)
    report.add("swap-neg", lhs == rhs, lhs=lhs, rhs=rhs)

    w0 = AffineWeylElt.w0(r)
    w0mu = permute_multipartition(w0_perm(r), mu)
    lhs = down(H)
    rhs = solve_H(_with(key, w0 * w, w0mu), store)
    c = _proportionality(lhs, rhs)
    expected = e_eigenvalue(H, r, n, 0).inv()
    report.add(
        "inversion",
        c is not None and c.is_monomial() and c == expected,
        detail=f"scalar {c}, expected {expected}",
        lhs=lhs,
        rhs=rhs,
    )

    chi = AffineWeylElt.chi(r)
    lhs = perm_plethysm(chi_perm(r), H)
    rhs = solve_H(_with(key, chi * w, permute_multipartition(chi_perm(r), mu)), store)
    c = _proportionality(lhs, rhs)
    report.add("rotation", c is not None and c.is_monomial(), detail=f"scalar {c}", lhs=lhs, rhs=rhs)

    lhs = solve_H(_with(key, w, mu, "forward"), store)
    rhs = perm_plethysm(w0_perm(r), solve_H(_with(key, w0 * w, w0mu), store))
    c = _proportionality(lhs, rhs)
    report.add("forward", c is not None and c.is_monomial(), detail=f"scalar {c}", lhs=lhs, rhs=rhs)

    lhs = solve_H(_with(key, w, mu, "opposite"), store)
    rhs = H.swap().inv()
    report.add("opposite-order", lhs == rhs, lhs=lhs, rhs=rhs)
    for check in report.checks:
        if not check.ok:
            logger.warning("symmetry %s failed for %s", check.name, key.canonical_json())
    return report


# ---------------------------------------------------------------- wreath nabla

def nabla_apply(r: int, w: AffineWeylElt, f: MultiSymFn, i: int = 0, store: Optional[ResultCache] = None) -> MultiSymFn:
    """Apply the operator diagonal on {H^w_mu} with eigenvalues <e_n[X^(i)], H^w_mu>."""
    degrees = f.degrees()
    if len(degrees) != 1:
        out = MultiSymFn.zero(r)
        for d in degrees:
            out = out + nabla_apply(r, w, f.homogeneous(d), i, store)
        return out
    n = degrees[0]
    basis = multipartitions_of(r, n)
    Hs = basis_H(r, n, w, store=store)
    cols = [Hs[mu].to_schur() for mu in basis]
    target = f.to_schur()
    rows = [[col.get(lam, RatFn2.zero()) for col in cols] for lam in basis]
    rhs = [target.get(lam, RatFn2.zero()) for lam in basis]
    coeffs = solve_linear(rows, rhs)
    out = MultiSymFn.zero(r)
    for mu, c in zip(basis, coeffs):
        if not c.is_zero():
            out = out + Hs[mu] * (c * e_eigenvalue(Hs[mu], r, n, i))
    return out


def nabla_inversion_check(key: WreathKey, store: Optional[ResultCache] = None) -> Report:
    """down o nabla_{w0 w} o down sends H^w_mu to H^w_mu / e^(0)."""
    r, n, w = key.r, key.n, key.w
    H = solve_H(key, store)
    e0 = e_eigenvalue(H, r, n, 0)
    lhs = down(nabla_apply(r, AffineWeylElt.w0(r) * w, down(H), 0, store))
    rhs = H / e0
    report = Report(title=f"nabla inversion {key.canonical_json()}")
    report.add("eigenvalue monomial", e0.is_monomial(), lhs=e0)
    report.add("down nabla down = nabla^-1", lhs == rhs, lhs=lhs, rhs=rhs)
    return report


# ---------------------------------------------------------------- norms, J and P

def _hook_cells(key: WreathKey) -> List[Tuple[int, int]]:
    """(arm, leg) of the cells of tau_w(mu) whose hook length is divisible by r."""
    big = tau_w(key.w, key.mu)
    out = []
    for c in cells(big):
        a, l, h = hook_data(big, c)
        if h % key.r == 0:
            out.append((a, l))
    return out


def norm_b(key: WreathKey, store: Optional[ResultCache] = None) -> RatFn2:
    H = solve_H(key, store)
    return pair_qt(H, neg(H).inv())


def norm_formula(key: WreathKey) -> RatFn2:
    q, t = _qt()
    out = RatFn2.one()
    for a, l in _hook_cells(key):
        out = out * (1 - q ** (1 + a) * t ** (-l)) * (1 - t ** (1 + l) * q ** (-a))
    return out


def norm_report(key: WreathKey, store: Optional[ResultCache] = None) -> Report:
    q, t = _qt()
    b = norm_b(key, store)
    formula = norm_formula(key)
    report = Report(title=f"norm {key.canonical_json()}")
    report.add("hook product", b == formula, lhs=b, rhs=formula)
    flipped = b.inv() * (q * t) ** key.n
    report.add("(qt)^n inversion", flipped == b, lhs=flipped, rhs=b)
    return report


def J_and_P(key: WreathKey, store: Optional[ResultCache] = None) -> Tuple[MultiSymFn, RatFn2, MultiSymFn]:
    _, V = _condition_matrices(key.r, "standard")
    J = matrix_plethysm(V, solve_H(key, store))
    c = schur_coefficient(J, key.mu)
    if c.is_zero():
        raise SolverDegenerateError("J has no s_mu term", key)
    return J, c, J / c


def P_at_t_inverse_q(key: WreathKey, store: Optional[ResultCache] = None) -> MultiSymFn:
    _, _, P = J_and_P(key, store)
    return P.map_coeffs(specialize_t_to_inverse_q)


def P_checks(key: WreathKey, store: Optional[ResultCache] = None) -> Report:
    """P is monic on s_mu and collapses to s_mu at t = 1/q."""
    report = Report(title=f"P {key.canonical_json()}")
    _, _, P = J_and_P(key, store)
    lead = schur_coefficient(P, key.mu)
    report.add("monic on s_mu", lead == RatFn2.one(), lhs=lead, rhs=1)
    target = schur(key.mu)
    at = P_at_t_inverse_q(key, store)
    report.add("P(q, 1/q) = s_mu", at == target, lhs=at, rhs=target)
    return report


def check_conjectures(key: WreathKey, store: Optional[ResultCache] = None) -> Report:
    q, t = _qt()
    hooks = _hook_cells(key)
    report = Report(title=f"conjectures {key.canonical_json()}")
    J, c, P = J_and_P(key, store)

    pairing = pair_P(P, neg(P).inv())
    expected = RatFn2.one()
    for a, l in hooks:
        expected = expected * (1 - q ** (1 + a) * t ** (-l)) / (1 - q ** a * t ** (-1 - l))
    report.add("P pairing", pairing == expected, lhs=pairing, rhs=expected)

    k = kostka(key, store).get(key.mu, LaurentPoly2.zero())
    top = max((b for (_, b) in k.terms), default=0)
    f = LaurentPoly2({e: v for e, v in k.terms.items() if e[1] == top})
    rhs = RatFn2(f)
    for a, l in hooks:
        rhs = rhs * (1 - q ** a * t ** (-1 - l))
    report.add("J to P leading monomial", f.is_monomial(), lhs=f)
    report.add("J to P coefficient", c == rhs, lhs=c, rhs=rhs)
    for check in report.checks:
        if not check.ok:
            logger.warning("conjecture check %s failed for %s", check.name, key.canonical_json())
    return report


def orthogonality(r: int, n: int, w: AffineWeylElt, store: Optional[ResultCache] = None) -> Report:
    Hs = basis_H(r, n, w, store=store)
    report = Report(title=f"orthogonality r={r} n={n} w={w.window()}")
    for mu, Hmu in Hs.items():
        for nu, Hnu in Hs.items():
            if mu == nu:
                continue
            value = pair_qt(Hmu, neg(Hnu).inv())
            report.add(f"<{mu}, {nu}>", value.is_zero(), lhs=value, rhs=0)
    return report


def P_orthogonality(r: int, n: int, w: AffineWeylElt, store: Optional[ResultCache] = None) -> Report:
    Ps = {mu: J_and_P(WreathKey.of(w, mu), store)[2] for mu in multipartitions_of(r, n)}
    report = Report(title=f"P orthogonality r={r} n={n} w={w.window()}")
    for mu, Pmu in Ps.items():
        for nu, Pnu in Ps.items():
            if mu != nu:
                value = pair_P(Pmu, neg(Pnu).inv())
                report.add(f"<{mu}, {nu}>", value.is_zero(), lhs=value, rhs=0)
    return report


# ---------------------------------------------------------------- generic stability

def deep_weyl(r: int, depth: int) -> AffineWeylElt:
    """(id, beta) with beta_j = depth * (2j - r + 1)."""
    return AffineWeylElt(tuple(range(r)), tuple(depth * (2 * j - r + 1) for j in range(r)))


def generic_matrix_entry(r: int, i: int, j: int) -> RatFn2:
    q, t = _qt()
    return t ** j if i >= j else q ** (r - j)


def factor_parameters(r: int, i: int) -> Tuple[int, int, int, int]:
    """Exponent map q -> q^{r-i} t^{-i}, t -> q^{1-r+i} t^{1+i}."""
    return (r - i, 1 - r + i, -i, 1 + i)


def factor_generic(r: int, mu: MultiPartition) -> MultiSymFn:
    out = MultiSymFn.one(r)
    for i, part in enumerate(mu):
        if not part:
            continue
        m = factor_parameters(r, i)
        classical = tilde_H(part).map_coeffs(lambda c, m=m: c.substitute_exponents(m))
        row = {j: generic_matrix_entry(r, i, j) for j in range(r)}
        slot = substitute_generators(
            from_symfn(classical, 0, r),
            lambda k, _i, row=row: {j: c.power_substitute(k) for j, c in row.items()},
        )
        out = out * slot
    return out


def factor_check(r: int, mu: MultiPartition, store: Optional[ResultCache] = None) -> Report:
    n = multi_size(mu)
    depth = n + 1
    slack = get_settings().FACTOR_DEPTH_SLACK
    product = factor_generic(r, mu)
    report = Report(title=f"factorization r={r} mu={[list(p) for p in mu]}")
    for d in sorted({depth, depth + slack}):
        H = solve_H(WreathKey.of(deep_weyl(r, d), mu), store)
        report.add(f"depth {d}", H == product, lhs=product, rhs=H)
    return report


def worked_factor_example() -> MultiSymFn:
    """s_2[Z] + (q/t^2) s_11[Z] with Z = X0 + t X1 + t^2 X2."""
    q, t = _qt()
    z = (RatFn2.one(), t, t ** 2)
    base = schur([(2,), (), ()]) + schur([(1, 1), (), ()]) * (q / t ** 2)
    return substitute_generators(base, lambda k, _i: {j: c.power_substitute(k) for j, c in enumerate(z)})
