"""Named verification suites, each a deterministic list of cases."""
from __future__ import annotations

import random
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from wreathmac.models import Report, WreathKey
from wreathmac.services import quiverref, symfn, toroidal, wreath
from wreathmac.services.cache import ResultCache
from wreathmac.services.exactalg import CycPoly, LaurentPoly2, RatFn2
from wreathmac.services.multisym import MultiSymFn, from_schur, schur
from wreathmac.services.partcomb import (
    A_poly,
    AffineWeylElt,
    B_poly,
    Cell,
    MayaDiagram,
    MultiPartition,
    Partition,
    addable_removable,
    core_of_root,
    hook_data,
    kappa_bar,
    multipartitions_of,
    order_ge_w,
    partitions_of,
    quot_core,
    tau,
    tau_w,
    weyl_act_partition,
    weyl_canonical,
)

from .runner import Case

Store = Optional[ResultCache]


def _qt() -> Tuple[RatFn2, RatFn2]:
    return RatFn2.gens()


def weyl_ball(r: int, max_length: int) -> List[AffineWeylElt]:
    """Elements of length <= max_length in breadth-first order."""
    seen = {AffineWeylElt.identity(r)}
    layer = [AffineWeylElt.identity(r)]
    out = list(layer)
    for _ in range(max_length):
        nxt = []
        for w in layer:
            for i in range(r if r > 1 else 0):
                v = w * AffineWeylElt.s(i, r)
                if v not in seen and v.length() <= max_length:
                    seen.add(v)
                    nxt.append(v)
        out += nxt
        layer = nxt
    return out


def _keys(r: int, sizes: Iterable[int], max_length: int) -> List[WreathKey]:
    return [
        WreathKey.of(w, mu)
        for n in sizes
        for w in weyl_ball(r, max_length)
        for mu in multipartitions_of(r, n)
    ]


def _key_cases(prefix: str, fn: Callable[[WreathKey, Store], Report], keys: Sequence[WreathKey]) -> List[Case]:
    return [Case(f"{prefix} {k.canonical_json()}", partial(fn, k)) for k in keys]


def _lit(mu: MultiPartition) -> str:
    return str([list(p) for p in mu])


# ---------------------------------------------------------------- worked examples

def golden_triangularity() -> Dict[MultiPartition, MultiSymFn]:
    """The three degree-one polynomials for w = s2 s1 t_{-alpha_1}, r = 3."""
    q, t = _qt()
    s0, s1, s2 = ((1,), (), ()), ((), (1,), ()), ((), (), (1,))
    return {
        s0: from_schur(3, {s0: 1, s1: q ** 2, s2: q}),
        s1: from_schur(3, {s0: 1, s1: t, s2: q}),
        s2: from_schur(3, {s0: 1, s1: t, s2: t ** 2}),
    }


def golden_nine_terms() -> MultiSymFn:
    """H for w = t_{-alpha_2}, mu = ((1), (), (1)), r = 3."""
    q, t = _qt()
    return from_schur(3, {
        ((2,), (), ()): 1,
        ((1, 1), (), ()): q * t,
        ((1,), (1,), ()): q ** 2 + t,
        ((1,), (), (1,)): t / q + q,
        ((), (2,), ()): q,
        ((), (1, 1), ()): q ** 2 * t,
        ((), (1,), (1,)): q * t + 1,
        ((), (), (2,)): q.inverse(),
        ((), (), (1, 1)): t,
    })


def quiver_chain_expected() -> List[CycPoly]:
    q, t = LaurentPoly2.gens()
    return [
        CycPoly(3, [q ** 3 + q * t + 1, q ** 3 * t + q ** 2 + t, q ** 2 * t + q]),
        CycPoly(3, [q ** 3 + q * t + 1, q ** 2 + t, q ** 2 * t + q]),
        CycPoly(3, [q * t + 1, q ** 2 + t, q ** 2 * t + q]),
        CycPoly(3, [q * t + 1, q ** 2 + t, q ** 2 * t + q]),
        CycPoly(3, [q * t + 1, q ** 2 + t, t * q ** -1 + q]),
    ]


def _classical_examples(store: Store) -> Report:
    q, t = _qt()
    report = Report(title="classical worked examples")
    h2 = symfn.tilde_H((2,))
    report.add("H(2)", h2 == symfn.schur((2,)) + symfn.schur((1, 1)) * q, lhs=h2)
    h21 = symfn.tilde_H((2, 1))
    rhs = symfn.schur((3,)) + symfn.schur((2, 1)) * (q + t) + symfn.schur((1, 1, 1)) * (q * t)
    report.add("H(2,1)", h21 == rhs, lhs=h21, rhs=rhs)
    p2 = symfn.macdonald_P((2,))
    rhs = symfn.monomial_m((2,)) + symfn.monomial_m((1, 1)) * ((1 + q) * (1 - t) / (1 - q * t))
    report.add("P(2,0)", p2 == rhs, lhs=p2, rhs=rhs)
    report.add("P(1,1)", symfn.macdonald_P((1, 1)) == symfn.monomial_m((1, 1)))
    m = symfn.macdonald_MN_matrix(2, 0)
    report.add("M2 m(0,0)", m[()].get((), RatFn2.zero()) == 1 + t, lhs=m[()])
    return report


def _combinatorics_examples(store: Store) -> Report:
    q, t = LaurentPoly2.gens()
    report = Report(title="combinatorics worked examples")
    report.add("hook (6,4,2,1) at (1,1)", hook_data((6, 4, 2, 1), Cell(1, 1)) == (2, 1, 4))
    report.add("B(3,2)", B_poly((3, 2)) == 1 + q + q ** 2 + t + q * t, lhs=B_poly((3, 2)))
    report.add("A(3,2)", A_poly((3, 2)) == q ** 3 + q ** 2 * t + t ** 2 - q * t * (q ** 2 + q * t), lhs=A_poly((3, 2)))
    adds, rems = addable_removable((3, 2), 1)
    report.add("addable (3,2)", sorted(adds) == sorted([Cell(3, 0), Cell(2, 1), Cell(0, 2)]), lhs=adds)
    report.add("removable (3,2)", sorted(rems) == sorted([Cell(2, 0), Cell(1, 1)]), lhs=rems)
    quot, core, charges = quot_core((4, 3, 2, 2), 3)
    report.add("quot (4,3,2,2)", quot == ((1,), (), (2,)), lhs=quot)
    report.add("core (4,3,2,2)", core == (2,), lhs=core)
    report.add("charges (4,3,2,2)", charges == (1, -1, 0), lhs=charges)
    report.add("kappa (4,3,2,2)", kappa_bar((4, 3, 2, 2), 3) == (1, -1, 0))
    report.add("core of alpha_1", core_of_root((1, -1, 0), 3) == (2,))
    report.add("core of alpha_2", core_of_root((0, 1, -1), 3) == (1, 1))
    report.add("s0 . empty", weyl_act_partition(AffineWeylElt.s(0, 3), ()) == (1,))
    report.add("t_{alpha_1} . empty", weyl_act_partition(AffineWeylElt.translation((1, -1, 0)), ()) == (2,))
    report.add("tau to (5)", tau(((), (1,), ()), (1, -1, 0)) == (5,))
    w = weyl_canonical("t[0,1,-1]", 3)
    report.add("tau_w to (4,4)", tau_w(w, ((1,), (), (1,))) == (4, 4))
    report.add("length t[0,1,-1]", w.length() == 4, lhs=w.reduced_word())
    box = [((1,), (), ()), ((), (1,), ()), ((), (), (1,))]
    w1 = weyl_canonical("t[1,-1,0]", 3)
    report.add("order t_{-alpha_1}", order_ge_w(w1, box[1], box[2]) and order_ge_w(w1, box[2], box[0]))
    w2 = weyl_canonical("s2 s1 t[1,-1,0]", 3)
    report.add("order s2 s1 t_{-alpha_1}", order_ge_w(w2, box[0], box[1]) and order_ge_w(w2, box[1], box[2]))
    return report


def _wreath_examples(store: Store) -> Report:
    report = Report(title="wreath golden polynomials")
    w = weyl_canonical("s2 s1 t[1,-1,0]", 3)
    for mu, expected in golden_triangularity().items():
        H = wreath.solve_H(WreathKey.of(w, mu), store)
        report.add(f"H {_lit(mu)}", H == expected, lhs=H, rhs=expected)
    key = wreath.make_key(3, "t[0,1,-1]", ((1,), (), (1,)))
    H = wreath.solve_H(key, store)
    report.add("nine-term expansion", H == golden_nine_terms(), lhs=H, rhs=golden_nine_terms())
    H1 = wreath.solve_H(wreath.make_key(1, "", ((2,),)), store)
    q, _ = _qt()
    expected = from_schur(1, {((2,),): 1, ((1, 1),): q})
    report.add("r=1 H(2)", H1 == expected, lhs=H1, rhs=expected)
    return report


def _quiver_examples(store: Store) -> Report:
    q, t = LaurentPoly2.gens()
    report = Report(title="quiver data worked example")
    key = wreath.make_key(3, "t[0,1,-1]", ((1,), (), (1,)))
    seed = quiverref.seed_character(tau_w(key.w, key.mu), 3)
    chain = quiverref.B_chain(seed, [2, 1, 0, 1])
    for n, (got, want) in enumerate(zip(chain, quiver_chain_expected())):
        report.add(f"arrow {n}", got == want, lhs=got, rhs=want)
    for i, want in enumerate([q * t, q ** 2 * t, t]):
        got = quiverref.nabla_eigen(key, i)
        report.add(f"nabla eigenvalue {i}", got == want, lhs=got, rhs=want)
    report.checks += quiverref.procesi_normalization_check(key, store).checks
    return report


def _factor_examples(store: Store) -> Report:
    report = Report(title="factorization worked example")
    mu = ((), (), (2,))
    got = wreath.factor_generic(3, mu)
    want = wreath.worked_factor_example()
    report.add("s2[Z] + (q/t^2) s11[Z]", got == want, lhs=got, rhs=want)
    q, t = _qt()
    entries = all(
        wreath.generic_matrix_entry(3, i, j) == (t ** j if i >= j else q ** (3 - j))
        for i in range(3)
        for j in range(3)
    )
    report.add("generic matrix entries", entries)
    return report


def _toroidal_examples(store: Store) -> Report:
    report = Report(title="vertex representation worked examples")
    report.checks += toroidal.cocycle_checks(3).checks
    words = toroidal.eigen_words(3, 1, True)
    report.add("r=3 i=1 e-word count", len(words) == 4, lhs=len(words), rhs=4)
    vac = toroidal.embed_H((), 3)
    report.add("embed empty", vac == toroidal.VertexVec.vacuum(3), lhs=vac)
    key, alpha = toroidal.embed_key((3, 3, 2, 2), 3)
    report.add("embed (3,3,2,2) lattice", alpha == (0, -1), lhs=alpha)
    report.add("embed (3,3,2,2) quotient", key.mu == ((1, 1), (), ()), lhs=key.mu)
    return report


# ---------------------------------------------------------------- suites

def worked_example_suite() -> List[Case]:
    return [
        Case("classical", _classical_examples),
        Case("combinatorics", _combinatorics_examples),
        Case("wreath", _wreath_examples),
        Case("quiver", _quiver_examples),
        Case("factor", _factor_examples),
        Case("toroidal", _toroidal_examples),
        Case("toroidal eigen (3,3,2,2)", partial(_eigen, (3, 3, 2, 2))),
    ]


def _classical_eigen(mu: Partition, store: Store) -> Report:
    report = Report(title=f"classical eigenoperators {list(mu)}")
    H = symfn.tilde_H(mu)
    a = RatFn2(A_poly(mu))
    report.add("D~ H", symfn.D_tilde(H) == H * a)
    report.add("D~* H", symfn.D_tilde_star(H) == H * a.inv())
    P = symfn.macdonald_P(mu)
    report.add("D0 P", symfn.D0(P) == P * a.substitute_exponents((1, 0, 0, -1)))
    return report


def _mn_eigen(mu: Partition, store: Store) -> Report:
    q, t = _qt()
    N = 2
    padded = tuple(mu) + (0,) * (N - len(mu))
    value = RatFn2.zero()
    for i, part in enumerate(padded):
        value = value + q ** part * t ** (N - 1 - i)
    poly = symfn.poly_from_symfn(symfn.macdonald_P(mu), N)
    image = symfn.macdonald_MN(N, poly)
    report = Report(title=f"M_2 on P{list(mu)}")
    scaled = {e: c * value for e, c in poly.items()}
    report.add("eigenvalue", image == scaled, detail=f"expected {value}")
    return report


def classical() -> List[Case]:
    cases = [Case("worked examples", _classical_examples)]
    for n in range(1, 6):
        cases += [Case(f"eigen {list(mu)}", partial(_classical_eigen, mu)) for mu in partitions_of(n)]
    for n in range(1, 4):
        cases += [Case(f"M2 {list(mu)}", partial(_mn_eigen, mu)) for mu in partitions_of(n) if len(mu) <= 2]
    return cases


def _roundtrips(r: int, max_size: int, store: Store) -> Report:
    report = Report(title=f"core/quotient roundtrips r={r}")
    for n in range(max_size + 1):
        for mu in partitions_of(n):
            quot, core, charges = quot_core(mu, r)
            back = tau(quot, charges)
            ok = back == mu and core_of_root(charges, r) == core and charges == kappa_bar(core, r)
            if not ok:
                report.add(f"{list(mu)}", False, lhs=back, rhs=mu)
            maya = MayaDiagram(mu, 0)
            rebuilt = MayaDiagram.from_holes(set(maya.holes_from(-n - 2, n + 2)), -n - 2, n + 2)
            if rebuilt != maya:
                report.add(f"maya {list(mu)}", False, lhs=rebuilt, rhs=maya)
    report.add("all partitions", report.ok, detail=f"|mu| <= {max_size}")
    return report


def combinatorics() -> List[Case]:
    cases = [Case("worked examples", _combinatorics_examples)]
    cases += [Case(f"roundtrips r={r}", partial(_roundtrips, r, 10)) for r in (2, 3, 4)]
    return cases


def wreath_suite() -> List[Case]:
    cases = [Case("golden polynomials", _wreath_examples)]
    for r, sizes in ((2, (1, 2, 3)), (3, (1, 2, 3))):
        cases += _key_cases("kostka", wreath.kostka_checks, _keys(r, sizes, 4))
    return cases


def symmetries() -> List[Case]:
    keys = _keys(3, (1, 2), 3)
    cases = _key_cases("symmetries", wreath.check_symmetries, keys)
    cases += _key_cases("nabla inversion", wreath.nabla_inversion_check, _keys(2, (1, 2), 2))
    return cases


def _orthogonality(r: int, n: int, w: AffineWeylElt, store: Store) -> Report:
    return wreath.orthogonality(r, n, w, store)


def norms() -> List[Case]:
    cases: List[Case] = []
    for r in (2, 3):
        cases += _key_cases("norm", wreath.norm_report, _keys(r, (1, 2), 4))
        cases += [
            Case(f"orthogonality r={r} n=2 w={w.window()}", partial(_orthogonality, r, 2, w))
            for w in weyl_ball(r, 1)
        ]
    return cases


def _reflection_relations(r: int, samples: int, store: Store) -> Report:
    rng = random.Random(r)
    report = Report(title=f"reflection relations r={r}")
    hecke = braid = True
    for _ in range(samples):
        f = quiverref.random_cycpoly(r, rng)
        i, j = rng.randrange(r), rng.randrange(r)
        hecke = hecke and quiverref.hecke_holds(i, f)
        if i != j and r >= 3:
            braid = braid and quiverref.braid_holds(i, j, f)
    report.add("hecke", hecke, detail=f"{samples} samples")
    if r >= 3:
        report.add("braid", braid, detail=f"{samples} samples")
    return report


def quiver() -> List[Case]:
    cases = [Case("worked example", _quiver_examples)]
    cases += [Case(f"relations r={r}", partial(_reflection_relations, r, 200)) for r in (2, 3)]
    for r in (2, 3):
        keys = _keys(r, (1, 2), 2)
        cases += _key_cases("quiver data", quiverref.quiver_data_check, keys)
        cases += _key_cases("procesi", quiverref.procesi_normalization_check, keys)
    return cases


def _factor(mu: MultiPartition, store: Store) -> Report:
    return wreath.factor_check(3, mu, store)


def factor() -> List[Case]:
    cases = [Case("worked example", _factor_examples)]
    for n in (1, 2):
        cases += [Case(f"generic {_lit(mu)}", partial(_factor, mu)) for mu in multipartitions_of(3, n)]
    return cases


def eigen_partitions(r: int = 3, max_quotient: int = 2) -> List[Partition]:
    cores: List[Partition] = [(), (1,), (2,), (1, 1)]
    out: List[Partition] = []
    for core in cores:
        _, _, charges = quot_core(core, r)
        for n in range(max_quotient + 1):
            for quot in multipartitions_of(r, n):
                out.append(tau(quot, charges))
    return out


def _eigen(mu: Partition, store: Store) -> Report:
    return toroidal.eigen_check(mu, 3, store)


def _relations(store: Store) -> Report:
    return toroidal.relation_checks(3)


def _cocycle(r: int, store: Store) -> Report:
    return toroidal.cocycle_checks(r)


def _fock(mu: Partition, store: Store) -> Report:
    return toroidal.fock_check(mu, 3)


def toroidal_suite() -> List[Case]:
    cases = [Case(f"cocycle r={r}", partial(_cocycle, r)) for r in (3, 4)]
    cases.append(Case("mode relations r=3", _relations))
    cases += [Case(f"fock {list(mu)}", partial(_fock, mu)) for mu in [(), (1,), (2,), (1, 1), (3, 3, 2, 2)]]
    cases += [Case(f"eigen {list(mu)}", partial(_eigen, mu)) for mu in eigen_partitions()]
    return cases


def _P_orthogonality(r: int, n: int, w: AffineWeylElt, store: Store) -> Report:
    return wreath.P_orthogonality(r, n, w, store)


def conjectures() -> List[Case]:
    keys = _keys(2, (1, 2), 3)
    keys += [wreath.make_key(3, w, mu) for w in ("t[1,-1,0]", "s2 s1 t[1,-1,0]") for mu in multipartitions_of(3, 1)]
    cases = _key_cases("conjectures", wreath.check_conjectures, keys)
    cases += _key_cases("P", wreath.P_checks, _keys(2, (1, 2), 2))
    cases += [
        Case(f"P orthogonality r=2 n=2 w={w.window()}", partial(_P_orthogonality, 2, 2, w))
        for w in weyl_ball(2, 1)
    ]
    return cases


SUITE_BUILDERS: Dict[str, Callable[[], List[Case]]] = {
    "paper-examples": worked_example_suite,
    "classical": classical,
    "combinatorics": combinatorics,
    "wreath": wreath_suite,
    "symmetries": symmetries,
    "norms": norms,
    "quiver": quiver,
    "factor": factor,
    "toroidal": toroidal_suite,
    "conjectures": conjectures,
}


def build_suite(name: str) -> List[Case]:
    try:
        return SUITE_BUILDERS[name]()
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITE_BUILDERS)}") from None
