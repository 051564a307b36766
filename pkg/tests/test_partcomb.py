from __future__ import annotations

import itertools
import random

import pytest

from wreathmac.services.exactalg import LaurentPoly2
from wreathmac.services.partcomb import (
    A_poly,
    AffineWeylElt,
    B_poly,
    Cell,
    CellOutsideDiagramError,
    MayaDiagram,
    SizeMismatchError,
    WeylParseError,
    addable_removable,
    core_of_root,
    dominates,
    empty_multipartition,
    hook_data,
    hook_length_count,
    kappa_bar,
    multi_transpose_star,
    multipartitions_of,
    multitableaux_count,
    order_ge_w,
    partitions_of,
    permute_multipartition,
    quot_core,
    tau,
    transpose,
    to_simple_coords,
    from_simple_coords,
    weyl_act_partition,
    weyl_canonical,
    weyl_word,
)


def test_hook_data_matches_worked_cell() -> None:
    assert hook_data((6, 4, 2, 1), Cell(1, 1)) == (2, 1, 4)
    with pytest.raises(CellOutsideDiagramError):
        hook_data((2, 1), Cell(1, 1))


def test_B_and_A_polynomials() -> None:
    q, t = LaurentPoly2.gens()
    assert B_poly((3, 2)) == 1 + q + q ** 2 + t + q * t
    assert A_poly((1,)) == q + t - q * t
    assert A_poly((1,), inverse=True) == q ** -1 + t ** -1 - q ** -1 * t ** -1


def test_partition_counts() -> None:
    assert len(partitions_of(5)) == 7
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(multipartitions_of(3, 2)) == 9
    assert hook_length_count((3, 2)) == 5
    assert multitableaux_count(((2,), (1,))) == 3


def test_dominance_order() -> None:
    assert dominates((3,), (2, 1))
    assert not dominates((2, 1), (3,))
    assert dominates((2, 2), (2, 1, 1))
    with pytest.raises(SizeMismatchError):
        dominates((2,), (1,))


def test_addable_removable_by_residue() -> None:
    adds, rems = addable_removable((2, 1), 3, 0)
    assert adds == [Cell(1, 1)], f"residue-0 addable cells: {adds}"
    assert rems == []
    adds, rems = addable_removable((2, 1), 3, 1)
    assert adds == [Cell(2, 0)] and rems == [Cell(0, 1)]
    with pytest.raises(ValueError):
        addable_removable((2, 1), 3, 3)
    adds, rems = addable_removable((2, 1), 3)
    assert len(adds) == 3 and len(rems) == 2


def test_maya_diagram_holes() -> None:
    maya = MayaDiagram((2, 1), 0)
    assert maya.holes_from(-3, 3) == [-2, 0, 2]
    rebuilt = MayaDiagram.from_holes(set(maya.holes_from(-6, 6)) | set(range(6, 12)), -6, 12)
    assert rebuilt == maya


def test_quotient_core_and_charges() -> None:
    quot, core, charges = quot_core((4, 3, 2, 2), 3)
    assert quot == ((1,), (), (2,))
    assert core == (2,)
    assert charges == (1, -1, 0)
    assert tau(quot, charges) == (4, 3, 2, 2)
    assert kappa_bar((4, 3, 2, 2), 3) == charges


def test_kappa_bar_of_worked_partition() -> None:
    beta = kappa_bar((3, 3, 2, 2), 3)
    assert beta == (0, -1, 1)
    assert quot_core((3, 3, 2, 2), 3)[1] == (2, 1, 1)
    assert to_simple_coords(beta) == (0, -1)
    assert from_simple_coords((0, -1)) == beta


def test_weyl_parse_and_length() -> None:
    w = weyl_canonical("t[0,1,-1]", 3)
    assert w.length() == 4
    word = w.reduced_word()
    assert word == [2, 0, 1, 0], f"reduced word {word}"
    assert weyl_word(word, 3) == w and len(word) == w.length()
    assert weyl_word([2, 1, 0, 1], 3) == w, "the other reduced word names the same element"
    assert w.render() == "s2 s0 s1 s0"
    assert w * w.inverse() == AffineWeylElt.identity(3)
    assert weyl_canonical("s1 s1", 3) == AffineWeylElt.identity(3)
    assert weyl_canonical("s0", 3).length() == 1


def test_weyl_star_and_chi() -> None:
    chi = AffineWeylElt.chi(3)
    assert (chi * chi * chi) == AffineWeylElt.identity(3)
    s1 = AffineWeylElt.s(1, 3)
    assert s1.star() == AffineWeylElt.s(2, 3), "star conjugates by w0"


def test_weyl_parse_errors_carry_position() -> None:
    with pytest.raises(WeylParseError) as info:
        weyl_canonical("s1 q", 3)
    assert info.value.position == 2
    with pytest.raises(WeylParseError) as info:
        weyl_canonical("s3", 3)
    assert info.value.position == 0
    with pytest.raises(WeylParseError):
        weyl_canonical("t[1,0]", 3)


def test_transpose_star_reverses_components() -> None:
    assert multi_transpose_star(((2,), (), (1, 1))) == ((2,), (), (1, 1))
    assert multi_transpose_star(((2, 1), (1,))) == ((1,), (2, 1))


def random_weyl(rng: random.Random, r: int, max_len: int = 4) -> AffineWeylElt:
    return weyl_word([rng.randrange(r) for _ in range(rng.randint(0, max_len))], r)


def zero_sum_vectors(r: int, bound: int) -> list:
    out = []
    for head in itertools.product(range(-bound, bound + 1), repeat=r - 1):
        last = -sum(head)
        if abs(last) <= bound:
            out.append(head + (last,))
    return out


@pytest.mark.parametrize("r", [2, 3, 4])
def test_transpose_commutes_with_core_and_quotient(r: int) -> None:
    for n in range(9):
        for lam in partitions_of(n):
            quot, core, _ = quot_core(lam, r)
            quot_t, core_t, _ = quot_core(transpose(lam), r)
            assert core_t == transpose(core), f"core of {lam}^t"
            assert quot_t == multi_transpose_star(quot), f"quotient of {lam}^t: {quot_t} vs {quot}"


@pytest.mark.parametrize("r", [2, 3, 4])
def test_core_of_root_transposes_to_reversed_negation(r: int) -> None:
    for beta in zero_sum_vectors(r, 2):
        flipped = tuple(-x for x in reversed(beta))
        assert transpose(core_of_root(beta, r)) == core_of_root(flipped, r), f"beta={beta}"


@pytest.mark.parametrize("r", [2, 3, 4])
def test_weyl_action_commutes_with_transpose(r: int) -> None:
    rng = random.Random(100 + r)
    for _ in range(30):
        w = random_weyl(rng, r)
        for lam in partitions_of(rng.randint(0, 8)):
            got = transpose(weyl_act_partition(w, lam))
            assert got == weyl_act_partition(w.star(), transpose(lam)), f"w={w.render()!r} lam={lam}"


def test_order_is_invariant_under_finite_permutations() -> None:
    r = 3
    ws = [AffineWeylElt.identity(r), weyl_canonical("t[0,1,-1]", r), weyl_canonical("s2 s1 t[1,-1,0]", r)]
    mps = multipartitions_of(r, 2)
    for w in ws:
        for perm in itertools.permutations(range(r)):
            uw = AffineWeylElt(perm, (0,) * r) * w
            for lam, mu in itertools.product(mps, repeat=2):
                moved = order_ge_w(uw, permute_multipartition(perm, lam), permute_multipartition(perm, mu))
                assert order_ge_w(w, lam, mu) == moved, f"u={perm} lam={lam} mu={mu}"


@pytest.mark.parametrize("word", ["", "t[0,1,-1]", "s2 s1 t[1,-1,0]", "s0 s1"])
def test_order_w_is_a_partial_order(word: str) -> None:
    r = 3
    w = weyl_canonical(word, r)
    for n in range(4):
        mps = multipartitions_of(r, n)
        ge = {(a, b): order_ge_w(w, a, b) for a in mps for b in mps}
        for a in mps:
            assert ge[a, a], f"not reflexive at {a}"
            for b in mps:
                if a != b:
                    assert not (ge[a, b] and ge[b, a]), f"{a} and {b} compare both ways"
                if ge[a, b]:
                    for c in mps:
                        if ge[b, c]:
                            assert ge[a, c], f"{a} >= {b} >= {c} but not {a} >= {c}"
    with pytest.raises(SizeMismatchError):
        order_ge_w(w, ((1,), (), ()), empty_multipartition(r))


@pytest.mark.parametrize("r", [2, 3])
def test_tau_is_equivariant(r: int) -> None:
    rng = random.Random(7 * r)
    alphas = zero_sum_vectors(r, 2)
    for _ in range(40):
        w = random_weyl(rng, r)
        mu = rng.choice(multipartitions_of(r, rng.randint(0, 3)))
        alpha = rng.choice(alphas)
        assert tau(*w.act(mu, alpha)) == weyl_act_partition(w, tau(mu, alpha)), (
            f"w={w.render()!r} mu={mu} alpha={alpha}"
        )
