import random
from collections import Counter

import pytest

from cellschur.cells import gram_matrix, lambda_zero, verify_cell_axioms, verify_ideals
from cellschur.combinatorics import EMPTY_PARTITION, Partition, all_permutations, compose
from cellschur.linalg import GF, QQ, ZZ, determinant
from cellschur.monoid import (
    BoundError,
    MonoidSpec,
    SubsetOrdering,
    assemble,
    compose_maps,
    enumerate_monoid,
    identity_map,
    index_of,
    index_subsets,
    is_bijective_on,
    psi_map,
    reachable_block_families,
)
from cellschur.monoid_cells import (
    MonoidCells,
    h_cd,
    monoid_product,
    murphy_basis,
    murphy_change_of_basis,
    perm_product,
    predicted_monoid_lambda0,
    radical_equivalence_check,
)

P = Partition


def test_murphy_small():
    els = {(e.shape, e.s, e.t): e.expansion for e in murphy_basis(2)}
    assert els[(P((2,)), ((1, 2),), ((1, 2),))] == {(1, 2): 1, (2, 1): 1}
    assert els[(P((1, 1)), ((1,), (2,)), ((1,), (2,)))] == {(1, 2): 1}
    assert [e.expansion for e in murphy_basis(1)] == [{(1,): 1}]
    with pytest.raises(BoundError):
        murphy_basis(6)


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_murphy_change_of_basis_unimodular(i):
    m = murphy_change_of_basis(i)
    assert len(m) == len(all_permutations(i))
    if i <= 3:
        assert abs(determinant(m)) == 1


def test_murphy_unitriangularity_anchor():
    from cellschur.combinatorics import inverse, tableau_perm

    for e in murphy_basis(4):
        anchor = compose(tableau_perm(e.s), inverse(tableau_perm(e.t)))
        assert e.expansion[anchor] == 1


def test_h_cd_examples():
    sigma = (2, 3, 1)
    assert h_cd((1, 2, 3), ((1,), (2,), (3,)), {sigma: 1}, 3) == {sigma: 1}
    assert h_cd((2,), ((1, 2),), {(1,): 1}, 3) == {(2, 2, 0): 1}
    with pytest.raises(ValueError):
        h_cd((1, 2), ((1,),), {(1,): 1}, 3)


def test_h_cd_injective():
    o = SubsetOrdering(4)
    for i in range(1, 5):
        C = index_subsets(i, 4)[0]
        for D in reachable_block_families(MonoidSpec("full", 4), i, o)[:3]:
            images = [next(iter(h_cd(C, D, {w: 1}, 4))) for w in all_permutations(i)]
            assert len(set(images)) == len(images)


def test_t2_structure():
    cs = MonoidCells(MonoidSpec("full", 2))
    assert cs.dimension == 4
    assert {lam: (len(cs.left_index(lam)), len(cs.right_index(lam))) for lam in cs.poset} == {
        P((2,)): (1, 1),
        P((1, 1)): (1, 1),
        P((1,)): (2, 1),
    }
    assert MonoidCells(MonoidSpec("rook", 2)).dimension == 7


@pytest.mark.parametrize("kind", ["full", "rook", "partial"])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_basis_cardinality(kind, r):
    cs = MonoidCells(MonoidSpec(kind, r))
    keys = cs.cell_keys()
    assert len(keys) == len(enumerate_monoid(MonoidSpec(kind, r)))
    support = Counter(a for k in keys for a in cs.cell_element(*k))
    assert set(support) == set(cs.natural_basis())


@pytest.mark.parametrize("kind", ["full", "rook", "partial"])
def test_axioms_r3(kind):
    cs = MonoidCells(MonoidSpec(kind, 3))
    rep = verify_cell_axioms(cs)
    assert rep.passed, rep.counterexample
    assert verify_ideals(cs)


def test_axioms_under_nu_ordering():
    cs = MonoidCells(MonoidSpec("full", 3), ZZ, SubsetOrdering(3, (3,)))
    assert verify_cell_axioms(cs).passed


def _span_index_below(x, i):
    return all(index_of(a) < i for a in x)


def test_multiplication_rule():
    """H_{C',D}(x) H_{C,D'}(y) is either of lower index or H_{C',D'}(x rho y)."""
    r = 3
    spec = MonoidSpec("partial", r)
    o = SubsetOrdering(r)
    rng = random.Random(1)
    for i in range(1, r + 1):
        Cs = index_subsets(i, r)
        Ds = reachable_block_families(spec, i, o)
        perms = all_permutations(i)
        for C in Cs:
            for D in Ds:
                rho = compose(psi_map(D, r), C)  # psi_D o phi_C on {1..i}
                for _ in range(3):
                    Cp, Dp = rng.choice(Cs), rng.choice(Ds)
                    x = {rng.choice(perms): 1, rng.choice(perms): 2}
                    y = {rng.choice(perms): -1, rng.choice(perms): 1}
                    prod = monoid_product(h_cd(Cp, D, x, r), h_cd(C, Dp, y, r))
                    if is_bijective_on(rho):
                        assert prod == h_cd(Cp, Dp, perm_product(perm_product(x, {rho: 1}), y), r)
                    else:
                        assert _span_index_below(prod, i)


def test_lower_index_span_is_union_of_layers():
    cs = MonoidCells(MonoidSpec("partial", 3))
    for i in range(0, 4):
        low = {a for a in cs.natural_basis() if index_of(a) <= i}
        layer_keys = [k for k in cs.cell_keys() if k[0].index <= i]
        span = {a for k in layer_keys for a in cs.cell_element(*k)}
        assert span == low and len(layer_keys) == len(low)


def test_zero_layer_gram():
    for kind in ("rook", "partial"):
        cs = MonoidCells(MonoidSpec(kind, 3))
        assert gram_matrix(EMPTY_PARTITION, cs).matrix == [[1]]


@pytest.mark.parametrize("kind", ["full", "rook"])
@pytest.mark.parametrize("field", [QQ, GF(2), GF(3)])
def test_radical_equivalence(kind, field):
    spec = MonoidSpec(kind, 3)
    cs = MonoidCells(spec)
    for lam in cs.poset:
        if lam.index == 0:
            continue
        assert radical_equivalence_check(spec, field, lam, cs).equivalent
    assert lambda_zero(cs, field) == predicted_monoid_lambda0(spec, field)


def test_radical_equivalence_examples():
    res = radical_equivalence_check(MonoidSpec("full", 2), GF(2), P((2,)))
    assert res.monoid_zero and res.symmetric_zero and res.equivalent
    res = radical_equivalence_check(MonoidSpec("rook", 3), GF(3), P((1, 1, 1)))
    assert res.equivalent
    with pytest.raises(ValueError):
        radical_equivalence_check(MonoidSpec("rook", 3), QQ, EMPTY_PARTITION)


def test_identity():
    cs = MonoidCells(MonoidSpec("full", 3))
    e = cs.identity()
    for a in cs.natural_basis()[:10]:
        assert monoid_product(e, {a: 1}) == {a: 1} == monoid_product({a: 1}, e)
    assert e == {identity_map(3): 1}
    assert compose_maps(identity_map(3), (1, 1, 2)) == (1, 1, 2)
    assert assemble((1,), (1,), ((1, 2, 3),), 3) == (1, 1, 1)


@pytest.mark.slow
def test_axioms_t4():
    cs = MonoidCells(MonoidSpec("full", 4))
    assert cs.dimension == 256
    assert verify_cell_axioms(cs).passed
