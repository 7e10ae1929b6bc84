import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupgraph.errors import InvalidSpec, InvalidTable, NoFaithfulAction
from groupgraph.groups import (
    Alternating,
    Cyclic,
    Dihedral,
    DirectProduct,
    ElementaryAbelian,
    FiniteGroup,
    GeneralizedQuaternion,
    SemidirectCyclic,
    Symmetric,
    build_group,
    center,
    centralizer,
    cyclic_subgroup,
    element_order,
    exponent,
    generated_subgroup,
    is_cyclic_set,
    order_spectrum,
)

import oracles

FAMILY = [
    Cyclic(1), Cyclic(6), Cyclic(12), Dihedral(6), Dihedral(8), Dihedral(12), GeneralizedQuaternion(8),
    GeneralizedQuaternion(12), GeneralizedQuaternion(16), Symmetric(3), Symmetric(4), Alternating(4),
    ElementaryAbelian(2, 3), ElementaryAbelian(3, 2), DirectProduct((Cyclic(2), Cyclic(4))),
    DirectProduct((Cyclic(2), Symmetric(3))), SemidirectCyclic(7, 1, 3, 1), SemidirectCyclic(5, 1, 2, 2),
    SemidirectCyclic(3, 2, 2, 1),
]


@pytest.mark.parametrize("spec", FAMILY, ids=lambda s: s.label)
def test_group_axioms(spec):
    G = build_group(spec)
    n = G.order
    assert n == spec.order
    ids = np.arange(n)
    assert G.identity == 0
    assert (G.mul[G.identity] == ids).all() and (G.mul[:, G.identity] == ids).all()
    assert (G.mul[ids, G.inv] == G.identity).all()
    assert (n % G.orders == 0).all()
    assert (G.orders[G.inv] == G.orders).all()
    table = oracles.table_of(G)
    for x in range(n):
        assert G.orders[x] == oracles.order(table, x)
        assert len(cyclic_subgroup(G, x)) == G.orders[x]


def test_cyclic_six_orders():
    G = build_group(Cyclic(6))
    assert sorted(G.orders.tolist()) == [1, 2, 3, 3, 6, 6]


def test_quaternion_has_one_involution():
    G = build_group(GeneralizedQuaternion(8))
    assert G.order == 8
    assert int((G.orders == 2).sum()) == 1


def test_semidirect_21():
    G = build_group(SemidirectCyclic(7, 1, 3, 1))
    assert G.order == 21
    assert not G.commutes.all()
    assert int((G.orders == 3).sum()) == 14


def test_semidirect_action_unit_is_smallest():
    assert SemidirectCyclic(7, 1, 3, 1).unit == 2
    assert SemidirectCyclic(5, 1, 2, 2).unit == 2
    assert SemidirectCyclic(3, 2, 2, 1).unit == 8


@pytest.mark.parametrize("spec", [s for s in FAMILY if isinstance(s, SemidirectCyclic)], ids=lambda s: s.label)
def test_semidirect_action_is_faithful(spec):
    G = build_group(spec)
    p_part = [x for x in range(G.order) if spec.normal_order % G.orders[x] == 0]
    assert centralizer(G, p_part).elements == tuple(p_part)


@pytest.mark.parametrize("bad", [
    lambda: Cyclic(0), lambda: Dihedral(4), lambda: Dihedral(7), lambda: GeneralizedQuaternion(4),
    lambda: GeneralizedQuaternion(10), lambda: Symmetric(0), lambda: Alternating(2), lambda: ElementaryAbelian(4, 2),
    lambda: ElementaryAbelian(2, 0), lambda: SemidirectCyclic(7, 1, 7, 1), lambda: SemidirectCyclic(6, 1, 5, 1),
    lambda: SemidirectCyclic(7, 0, 3, 1), lambda: DirectProduct((Cyclic(2),)),
])
def test_invalid_specs(bad):
    with pytest.raises(InvalidSpec):
        bad()


def test_no_faithful_action():
    with pytest.raises(NoFaithfulAction):
        build_group(SemidirectCyclic(7, 1, 2, 2))


def test_element_order_examples():
    C12 = build_group(Cyclic(12))
    assert element_order(C12, 8) == 3
    for spec in FAMILY:
        G = build_group(spec)
        assert element_order(G, G.identity) == 1
    Q8 = build_group(GeneralizedQuaternion(8))
    a = next(x for x in range(8) if Q8.orders[x] == 4)
    assert element_order(Q8, int(Q8.mul[a, a])) == 2


def test_cyclic_subgroup_examples():
    C12 = build_group(Cyclic(12))
    assert cyclic_subgroup(C12, 4).elements == (0, 4, 8)
    S3 = build_group(Symmetric(3))
    t = next(x for x in range(6) if S3.orders[x] == 2)
    assert set(cyclic_subgroup(S3, t)) == {0, t}
    Q8 = build_group(GeneralizedQuaternion(8))
    a = 1
    H = cyclic_subgroup(Q8, a)
    assert len(H) == 4 and int(Q8.mul[a, a]) in H


def test_generated_subgroup_examples():
    S3 = build_group(Symmetric(3))
    t1, t2 = [x for x in range(6) if S3.orders[x] == 2][:2]
    assert len(generated_subgroup(S3, {t1, t2})) == 6
    assert generated_subgroup(S3, {0}).elements == (0,)
    V = build_group(DirectProduct((Cyclic(2), Cyclic(2))))
    # (1,0) has id 2 and (0,1) has id 1
    assert len(generated_subgroup(V, {2, 1})) == 4


@pytest.mark.parametrize("spec", FAMILY, ids=lambda s: s.label)
def test_generated_subgroup_matches_closure_oracle(spec):
    G = build_group(spec)
    table = oracles.table_of(G)
    n = G.order
    for x in range(0, n, max(1, n // 5)):
        for y in range(0, n, max(1, n // 4)):
            assert set(generated_subgroup(G, {x, y})) == oracles.closure(table, [x, y])


def test_is_cyclic_set_examples():
    C6 = build_group(Cyclic(6))
    assert is_cyclic_set(C6, {2, 3})
    V = build_group(DirectProduct((Cyclic(2), Cyclic(2))))
    assert not is_cyclic_set(V, {2, 1})
    for spec in FAMILY:
        G = build_group(spec)
        assert all(is_cyclic_set(G, {x}) for x in range(G.order))


def test_exponent_center_spectrum():
    S3 = build_group(Symmetric(3))
    assert exponent(S3) == 6
    assert order_spectrum(S3) == {1: 1, 2: 3, 3: 2}
    Q8 = build_group(GeneralizedQuaternion(8))
    assert len(center(Q8)) == 2
    assert exponent(build_group(Symmetric(4))) == 12


@pytest.mark.parametrize("spec", FAMILY, ids=lambda s: s.label)
def test_spectrum_sums_to_order(spec):
    G = build_group(spec)
    assert sum(order_spectrum(G).values()) == G.order
    assert exponent(G) == math.lcm(*order_spectrum(G))


@given(st.integers(min_value=1, max_value=120))
@settings(max_examples=40, deadline=None)
def test_cyclic_spectrum_is_totient(n):
    G = build_group(Cyclic(n))
    spec = order_spectrum(G)
    divs = [d for d in range(1, n + 1) if n % d == 0]
    assert spec == {d: oracles.euler_phi(d) for d in divs}


def test_triple_cyclicity_exhaustive_small():
    for spec in (Symmetric(3), GeneralizedQuaternion(8), Dihedral(8), DirectProduct((Cyclic(2), Cyclic(6)))):
        G = build_group(spec)
        n = G.order
        pair = {(x, y): is_cyclic_set(G, {x, y}) for x in range(n) for y in range(n)}
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if pair[x, y] and pair[x, z] and pair[y, z]:
                        assert is_cyclic_set(G, {x, y, z})


def test_from_table_rejects_non_groups():
    with pytest.raises(InvalidTable):
        FiniteGroup.from_table([[0, 1], [0, 1]])
    with pytest.raises(InvalidTable):
        # Latin square with identity 0 but not associative (a quasigroup of order 5)
        FiniteGroup.from_table([
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ])


def test_large_group_uses_sampled_associativity():
    G = build_group(Symmetric(6)) if False else build_group(Alternating(6))
    assert G.order == 360
    assert order_spectrum(G) == {1: 1, 2: 45, 3: 80, 4: 90, 5: 144}


def test_permutation_ids_lexicographic():
    S3 = build_group(Symmetric(3))
    assert Counter(S3.orders.tolist()) == Counter({1: 1, 2: 3, 3: 2})
    assert S3.label == "S3"
