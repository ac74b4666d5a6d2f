from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from densesol.errors import GroupError, OrderCapExceeded
from densesol.groups import (FiniteGroup, center, element_order, is_cyclic, make_cyclic,
                             make_dihedral, make_direct_product, make_generalized_quaternion)
from densesol.lattice import all_subgroups, is_normal
from densesol.solitary import are_isomorphic

import oracles


def corpus():
    groups = [make_cyclic(n) for n in (1, 2, 6, 12, 16, 27)]
    groups += [make_dihedral(n) for n in (2, 3, 4, 8, 12)]
    groups += [make_generalized_quaternion(k) for k in (3, 4, 5, 6)]
    c2, c3 = make_cyclic(2), make_cyclic(3)
    groups += [make_direct_product(c2, c2), make_direct_product(c3, c3),
               make_direct_product(make_cyclic(5), make_cyclic(5)),
               make_direct_product(make_dihedral(3), c2)]
    return groups


@pytest.mark.parametrize("G", corpus(), ids=lambda G: G.label)
def test_group_axioms_exhaustive(G):
    G.check_axioms(limit=256)
    t = G.table
    n = G.order
    e = G.identity
    assert (t[e] == np.arange(n)).all() and (t[:, e] == np.arange(n)).all()
    assert (t[np.arange(n), G.inverse] == e).all()
    assert (t[G.inverse, np.arange(n)] == e).all()
    for a in range(n):
        assert (t[t[a]] == t[a][t]).all()


@pytest.mark.parametrize("G", corpus(), ids=lambda G: G.label)
def test_element_orders_divide_group_order(G):
    assert all(G.order % k == 0 for k in G.element_orders.tolist())
    assert G.element_orders.tolist() == oracles.element_orders(G.table.tolist())


def test_non_group_tables_are_rejected():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [0, 1]])
    # a Latin square with identity that is not associative (order 5 loop)
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError, match="associative"):
        FiniteGroup(loop)
    with pytest.raises(GroupError, match="associative"):
        FiniteGroup(loop, exhaustive_limit=0)


def test_cyclic():
    assert make_cyclic(1).order == 1
    assert len(all_subgroups(make_cyclic(6))) == 4
    assert element_order(make_cyclic(12), 1) == 12
    with pytest.raises(GroupError):
        make_cyclic(0)


def test_generalized_quaternion_small():
    Q8 = make_generalized_quaternion(3)
    assert Q8.order == 8
    assert Counter(Q8.element_orders.tolist()) == {1: 1, 2: 1, 4: 6}
    assert len(all_subgroups(Q8)) == 6
    Q16 = make_generalized_quaternion(4)
    assert Q16.order == 16
    assert sum(1 for H in all_subgroups(Q16) if H.order == 2) == 1
    with pytest.raises(GroupError):
        make_generalized_quaternion(2)


def test_quaternion_matches_hand_built_q8():
    # element-order profile and subgroup count agree with the unit quaternions
    hand = oracles.Q8_TABLE
    assert Counter(oracles.element_orders(hand)) == Counter(
        make_generalized_quaternion(3).element_orders.tolist())
    assert len(oracles.subsets_that_are_subgroups(hand)) == 6
    assert are_isomorphic(FiniteGroup(hand), make_generalized_quaternion(3))


def test_quaternion_presentation_relations():
    for k in (3, 4, 5, 6):
        G = make_generalized_quaternion(k)
        half = 2 ** (k - 2)
        a, b = 1, 2 ** (k - 1)          # a^1 b^0 and a^0 b^1
        assert G.power(a, 2 * half) == G.identity
        assert G.power(a, half) == G.mul(b, b)
        assert G.mul(G.mul(G.inv(b), a), b) == G.inv(a)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_quaternion_unique_involution(k):
    G = make_generalized_quaternion(k)
    assert int((G.element_orders == 2).sum()) == 1
    assert sum(1 for H in all_subgroups(G) if H.order == 2) == 1


def test_dihedral():
    V = make_dihedral(2)
    assert V.is_abelian and len(all_subgroups(V)) == 5
    D8 = make_dihedral(4)
    assert center(D8).order == 2
    assert len(all_subgroups(D8)) == 10
    assert are_isomorphic(FiniteGroup(oracles.D8_TABLE), D8)
    with pytest.raises(GroupError):
        make_dihedral(1)


def test_direct_product():
    c2, c3 = make_cyclic(2), make_cyclic(3)
    V = make_direct_product(c2, c2)
    assert V.order == 4 and sum(1 for H in all_subgroups(V) if H.order == 2) == 3
    G = make_dihedral(3)
    assert are_isomorphic(make_direct_product(make_cyclic(1), G), G)
    C33 = make_direct_product(c3, c3)
    assert C33.order == 9 and sum(1 for H in all_subgroups(C33) if H.order == 3) == 4
    with pytest.raises(OrderCapExceeded):
        make_direct_product(make_cyclic(30), make_cyclic(30))


def test_element_order_examples():
    assert element_order(make_cyclic(6), 0) == 1
    assert element_order(make_cyclic(6), 1) == 6
    Q8 = make_generalized_quaternion(3)
    z = next(g for g in Q8.elements if Q8.element_orders[g] == 2)
    assert all(element_order(Q8, g) == 4 for g in Q8.elements if g not in (Q8.identity, z))
    with pytest.raises(GroupError):
        element_order(Q8, 8)


@pytest.mark.parametrize("G", corpus(), ids=lambda G: G.label)
def test_center_is_normal_and_central(G):
    Z = center(G)
    t = G.table
    m = Z.members
    assert (t[np.ix_(m, np.arange(G.order))] == t[np.ix_(np.arange(G.order), m)].T).all()
    assert is_normal(G, Z)
    if G.is_abelian:
        assert Z.order == G.order


def test_center_examples():
    assert center(make_generalized_quaternion(3)).order == 2
    assert center(make_dihedral(3)).order == 1


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        make_cyclic(600)
    assert make_cyclic(600, cap=1000).order == 600


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 40), st.randoms(use_true_random=False))
def test_relabeled_cyclic_group_is_still_cyclic(n, rnd):
    perm = list(range(n))
    rnd.shuffle(perm)
    G = FiniteGroup(oracles.relabel(make_cyclic(n).table.tolist(), perm))
    assert is_cyclic(G)
    assert G.identity == perm[0]
