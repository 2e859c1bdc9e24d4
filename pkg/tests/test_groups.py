from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yblab import groups as gp
from yblab.errors import CocycleViolation, InvalidAction, NotAGroup, NotAssociative, NotUnit, OrderOutOfRange

# standard automorphism group orders: Euler phi for cyclic groups, GL(3,2), GL(2,3), S4, ...
AUT_ORDERS = {
    "trivial": 1, "Z/2": 1, "Z/3": 2, "Z/4": 2, "Z/2xZ/2": 6, "Z/5": 4, "Z/6": 2, "S3": 6,
    "Z/7": 6, "Z/8": 4, "Z/4xZ/2": 8, "Z/2xZ/2xZ/2": 168, "D4": 8, "Q8": 24, "Z/9": 6,
    "Z/3xZ/3": 48, "Z/10": 4, "D5": 20, "Z/11": 10, "Z/12": 4, "Z/6xZ/2": 12, "A4": 24,
    "D6": 12, "Dic3": 12,
}

SMALL = gp.all_catalog(6)


def test_catalog_up_to_order_eight_has_fourteen_groups():
    groups = gp.all_catalog(8)
    assert len(groups) == 14
    assert [G.name for G in groups if not G.is_abelian] == ["S3", "D4", "Q8"]


@pytest.mark.parametrize("name,order", sorted(AUT_ORDERS.items()))
def test_automorphism_counts(name, order):
    assert len(gp.automorphisms(gp.catalog_group(name))) == order


def test_catalog_groups_are_pairwise_non_isomorphic():
    for order in range(1, 13):
        groups = gp.catalog(order)
        for G, H in itertools.combinations(groups, 2):
            assert not gp.is_isomorphic(G, H), (G.name, H.name)


def test_aliases_resolve():
    assert gp.catalog_group("V").name == "Z/2xZ/2"
    assert gp.catalog_group("D3").name == "S3"
    assert gp.catalog_group("Dic2").name == "Q8"
    with pytest.raises(KeyError):
        gp.catalog_group("Z/13")


def test_validation_errors():
    with pytest.raises(NotUnit):
        gp.validate_monoid([[1, 0], [0, 1]], 0)
    with pytest.raises(NotAssociative):
        # 1*1 = 2, 2*1 = 1, 1*2 = 0 breaks associativity
        gp.validate_monoid([[0, 1, 2], [1, 2, 0], [2, 1, 2]], 0)
    with pytest.raises(NotAGroup):
        gp.validate_group(gp.validate_monoid([[0, 1], [1, 1]], 0))


def _brute_monoid_count(n: int, e: int) -> int:
    count = 0
    others = [x for x in range(n) if x != e]
    cells = [(x, y) for x in others for y in others]
    for vals in itertools.product(range(n), repeat=len(cells)):
        t = {}
        for x in range(n):
            t[e, x] = x
            t[x, e] = x
        t.update(zip(cells, vals))
        if all(t[t[x, y], z] == t[x, t[y, z]] for x in range(n) for y in range(n) for z in range(n)):
            count += 1
    return count


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumerate_monoids_matches_brute_force(n):
    assert len(gp.enumerate_monoids(n)) == sum(_brute_monoid_count(n, e) for e in range(n))
    assert len(gp.enumerate_monoids(n, identity=0)) == _brute_monoid_count(n, 0)


def test_enumerate_monoids_order_two_has_two_non_group_tables():
    non_groups = [M for M in gp.enumerate_monoids(2) if not gp.is_group(M)]
    assert len(non_groups) == 2
    assert {M.identity for M in non_groups} == {0, 1}


def test_actions_of_s3_on_itself():
    # homomorphisms S3 -> Aut(S3) = S3: trivial, three with image of order 2, six automorphisms
    S3 = gp.catalog_group("S3")
    assert len(gp.enumerate_actions(S3, S3)) == 10


def test_make_action_rejects_non_action():
    Z2 = gp.catalog_group("Z/2")
    Z3 = gp.catalog_group("Z/3")
    with pytest.raises(InvalidAction):
        gp.make_action(Z2, Z3, [[0, 0], [1, 1], [2, 1]])


def test_bijective_cocycles_of_z3_trivial_action():
    Z3 = gp.catalog_group("Z/3")
    phis = gp.enumerate_bijective_cocycles(gp.trivial_action(Z3, Z3))
    assert sorted(p.table for p in phis) == [(0, 1, 2), (0, 2, 1)]


def _all_cocycles(max_order):
    out = []
    for order in range(1, max_order + 1):
        for G in gp.catalog(order):
            for K in gp.catalog(order):
                for action in gp.enumerate_actions(G, K):
                    out.extend(gp.enumerate_bijective_cocycles(action))
    return out


ALL_COCYCLES = _all_cocycles(6)


def test_number_of_bijective_cocycles_up_to_order_six():
    assert len(ALL_COCYCLES) == 60


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL_COCYCLES))
def test_cocycle_identity_holds(phi):
    G, K, a = phi.G, phi.K, phi.action.act
    for f in range(G.size):
        for g in range(G.size):
            assert phi(G.table[f][g]) == K.table[a[phi(f)][g]][phi(g)]
    assert sorted(phi.table) == list(range(K.size))


def test_cocycle_enumeration_is_exhaustive_on_small_orders():
    # every bijection G -> K that satisfies the identity is found
    for order in range(1, 5):
        for G in gp.catalog(order):
            for K in gp.catalog(order):
                for action in gp.enumerate_actions(G, K):
                    found = {p.table for p in gp.enumerate_bijective_cocycles(action)}
                    brute = set()
                    for perm in itertools.permutations(range(order)):
                        try:
                            if gp.check_one_cocycle(perm, action).bijective:
                                brute.add(perm)
                        except CocycleViolation:
                            pass
                    assert found == brute


def test_quaternion_cocycle_signs():
    q = gp.quaternion_cocycle()
    i, j, k = 2, 1, 3
    assert q(i, i) == q(j, j) == q(k, k) == -1
    assert q(i, j) == 1 and q(j, i) == -1
    gp.check_two_cocycle(q.alpha, q.group)


def test_two_cocycle_violation_detected():
    Z3 = gp.catalog_group("Z/3")
    # a(1,1) a(2,2) = 2 but a(1,2) a(1,0) = 1
    with pytest.raises(CocycleViolation):
        gp.check_two_cocycle([[1, 1, 1], [1, 2, 1], [1, 1, 1]], Z3)


def test_central_extension_of_q8():
    Q8 = gp.catalog_group("Q8")
    chis = gp.sign_characters(Q8, Q8.center)
    assert len(chis) == 2
    chi = next(c for c in chis if any(v == -1 for v in c.values()))
    ext = gp.make_central_extension(Q8, Q8.center, chi)
    assert gp.near_commutative_extension_test(ext)
    S3 = gp.catalog_group("S3")
    assert not gp.near_commutative_extension_test(gp.make_central_extension(S3, S3.center))
    assert chi[Q8.identity] == Fraction(1)


def test_group_json_round_trip():
    for G in SMALL:
        H = gp.group_from_json(gp.group_to_json(G))
        assert H.table == G.table and H.inv == G.inv


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_power_and_inverse_laws(G, data):
    x = data.draw(st.integers(0, G.size - 1))
    assert G.table[x][G.inv[x]] == G.identity
    assert G.power(x, G.orders[x]) == G.identity
    assert G.power(x, -1) == G.inv[x]
    assert G.closure([x]) == sorted({G.power(x, k) for k in range(G.orders[x])})


def test_out_of_range_semidirect_and_products():
    Z2, Z3 = gp.catalog_group("Z/2"), gp.catalog_group("Z/3")
    P = gp.direct_product(Z2, Z3)
    assert gp.is_isomorphic(P, gp.catalog_group("Z/6"))
    flip = gp.make_action(Z2, Z3, [[0, 0], [1, 2], [2, 1]])
    assert gp.is_isomorphic(gp.semidirect_product(Z2, flip), gp.catalog_group("S3"))
    with pytest.raises(OrderOutOfRange):
        gp.catalog(13)
