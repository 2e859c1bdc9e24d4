from __future__ import annotations

import json

import pytest

from yblab import algebras as al
from yblab import cosimplicial as cs
from yblab import groups as gp
from yblab import jsonio
from yblab import yb
from yblab.errors import CoveringNotInvertible, LevelMissing, LevelUnsupported, NotAbelian
from yblab.verdict import all_ok

GROUPS8 = gp.all_catalog(8)


def _cocycles(max_order, abelian_only=False):
    for order in range(1, max_order + 1):
        for G in gp.catalog(order):
            for K in gp.catalog(order):
                if abelian_only and not K.is_abelian:
                    continue
                for a in gp.enumerate_actions(G, K):
                    yield from gp.enumerate_bijective_cocycles(a)


@pytest.mark.parametrize("name", ["trivial", "Z/2", "Z/3", "Z/2xZ/2", "S3", "Q8"])
def test_cobar_identities(name):
    assert all_ok(cs.check_identities(cs.cobar_from_group(gp.catalog_group(name))))


def test_cobar_identities_for_non_group_monoid_still_hold():
    # the identities do not need inverses; only the covering condition does
    M = gp.validate_monoid([[0, 1], [1, 1]])
    T = cs.cobar_from_group(M)
    assert all_ok(cs.check_identities(T))
    v = cs.check_covering_condition(T)
    assert not v.ok and v.counterexample == "({1},{2})"


def test_hopf_and_comodule_identities():
    for name in ("Z/2", "Z/3"):
        H = al.group_algebra(gp.catalog_group(name))
        assert all_ok(cs.check_identities(cs.cosimp_from_hopf(H)))
    C = al.comodule_from_skew(gp.quaternion_cocycle())
    T = cs.cosimp_from_comodule(C)
    assert all_ok(cs.check_identities(T))
    assert cs.check_covering_condition(T).ok


def test_cocycle_complex_identities_small_orders():
    for phi in _cocycles(4):
        T = cs.cosimp_from_cocycle(phi)
        assert all_ok(cs.check_identities(T, top=4 if phi.G.size <= 2 else 3))


@pytest.mark.parametrize("name", ["d1_23", "s0_32", "d0_12"])
def test_perturbed_structure_map_is_caught(name):
    doc = jsonio.complex_to_json(cs.cobar_from_group(gp.catalog_group("Z/3")))
    table = doc["maps"][name]
    # exchange the images of the first two inputs with different images
    k = next(k for k in range(1, len(table)) if table[k] != table[0])
    table[0], table[k] = table[k], table[0]
    T = jsonio.complex_from_json(json.loads(json.dumps(doc)))
    assert not all_ok(cs.check_identities(T))


@pytest.mark.parametrize("G", GROUPS8, ids=lambda G: G.name)
def test_derived_operator_of_cobar_is_group_operator(G):
    assert cs.derive_yb(cs.cobar_from_group(G)) == yb.yb_from_group(G).R


def test_derivation_fails_for_and_monoid():
    M = gp.validate_monoid([[0, 1], [1, 1]])
    with pytest.raises(CoveringNotInvertible) as info:
        cs.derive_yb(cs.cobar_from_group(M))
    assert info.value.blocks == ((0,), (1,))


def test_derivation_from_cocycle_complexes():
    for phi in _cocycles(6):
        assert cs.derive_yb(cs.cosimp_from_cocycle(phi)) == yb.yb_from_cocycle(phi).R


def test_derivation_from_hopf_and_comodule():
    for name in ("Z/2", "Z/3", "S3"):
        G = gp.catalog_group(name)
        assert cs.derive_yb(cs.cosimp_from_hopf(al.group_algebra(G))) == yb.linearize(yb.yb_from_group(G).R)
    q = gp.quaternion_cocycle()
    assert cs.derive_yb(cs.cosimp_from_comodule(al.comodule_from_skew(q))) == yb.yb_from_skew_group(q).R


def test_covering_specs():
    T = cs.cobar_from_group(gp.catalog_group("Z/2"))
    assert [str(s) for s, _ in cs.covering_maps(T, 2)] == ["({1,2})", "({1},{2})", "({2},{1})"]
    assert len(cs.covering_maps(T, 3)) == 13
    with pytest.raises(LevelUnsupported):
        cs.covering_maps(T, 4)


def test_truncation_limits_levels():
    T = cs.cobar_from_group(gp.catalog_group("Z/2")).truncate(3)
    assert T.size(3) == 8
    with pytest.raises(LevelMissing):
        T.level(4)


def test_evaluated_merge_is_multiplication():
    G = gp.catalog_group("S3")
    mu = cs.eval_monotone(G, (0, 0), 1)
    assert mu.table == tuple(G.table[x][y] for x in range(6) for y in range(6))
    unit = cs.eval_monotone(G, (), 1)
    assert unit.table == (G.identity,)


def test_braid_letters_pass_through_monotone_maps():
    S3, Z4 = gp.catalog_group("S3"), gp.catalog_group("Z/4")
    assert all_ok(cs.check_bractcc(S3, yb.yb_from_group(S3).R, 4))
    assert all_ok(cs.check_bractcc(Z4, yb.yb_from_group(Z4).R, 4))


def test_braid_monotone_check_rejects_identity_operator():
    S3 = gp.catalog_group("S3")
    report = cs.check_bractcc(S3, yb.SetYB(6, tuple(range(36))), 3)
    assert not report["sigma"].ok
    assert not report["delta"].ok


def test_coxeter_transpositions():
    assert cs.coxeter_transposition(3, 1) == (0, 2, 1)
    assert cs.coxeter_transposition(3, 2) == (1, 0, 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symmetric_action_and_power(n):
    for phi in _cocycles(4, abelian_only=True):
        action, verdicts = cs.symmetric_action(phi, n)
        assert all_ok(verdicts)
        SG, cocycle, v2 = cs.symmetric_power(phi, n)
        assert all_ok(v2)
        # fixed points recomputed from the full action table
        size = phi.G.size * phi.K.size ** (n - 1)
        fixed = [x for x in range(size) if all(m.table[x] == x for m in action.values())]
        assert fixed == cs.fixed_points(phi, n)
        assert len(fixed) == phi.K.size
        assert cocycle.bijective and SG.size == phi.K.size


def test_symmetric_action_needs_abelian_k():
    S3 = gp.catalog_group("S3")
    phi = gp.enumerate_bijective_cocycles(gp.trivial_action(S3, S3))[0]
    with pytest.raises(NotAbelian):
        cs.symmetric_action(phi, 2)


def test_first_symmetric_power_is_the_group_via_the_cocycle():
    for phi in _cocycles(4, abelian_only=True):
        SG, _, _ = cs.symmetric_power(phi, 1)
        back = phi.inverse_table
        for u in range(SG.size):
            for v in range(SG.size):
                assert back[SG.table[u][v]] == phi.G.table[back[u]][back[v]]
