from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yblab import algebras as al
from yblab import groups as gp
from yblab import yb
from yblab.errors import NotBijective, QCChecksFailed, SizeMismatch, WordOutOfRange
from yblab.verdict import all_ok, failed, first_failure, passed, settle

GROUPS8 = gp.all_catalog(8)


def _direct_ybe(n, table):
    R = lambda x, y: divmod(table[x * n + y], n)  # noqa: E731
    for x in range(n):
        for y in range(n):
            for z in range(n):
                a, b = R(x, y)
                c, d = R(b, z)
                f, g = R(a, c)
                p, q = R(y, z)
                r, s = R(x, p)
                u, v = R(s, q)
                if (f, g, d) != (r, u, v):
                    return False
    return True


def _direct_qc(G, table):
    n, t, e = G.size, G.table, G.identity
    R = lambda x, y: divmod(table[x * n + y], n)  # noqa: E731
    if any(R(e, x) != (x, e) or R(x, e) != (e, x) for x in range(n)):
        return False
    for x in range(n):
        for y in range(n):
            a, b = R(x, y)
            if t[a][b] != t[x][y]:
                return False
            for z in range(n):
                a, w = R(y, z)
                bb, c = R(x, a)
                if R(t[x][y], z) != (bb, t[c][w]):
                    return False
                a, b = R(x, y)
                c, d = R(b, z)
                if R(x, t[y][z]) != (t[a][c], d):
                    return False
    return _direct_ybe(n, table)


@pytest.mark.parametrize("G", GROUPS8, ids=lambda G: G.name)
def test_group_operator_passes_suite(G):
    qc = yb.yb_from_group(G)
    assert all_ok(qc.report)
    assert yb.check_nearly_commutative(qc.R).ok == G.is_abelian
    for x in range(G.size):
        for y in range(G.size):
            assert qc.R(x, y) == (y, G.conj(x, y))


def test_s3_operator_is_not_involutive():
    S3 = gp.catalog_group("S3")
    R = yb.yb_from_group(S3).R
    v = yb.check_nearly_commutative(R)
    assert not v.ok and v.counterexample is not None


def test_swap_on_z2():
    R = yb.yb_from_group(gp.catalog_group("Z/2")).R
    assert R.table == (0, 2, 1, 3)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([2, 3]).flatmap(lambda n: st.tuples(st.just(n), st.permutations(range(n * n)))))
def test_ybe_checker_matches_direct_check(case):
    n, perm = case
    R = yb.SetYB(n, tuple(perm))
    assert yb.check_ybe(R).ok == _direct_ybe(n, perm)


@settings(max_examples=200, deadline=None)
@given(st.permutations(range(16)))
def test_qc_suite_matches_direct_check(perm):
    V = gp.catalog_group("Z/2xZ/2")
    R = yb.SetYB(4, tuple(perm))
    assert all_ok(yb.qc_suite(V, R)) == _direct_qc(V, perm)


def test_identity_operator_breaks_unit_compatibility():
    S3 = gp.catalog_group("S3")
    report = yb.qc_suite(S3, yb.SetYB(6, tuple(range(36))))
    assert report["ybe"].ok and report["com"].ok
    assert not report["ide"].ok


def test_swap_on_s3_breaks_commutativity():
    S3 = gp.catalog_group("S3")
    swap = yb.SetYB.from_pairs(6, lambda x, y: (y, x))
    report = yb.qc_suite(S3, swap)
    assert not report["com"].ok
    with pytest.raises(QCChecksFailed):
        yb._qc(S3, swap)


COCYCLES = [
    phi
    for order in range(1, 7)
    for G in gp.catalog(order)
    for K in gp.catalog(order)
    for a in gp.enumerate_actions(G, K)
    for phi in gp.enumerate_bijective_cocycles(a)
]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(COCYCLES))
def test_cocycle_operator_round_trip(phi):
    R = yb.yb_from_cocycle(phi).R
    assert _direct_qc(phi.G, R.table)
    K, _, psi = yb.cocycle_from_yb(phi.G, R)
    assert yb.yb_from_cocycle(psi).R == R
    assert gp.is_isomorphic(K, phi.K)
    assert yb.check_nearly_commutative(R).ok == phi.K.is_abelian


def test_non_bijective_cocycle_rejected():
    Z2 = gp.catalog_group("Z/2")
    phi = gp.check_one_cocycle([0, 0], gp.trivial_action(Z2, Z2))
    with pytest.raises(NotBijective):
        yb.yb_from_cocycle(phi)


def test_matched_pair_for_conjugation():
    S3 = gp.catalog_group("S3")
    alpha = [[g for g in range(6)] for _ in range(6)]
    beta = [[S3.conj(f, g) for g in range(6)] for f in range(6)]
    R, report = yb.yb_from_matched_pair(S3, alpha, beta)
    assert R == yb.yb_from_group(S3).R
    assert all_ok(report)
    bad_beta = [[f for _ in range(6)] for f in range(6)]
    R2, report2 = yb.yb_from_matched_pair(S3, alpha, bad_beta)
    assert R2 is None or not all_ok(report2)


@pytest.mark.parametrize("name", ["Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3"])
def test_hopf_operator_of_group_algebra_is_linearised_group_operator(name):
    G = gp.catalog_group(name)
    assert yb.yb_from_hopf(al.group_algebra(G)).R == yb.linearize(yb.yb_from_group(G).R)


@pytest.mark.parametrize("name", ["Z/2", "S3"])
def test_function_algebra_operator_is_involutive(name):
    qc = yb.yb_from_hopf(al.function_algebra(gp.catalog_group(name)))
    assert yb.check_nearly_commutative(qc.R).ok


def test_quaternion_operator_is_involutive():
    qc = yb.yb_from_skew_group(gp.quaternion_cocycle())
    assert all_ok(yb.qc_suite(qc.monoid, qc.R, nearly=True))


def test_braid_word_permutation_and_action():
    w = yb.BraidWord(3, (1, 2, 1))
    assert w.permutation() == yb.BraidWord(3, (2, 1, 2)).permutation() == (2, 1, 0)
    assert w.inverse().letters == (-1, -2, -1)
    S3 = gp.catalog_group("S3")
    R = yb.yb_from_group(S3).R
    c = yb.carrier_of(R)
    assert c.equal(yb.braid_action(R, w), yb.braid_action(R, yb.BraidWord(3, (2, 1, 2))))
    ident = yb.braid_action(R, yb.BraidWord(3, (1, -1, 2, -2)))
    assert ident.table == tuple(range(216))
    with pytest.raises(WordOutOfRange):
        yb.BraidWord(3, (3,))


def test_set_operator_json_and_shape_errors():
    R = yb.yb_from_group(gp.catalog_group("S3")).R
    assert yb.SetYB.from_json(R.to_json()) == R
    with pytest.raises(SizeMismatch):
        yb.SetYB(2, (0, 1, 2))
    with pytest.raises(NotBijective):
        yb.SetYB(2, (0, 0, 1, 2))


def test_failing_verdicts_are_kept():
    # a failing verdict is falsy, so combining with `or` would silently drop it
    bad = failed("x", 1)
    assert not bad
    assert first_failure(bad, failed("y", 2)) is bad
    assert first_failure(None, bad) is bad
    assert settle(bad, "x") is bad
    assert settle(None, "x") == passed("x")
