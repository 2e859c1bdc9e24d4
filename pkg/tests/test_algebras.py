from __future__ import annotations

from fractions import Fraction

import pytest

from yblab import algebras as al
from yblab import groups as gp
from yblab.errors import AntipodeNotInvertible
from yblab.linalg import Mat
from yblab.verdict import all_ok
from yblab.yb import galois_tau

NAMES = ["trivial", "Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3"]


@pytest.mark.parametrize("name", NAMES)
def test_group_and_function_algebras_are_hopf(name):
    G = gp.catalog_group(name)
    assert all_ok(al.check_hopf(al.group_algebra(G)))
    assert all_ok(al.check_hopf(al.function_algebra(G)))


def test_commutativity_flags():
    S3 = gp.catalog_group("S3")
    assert not al.group_algebra(S3).is_commutative
    assert al.function_algebra(S3).is_commutative
    assert al.group_algebra(gp.catalog_group("Z/4")).is_commutative


def test_quaternion_relations():
    A = al.skew_group_algebra(gp.quaternion_cocycle())
    one, j, i, k = ({n: Fraction(1)} for n in range(4))
    minus_one = {0: Fraction(-1)}
    assert A.mul(i, i) == A.mul(j, j) == A.mul(k, k) == minus_one
    assert A.mul(i, j) == k
    assert A.mul(j, i) == {3: Fraction(-1)}
    assert A.unit_vec == one
    assert all_ok(A.check())


def test_k_chi_span_of_q8_is_quaternions():
    Q8 = gp.catalog_group("Q8")
    chi = next(c for c in gp.sign_characters(Q8, Q8.center) if -1 in c.values())
    A, alpha = al.k_chi_span(gp.make_central_extension(Q8, Q8.center, chi))
    assert A.dim == 4
    assert all_ok(A.check())
    # every basis element squares to a scalar, and distinct non-unit ones anticommute
    for s in range(1, 4):
        sq = A.mul({s: Fraction(1)}, {s: Fraction(1)})
        assert list(sq) == [0] and sq[0] == -1
    Q, _, _ = al.quotient_group(gp.make_central_extension(Q8, Q8.center, chi))
    assert gp.is_isomorphic(Q, gp.catalog_group("Z/2xZ/2"))
    assert alpha.group.size == 4


def test_skew_comodule_axioms():
    for alpha in (gp.quaternion_cocycle(), gp.trivial_two_cocycle(gp.catalog_group("S3"))):
        assert all_ok(al.check_comodule(al.comodule_from_skew(alpha)))


def test_galois_map_on_quaternions():
    tau, report = galois_tau(al.comodule_from_skew(gp.quaternion_cocycle()))
    assert all_ok(report)
    assert (tau @ tau).is_identity()


def test_galois_map_squares_nontrivially_for_non_commutative_h():
    _, report = galois_tau(al.comodule_from_skew(gp.trivial_two_cocycle(gp.catalog_group("S3"))))
    assert report["tau_d0_eq_d1"].ok and report["tau_d1_eq_d0"].ok and report["sigma_tau_eq_sigma"].ok
    assert not report["tau_squared_identity"].ok


def test_broken_coproduct_is_reported():
    H = al.group_algebra(gp.catalog_group("Z/2"))
    bad = al.HopfSC(H.algebra, Mat.identity(2).kron(Mat.from_dense([[1], [0]])), H.counit, H.antipode)
    report = al.check_hopf(bad)
    assert not report["coassociative"].ok or not report["counit"].ok


def test_singular_antipode_raises():
    H = al.group_algebra(gp.catalog_group("Z/2"))
    bad = al.HopfSC(H.algebra, H.delta, H.counit, Mat.zero(2, 2))
    with pytest.raises(AntipodeNotInvertible):
        bad.antipode_inv


@pytest.mark.parametrize("name", ["Z/3", "S3"])
def test_hopf_json_round_trip(name):
    H = al.group_algebra(gp.catalog_group(name))
    H2 = al.hopf_from_json(al.hopf_to_json(H))
    assert H2.delta == H.delta and H2.antipode == H.antipode and H2.algebra.mu == H.algebra.mu
    A = al.algebra_from_json(al.algebra_to_json(al.skew_group_algebra(gp.quaternion_cocycle())))
    assert A.mul({1: Fraction(1)}, {1: Fraction(1)}) == {0: Fraction(-1)}
