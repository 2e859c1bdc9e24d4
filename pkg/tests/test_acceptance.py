from __future__ import annotations

from yblab import acceptance


def _check(number):
    r = acceptance.run(number)
    print(r.line())
    assert r.ok, r.detail
    assert r.elapsed <= r.budget, f"{r.elapsed:.2f}s over the {r.budget:.0f}s budget"


def test_group_family_passes_quasi_commutative_suite():
    _check(1)


def test_cobar_derivation_round_trip_and_covering_failures():
    _check(2)


def test_cocycle_correspondence():
    _check(3)


def test_classification_equals_brute_force():
    _check(4)


def test_linear_family():
    _check(5)


def test_galois_map():
    _check(6)


def test_braid_and_monotone_relations():
    _check(7)


def test_trees_laws_factorization_and_evaluation():
    _check(8)


def test_vines_composition_and_equivalence():
    _check(9)


def test_symmetric_action_and_symmetric_powers():
    _check(10)
