from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yblab.errors import Singular
from yblab.linalg import Mat, kron_all, mat_from_json, mat_to_json, parse_rat, rat_str, swap_matrix


def _det(rows):
    """Bareiss fraction-free determinant, used as an independent invertibility test."""
    a = [[Fraction(v) for v in r] for r in rows]
    n = len(a)
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else Fraction(1)


def matrices(n_max=4, lo=-3, hi=3):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_parse_and_print_rationals():
    assert parse_rat("3/6") == Fraction(1, 2)
    assert parse_rat(2) == 2
    assert parse_rat("-4") == -4
    assert rat_str(Fraction(-2, 4)) == "-1/2"
    assert rat_str(Fraction(5)) == "5"


def test_identity_and_inverse_small():
    m = Mat.from_dense([[2, 1], [1, 1]])
    assert m.inverse() == Mat.from_dense([[1, -1], [-1, 2]])
    assert (m @ m.inverse()).is_identity()
    with pytest.raises(Singular):
        Mat.from_dense([[1, 2], [2, 4]]).inverse()
    assert Mat.from_dense([[1, 2], [2, 4]]).rank() == 1


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_inverse_agrees_with_determinant(rows):
    m = Mat.from_dense(rows)
    d = _det(rows)
    assert m.is_invertible() == (d != 0)
    if d != 0:
        inv = m.inverse()
        assert (m @ inv).is_identity() and (inv @ m).is_identity()
        assert m.rank() == len(rows)
    else:
        assert m.rank() < len(rows)
        with pytest.raises(Singular):
            m.inverse()


@settings(max_examples=60, deadline=None)
@given(matrices(3), matrices(3), matrices(2), matrices(2))
def test_kron_mixed_product(a, b, c, d):
    A, B, C, D = (Mat.from_dense(x) for x in (a, b, c, d))
    if A.shape[1] != B.shape[0] or C.shape[1] != D.shape[0]:
        return
    assert (A @ B).kron(C @ D) == A.kron(C) @ B.kron(D)


@settings(max_examples=60, deadline=None)
@given(matrices(3))
def test_transpose_and_apply(rows):
    m = Mat.from_dense(rows)
    assert m.transpose().transpose() == m
    n = len(rows)
    for j in range(n):
        assert m.apply({j: Fraction(1)}) == {i: Fraction(rows[i][j]) for i in range(n) if rows[i][j] != 0}


def test_swap_matrix_is_involution_and_permutes_tensors():
    S = swap_matrix(2, 3)
    assert S.shape == (6, 6)
    assert (swap_matrix(3, 2) @ S).is_identity()
    a = Mat.from_dense([[1, 2], [3, 4]])
    b = Mat.from_dense([[1, 0, 1], [0, 2, 0], [5, 0, 1]])
    assert S @ a.kron(b) == b.kron(a) @ S


def test_kron_all_and_json():
    m = kron_all([Mat.identity(2), Mat.from_dense([[0, 1], [1, 0]])])
    assert m.shape == (4, 4)
    assert mat_from_json(mat_to_json(m)) == m
    assert mat_to_json(Mat.from_dense([[Fraction(1, 3)]])) == [["1/3"]]
