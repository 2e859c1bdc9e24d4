from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yblab import delta as dl
from yblab.errors import NotMonotone, WordOutOfRange
from yblab.yb import BraidWord


def monotone(n_max=5, m_max=5):
    return st.tuples(st.integers(0, n_max), st.integers(1, m_max)).flatmap(
        lambda nm: st.tuples(
            st.lists(st.integers(0, nm[1] - 1), min_size=nm[0], max_size=nm[0]).map(lambda xs: tuple(sorted(xs))),
            st.just(nm[1]),
        )
    )


def test_elementary_maps():
    assert dl.coface(2, 0) == (1, 2)
    assert dl.coface(2, 2) == (0, 1)
    assert dl.codegeneracy(3, 0) == (0, 0, 1)
    assert dl.codegeneracy(3, 1) == (0, 1, 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_cosimplicial_identities_on_ordinals(n):
    d, s, c = dl.coface, dl.codegeneracy, dl.compose
    for i in range(n + 2):
        for j in range(i):
            assert c(d(n + 1, i), d(n, j)) == c(d(n + 1, j), d(n, i - 1))
    for i in range(n):
        for j in range(i + 1):
            assert c(s(n + 1, j), s(n + 2, i + 1)) == c(s(n + 1, i), s(n + 2, j))
    for i in range(n + 1):
        for j in range(n + 2):
            lhs = c(s(n + 2, i), d(n + 1, j))
            if j < i:
                assert lhs == c(d(n, j), s(n + 1, i - 1))
            elif j in (i, i + 1):
                assert lhs == dl.identity(n + 1)
            else:
                assert lhs == c(d(n, j - 1), s(n + 1, i))


def test_ordered_set_partitions_are_fubini_numbers():
    assert [len(dl.ordered_set_partitions(n)) for n in range(1, 5)] == [1, 3, 13, 75]


@settings(max_examples=300, deadline=None)
@given(monotone())
def test_factorization_recomposes(fm):
    f, m = fm
    steps = dl.factorization(f, m)
    assert dl.steps_map(steps, len(f)) == f
    kinds = [k for k, _, _ in steps]
    assert kinds == sorted(kinds, reverse=True)  # all codegeneracies before cofaces


def test_non_monotone_rejected():
    with pytest.raises(NotMonotone):
        dl.factorization((1, 0), 2)


def _letter_perm(letter, size):
    return BraidWord(size, (letter,)).permutation()


def _word_perm(word, size):
    return BraidWord(max(size, 1), tuple(word)).permutation() if size else ()


@settings(max_examples=400, deadline=None)
@given(st.data())
def test_push_letter_commutes_at_permutation_level(data):
    kind = data.draw(st.sampled_from(["d", "s"]))
    level = data.draw(st.integers(1 if kind == "d" else 2, 5))
    tgt = level + 1 if kind == "d" else level - 1
    if tgt < 2:
        return
    idx = data.draw(st.integers(0, level if kind == "d" else level - 2))
    i = data.draw(st.integers(1, tgt - 1))
    letter = data.draw(st.sampled_from([i, -i]))
    e = dl.coface(level, idx) if kind == "d" else dl.codegeneracy(level, idx)
    new, word = dl.push_letter(letter, (kind, level, idx))
    e2 = dl.coface(level, new[2]) if kind == "d" else dl.codegeneracy(level, new[2])
    p = _letter_perm(letter, tgt)
    w = _word_perm(word, level)
    # strand k of the source: first e, then the letter  ==  first the new word, then e'
    for k in range(level):
        assert p[e[k]] == e2[w[k] if w else k]


def test_pushing_through_matching_coface_deletes_the_letter():
    assert dl.push_letter(1, ("d", 1, 0)) == (("d", 1, 1), [])
    assert dl.push_letter(1, ("d", 1, 1)) == (("d", 1, 0), [])
    assert dl.push_letter(-2, ("d", 2, 0)) == (("d", 2, 0), [-1])


def test_pushing_through_codegeneracy_duplicates():
    # the merged position is crossed by two strands
    assert dl.push_letter(1, ("s", 3, 0)) == (("s", 3, 1), [2, 1])
    assert dl.push_letter(1, ("s", 3, 1)) == (("s", 3, 0), [1, 2])
    with pytest.raises(WordOutOfRange):
        dl.push_letter(3, ("s", 3, 0))


@settings(max_examples=200, deadline=None)
@given(monotone(4, 4), st.data())
def test_push_word_permutation_level(fm, data):
    f, m = fm
    if m < 2:
        return
    word = data.draw(st.lists(st.integers(1, m - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=4))
    steps = dl.factorization(f, m)
    new_steps, w = dl.push_word(word, steps)
    g = dl.steps_map(new_steps, len(f))
    pw = _word_perm(word, m)
    pv = _word_perm(w, len(f))
    for k in range(len(f)):
        assert pw[f[k]] == g[pv[k] if pv else k]
