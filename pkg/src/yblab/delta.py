"""Combinatorics of finite ordinals ``[n] = {0, ..., n-1}`` and monotone maps.

A map ``[n] -> [m]`` is a tuple of length ``n``. Elementary maps:

* ``coface(n, j)``: ``[n] -> [n+1]`` skipping ``j`` (``0 <= j <= n``);
* ``codegeneracy(n, i)``: ``[n] -> [n-1]`` hitting ``i`` twice (``0 <= i <= n-2``).

Braid letters here are 0-based: ``x_i`` exchanges positions ``i`` and ``i+1``.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .errors import NotMonotone, WordOutOfRange

Step = tuple[str, int, int]  # ("d" | "s", source level, index)


def is_monotone(f: Sequence[int]) -> bool:
    return all(f[k] <= f[k + 1] for k in range(len(f) - 1))


def check_monotone(f: Sequence[int], m: int) -> tuple[int, ...]:
    f = tuple(int(v) for v in f)
    if not is_monotone(f) or any(not 0 <= v < m for v in f):
        raise NotMonotone(f"{list(f)} is not a monotone map into [{m}]")
    return f


def compose(g: Sequence[int], f: Sequence[int]) -> tuple[int, ...]:
    """``g ∘ f``."""
    return tuple(g[x] for x in f)


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def coface(n: int, j: int) -> tuple[int, ...]:
    return tuple(i if i < j else i + 1 for i in range(n))


def codegeneracy(n: int, i: int) -> tuple[int, ...]:
    return tuple(k if k <= i else k - 1 for k in range(n))


def fibres(f: Sequence[int], m: int) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(m)]
    for x, y in enumerate(f):
        out[y].append(x)
    return out


def monotone_maps(n: int, m: int) -> Iterator[tuple[int, ...]]:
    for combo in itertools.combinations_with_replacement(range(m), n):
        yield combo


def inclusion_steps(image: Sequence[int], n: int) -> list[Step]:
    """Cofaces realising the order-preserving inclusion of ``[len(image)]`` onto ``image`` in ``[n]``.

    Missing positions are inserted in ascending order.
    """
    present = set(image)
    steps: list[Step] = []
    level = len(image)
    for c in range(n):
        if c not in present:
            steps.append(("d", level, c))
            level += 1
    return steps


def factorization(f: Sequence[int], m: int) -> list[Step]:
    """Codegeneracies then cofaces whose composite is ``f``, listed in application order."""
    f = check_monotone(f, m)
    steps: list[Step] = []
    cur = list(f)
    level = len(cur)
    k = 0
    while k < len(cur) - 1:
        if cur[k] == cur[k + 1]:
            steps.append(("s", level, k))
            del cur[k + 1]
            level -= 1
        else:
            k += 1
    steps.extend(inclusion_steps(cur, m))
    return steps


def steps_map(steps: Sequence[Step], n: int) -> tuple[int, ...]:
    """The monotone map denoted by a list of elementary steps starting at ``[n]``."""
    f = identity(n)
    for kind, level, idx in steps:
        e = coface(level, idx) if kind == "d" else codegeneracy(level, idx)
        f = compose(e, f)
    return f


def ordered_set_partitions(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All ordered partitions of ``[n]`` into nonempty blocks, by block count then lexicographically."""
    out = []
    for m in range(1, n + 1):
        for assign in itertools.product(range(m), repeat=n):
            if len(set(assign)) == m:
                out.append(tuple(tuple(i for i in range(n) if assign[i] == b) for b in range(m)))
    return out


# ---------------------------------------------------------------------------
# moving braid letters past elementary monotone maps


def push_letter(letter: int, step: Step) -> tuple[Step, list[int]]:
    """Rewrite ``x ∘ e`` as ``e' ∘ w``.

    ``letter`` is a signed 1-based braid letter acting on the target of ``e``;
    the returned word ``w`` is in application order and acts on the source.
    """
    sign = 1 if letter > 0 else -1
    i = abs(letter) - 1
    kind, level, j = step
    tgt = level - 1 if kind == "s" else level + 1
    if not 0 <= i <= tgt - 2:
        raise WordOutOfRange(f"letter {letter} does not act on [{tgt}]")
    if kind == "s":
        if i + 1 < j:
            return ("s", level, j), [sign * (i + 1)]
        if i + 1 == j:
            return ("s", level, j - 1), [sign * j, sign * (j + 1)]
        if i == j:
            return ("s", level, j + 1), [sign * (j + 2), sign * (j + 1)]
        return ("s", level, j), [sign * (i + 2)]
    if i + 1 < j:
        return ("d", level, j), [sign * (i + 1)]
    if i + 1 == j:
        return ("d", level, j - 1), []
    if i == j:
        return ("d", level, j + 1), []
    return ("d", level, j), [sign * i]


def push_word(word: Sequence[int], steps: Sequence[Step]) -> tuple[list[Step], list[int]]:
    """Rewrite ``w ∘ (e_r ... e_1)`` as ``(e'_r ... e'_1) ∘ w'``; steps and words in application order."""
    new_steps = list(steps)
    w = list(word)
    for k in range(len(new_steps) - 1, -1, -1):
        out_word: list[int] = []
        step = new_steps[k]
        for letter in w:
            step, produced = push_letter(letter, step)
            out_word.extend(produced)
        new_steps[k] = step
        w = out_word
    return new_steps, w
