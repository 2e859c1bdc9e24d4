"""Pruned trees of height two, their morphisms, generator factorizations and vines.

A tree ``Tree2(tips, inner, t)`` is a map ``t: [tips] -> [inner]`` (any order;
inner nodes without tips are allowed). A morphism ``(f2, f1)`` has ``f1``
monotone, ``dst.t ∘ f2 = f1 ∘ src.t``, and ``f2`` order preserving on every
fibre of ``src.t``.

Vines morphisms ``(braid, delta)`` apply the braid first and then the
monotone map ``delta``.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import delta as dl
from .errors import InvalidTree, NotComposable, NotMonotone, NotTipBijective, SizeMismatch
from .yb import BraidWord, braid_action


@dataclass(frozen=True)
class Tree2:
    tips: int
    inner: int
    t: tuple[int, ...]

    def __post_init__(self):
        if len(self.t) != self.tips:
            raise InvalidTree(f"t has {len(self.t)} entries, expected {self.tips}")
        if any(not 0 <= v < self.inner for v in self.t):
            raise InvalidTree("t leaves the set of inner nodes")

    @classmethod
    def make(cls, t: Sequence[int], inner: int | None = None) -> "Tree2":
        t = tuple(int(v) for v in t)
        return cls(len(t), inner if inner is not None else (max(t) + 1 if t else 0), t)

    def fibre(self, i: int) -> list[int]:
        return [x for x, v in enumerate(self.t) if v == i]

    def fibre_sizes(self) -> list[int]:
        sizes = [0] * self.inner
        for v in self.t:
            sizes[v] += 1
        return sizes

    @property
    def is_surjective(self) -> bool:
        return len(set(self.t)) == self.inner

    @property
    def is_canonical(self) -> bool:
        """Tips of each fibre are contiguous and fibres appear in order."""
        return dl.is_monotone(self.t)

    def to_json(self) -> dict:
        return {"tips": self.tips, "inner": self.inner, "t": list(self.t)}

    @classmethod
    def from_json(cls, data: dict) -> "Tree2":
        t = tuple(int(v) for v in data["t"])
        tips = int(data.get("tips", len(t)))
        return cls(tips, int(data["inner"]), t)


EMPTY = Tree2(0, 0, ())


@dataclass(frozen=True)
class TreeMorphism:
    src: Tree2
    dst: Tree2
    f2: tuple[int, ...]
    f1: tuple[int, ...]

    def __post_init__(self):
        s, d = self.src, self.dst
        if len(self.f2) != s.tips or any(not 0 <= v < d.tips for v in self.f2):
            raise InvalidTree("f2 is not a map of tips")
        if len(self.f1) != s.inner or any(not 0 <= v < d.inner for v in self.f1):
            raise InvalidTree("f1 is not a map of inner nodes")
        if not dl.is_monotone(self.f1):
            raise NotMonotone("f1 must be monotone")
        for x in range(s.tips):
            if d.t[self.f2[x]] != self.f1[s.t[x]]:
                raise InvalidTree(f"square does not commute at tip {x}")
        for i in range(s.inner):
            images = [self.f2[x] for x in s.fibre(i)]
            if images != sorted(images):
                raise InvalidTree(f"f2 is not order preserving on fibre {i}")

    @property
    def is_tip_bijective(self) -> bool:
        return len(set(self.f2)) == self.src.tips == self.dst.tips

    def to_json(self) -> dict:
        return {"src": self.src.to_json(), "dst": self.dst.to_json(), "f2": list(self.f2), "f1": list(self.f1)}

    @classmethod
    def from_json(cls, data: dict, src: Tree2 | None = None, dst: Tree2 | None = None) -> "TreeMorphism":
        src = src or Tree2.from_json(data["src"])
        dst = dst or Tree2.from_json(data["dst"])
        return cls(src, dst, tuple(int(v) for v in data["f2"]), tuple(int(v) for v in data["f1"]))


def identity(T: Tree2) -> TreeMorphism:
    return TreeMorphism(T, T, tuple(range(T.tips)), tuple(range(T.inner)))


def compose(g: TreeMorphism, f: TreeMorphism) -> TreeMorphism:
    """``g ∘ f``."""
    if f.dst != g.src:
        raise NotComposable(f"target {f.dst} differs from source {g.src}")
    return TreeMorphism(f.src, g.dst, dl.compose(g.f2, f.f2), dl.compose(g.f1, f.f1))


def tensor_trees(A: Tree2, B: Tree2) -> Tree2:
    return Tree2(A.tips + B.tips, A.inner + B.inner, A.t + tuple(v + A.inner for v in B.t))


def tensor(f: TreeMorphism, g: TreeMorphism) -> TreeMorphism:
    """Ordered sum: ``f`` on the left, ``g`` shifted to the right."""
    return TreeMorphism(
        tensor_trees(f.src, g.src),
        tensor_trees(f.dst, g.dst),
        f.f2 + tuple(v + f.dst.tips for v in g.f2),
        f.f1 + tuple(v + f.dst.inner for v in g.f1),
    )


def tensor_all(fs: Sequence[TreeMorphism]) -> TreeMorphism:
    out = identity(EMPTY)
    for f in fs:
        out = tensor(out, f)
    return out


# ---------------------------------------------------------------------------
# the inclusion of finite ordinals


def s_functor(n: int) -> Tree2:
    """``[n]`` as the tree with one inner node carrying all ``n`` tips."""
    return Tree2(n, 1, (0,) * n)


def s_morphism(f: Sequence[int], m: int) -> TreeMorphism:
    f = dl.check_monotone(f, m)
    return TreeMorphism(s_functor(len(f)), s_functor(m), f, (0,))


def s_multiplication(n: int) -> TreeMorphism:
    """``S[n] ⊗ S[n] -> S[n]``: fold the two copies of the tips, merge the two inner nodes."""
    src = tensor_trees(s_functor(n), s_functor(n))
    return TreeMorphism(src, s_functor(n), tuple(range(n)) * 2, (0, 0))


# ---------------------------------------------------------------------------
# evaluation in a cosimplicial monoid


def _ranked(tree: Tree2) -> list[int]:
    """Position of every tip inside its own fibre."""
    seen = [0] * tree.inner
    out = []
    for v in tree.t:
        out.append(seen[v])
        seen[v] += 1
    return out


def eval_morphism(f: TreeMorphism, T):
    """``⊗_i M^(|t^-1(i)|) -> ⊗_j M^(|s^-1(j)|)``.

    For each target node ``j`` the source fibres over ``j`` are sent into
    ``M^(|s^-1(j)|)`` by the images of their ranked tip maps and multiplied in
    order; a target node with nothing over it receives the unit.
    """
    c = T.carrier
    src_sizes = f.src.fibre_sizes()
    dst_sizes = f.dst.fibre_sizes()
    src_dims = [T.size(k) for k in src_sizes]
    dst_dims = [T.size(k) for k in dst_sizes]
    rank_dst = _ranked(f.dst)
    maps = []
    for i in range(f.src.inner):
        j = f.f1[i]
        ranked = tuple(rank_dst[f.f2[x]] for x in f.src.fibre(i))
        maps.append(T.monotone(ranked, dst_sizes[j]))
    over = [[i for i in range(f.src.inner) if f.f1[i] == j] for j in range(f.dst.inner)]
    total_src = 1
    for d in src_dims:
        total_src *= d
    total_dst = 1
    for d in dst_dims:
        total_dst *= d

    def fn(k):
        parts = []
        for d in reversed(src_dims):
            k, r = divmod(k, d)
            parts.append(r)
        parts.reverse()
        acc = c.point(0)
        for j in range(f.dst.inner):
            M = T.level(dst_sizes[j])
            p = M.unit_elt
            for i in over[j]:
                p = M.mul_points(p, c.apply(maps[i], c.point(parts[i])))
            acc = c.tensor_points(acc, p, dst_dims[j])
        return acc

    return c.from_function(total_src, total_dst, fn)


# ---------------------------------------------------------------------------
# tip-bijective morphisms


def canonical_tree(T: Tree2) -> tuple[Tree2, TreeMorphism]:
    """The tree with each fibre's tips made contiguous, and the isomorphism onto it."""
    order = sorted(range(T.tips), key=lambda x: (T.t[x], x))
    pos = [0] * T.tips
    for p, x in enumerate(order):
        pos[x] = p
    C = Tree2(T.tips, T.inner, tuple(sorted(T.t)))
    return C, TreeMorphism(T, C, tuple(pos), tuple(range(T.inner)))


def invert_iso(f: TreeMorphism) -> TreeMorphism:
    if not f.is_tip_bijective or len(set(f.f1)) != f.src.inner or f.src.inner != f.dst.inner:
        raise NotTipBijective("not an isomorphism")
    f2 = [0] * len(f.f2)
    for x, y in enumerate(f.f2):
        f2[y] = x
    f1 = [0] * len(f.f1)
    for x, y in enumerate(f.f1):
        f1[y] = x
    return TreeMorphism(f.dst, f.src, tuple(f2), tuple(f1))


@dataclass(frozen=True)
class CoveringDecomposition:
    reorder: TreeMorphism  # src -> canonical(src)
    factors: tuple[TreeMorphism, ...]  # one per target node, onto a single-fibre tree
    restore: TreeMorphism  # canonical(dst) -> dst

    def recompose(self) -> TreeMorphism:
        return compose(self.restore, compose(tensor_all(self.factors), self.reorder))


def decompose_covering(f: TreeMorphism) -> CoveringDecomposition:
    """Split a tip-bijective ``f`` into one factor per target node, between reorderings of both ends."""
    if not f.is_tip_bijective:
        raise NotTipBijective("f2 is not a bijection")
    C, P = canonical_tree(f.src)
    _, Q = canonical_tree(f.dst)
    g = compose(Q, compose(f, invert_iso(P)))
    factors = []
    dst_rank = _ranked(f.dst)
    P_inv = invert_iso(P).f2
    for j in range(f.dst.inner):
        nodes = [i for i in range(C.inner) if g.f1[i] == j]
        tips = [x for x in range(C.tips) if C.t[x] in nodes]
        sub = Tree2(len(tips), len(nodes), tuple(nodes.index(C.t[x]) for x in tips))
        size = len(f.dst.fibre(j))
        factors.append(
            TreeMorphism(sub, s_functor(size), tuple(dst_rank[f.f2[P_inv[x]]] for x in tips), (0,) * len(nodes))
        )
    return CoveringDecomposition(P, tuple(factors), invert_iso(Q))


# generator items: ("id", k) | ("unit",) | ("merge", a, b, shuffle) | ("reorder", morphism)


def gen_morphism(item) -> TreeMorphism:
    kind = item[0]
    if kind == "id":
        return identity(s_functor(item[1]))
    if kind == "unit":
        return TreeMorphism(EMPTY, s_functor(0), (), ())
    if kind == "merge":
        _, a, b, sh = item
        src = Tree2(a + b, 2, (0,) * a + (1,) * b)
        return TreeMorphism(src, s_functor(a + b), tuple(sh), (0, 0))
    if kind == "reorder":
        return item[1]
    raise ValueError(f"unknown generator {item!r}")


MERGE_ID = ("merge", 1, 1, (0, 1))
MERGE_SWAP = ("merge", 1, 1, (1, 0))


def gen_name(item) -> str:
    if item == MERGE_ID:
        return "MergeId"
    if item == MERGE_SWAP:
        return "MergeSwap"
    if item[0] == "id":
        return f"Id{item[1]}"
    if item[0] == "unit":
        return "Unit"
    if item[0] == "merge":
        return f"Merge{item[1]},{item[2]}{list(item[3])}"
    return "Reorder"


def layer_morphism(layer) -> TreeMorphism:
    if len(layer) == 1 and layer[0][0] == "reorder":
        return layer[0][1]
    return tensor_all([gen_morphism(item) for item in layer])


def recompose_layers(layers, src: Tree2) -> TreeMorphism:
    out = identity(src)
    for layer in layers:
        out = compose(layer_morphism(layer), out)
    return out


def factor_into_generators(f: TreeMorphism) -> list[list]:
    """Layers of generators whose composite is ``f`` (tip-bijective).

    The first layer, if needed, makes the source fibres contiguous. After that
    each layer merges, for every target node, its first two remaining source
    fibres by the shuffle that ``f`` induces on them; other nodes pass through.
    """
    if not f.is_tip_bijective:
        raise NotTipBijective("f2 is not a bijection")
    layers: list[list] = []
    C, P = canonical_tree(f.src)
    if P != identity(f.src):
        layers.append([("reorder", P)])
    _, Q = canonical_tree(f.dst)
    g = compose(Q, compose(f, invert_iso(P)))
    dst_rank = _ranked(f.dst)
    Q_inv = invert_iso(Q).f2
    # per target node: list of blocks, each block = list of final ranks in its current order
    groups = []
    for j in range(f.dst.inner):
        nodes = [i for i in range(C.inner) if g.f1[i] == j]
        groups.append([[dst_rank[Q_inv[g.f2[x]]] for x in C.fibre(i)] for i in nodes])
    units = [j for j, blocks in enumerate(groups) if not blocks]
    if units:
        layer = []
        for blocks in groups:
            layer.extend([("id", len(b)) for b in blocks] if blocks else [("unit",)])
        layers.append(layer)
        for j in units:
            groups[j] = [[]]
    while any(len(blocks) > 1 for blocks in groups):
        layer = []
        for j, blocks in enumerate(groups):
            if len(blocks) > 1:
                a, b = blocks[0], blocks[1]
                merged = sorted(a + b)
                rank = {v: k for k, v in enumerate(merged)}
                layer.append(("merge", len(a), len(b), tuple(rank[v] for v in a + b)))
                layer.extend(("id", len(rest)) for rest in blocks[2:])
                groups[j] = [merged] + blocks[2:]
            else:
                layer.append(("id", len(blocks[0])))
        layers.append(layer)
    if Q != identity(f.dst):
        layers.append([("reorder", invert_iso(Q))])
    if recompose_layers(layers, f.src) != f:
        raise AssertionError("factorization does not recompose")
    return layers


def layers_to_json(layers) -> list:
    out = []
    for layer in layers:
        items = []
        for item in layer:
            if item[0] == "reorder":
                items.append({"gen": "Reorder", "f2": list(item[1].f2)})
            elif item[0] == "merge":
                items.append({"gen": gen_name(item), "a": item[1], "b": item[2], "shuffle": list(item[3])})
            elif item[0] == "id":
                items.append({"gen": "Id", "tips": item[1]})
            else:
                items.append({"gen": "Unit"})
        out.append(items)
    return out


# ---------------------------------------------------------------------------
# enumeration and random generation


def surjective_trees(n: int) -> Iterator[Tree2]:
    for m in range(0 if n == 0 else 1, n + 1):
        for t in itertools.product(range(m), repeat=n):
            if len(set(t)) == m:
                yield Tree2(n, m, t)


def tip_bijective_morphisms(n: int) -> Iterator[TreeMorphism]:
    """All tip-bijective morphisms between trees with ``n`` tips and no childless nodes."""
    for src in surjective_trees(n):
        for perm in itertools.permutations(range(n)):
            for m2 in range(1 if n else 0, src.inner + 1):
                for f1 in dl.monotone_maps(src.inner, m2):
                    if len(set(f1)) != m2:
                        continue
                    t2 = [0] * n
                    for x in range(n):
                        t2[perm[x]] = f1[src.t[x]]
                    try:
                        yield TreeMorphism(src, Tree2(n, m2, tuple(t2)), tuple(perm), tuple(f1))
                    except InvalidTree:
                        continue


def random_tree(rng: random.Random, max_tips: int = 5, max_inner: int = 3) -> Tree2:
    inner = rng.randint(0, max_inner)
    tips = rng.randint(0, max_tips) if inner else 0
    return Tree2(tips, inner, tuple(rng.randrange(inner) for _ in range(tips)))


def random_morphism_from(rng: random.Random, src: Tree2, max_tips: int = 5, max_inner: int = 3, tries: int = 200):
    """A random morphism out of ``src``, or None when none was found."""
    for _ in range(tries):
        dst = random_tree(rng, max_tips, max_inner)
        if dst.inner == 0 and src.inner:
            continue
        f1 = tuple(sorted(rng.randrange(dst.inner) for _ in range(src.inner))) if src.inner else ()
        f2 = [0] * src.tips
        ok = True
        for i in range(src.inner):
            fib = src.fibre(i)
            target = dst.fibre(f1[i])
            if fib and not target:
                ok = False
                break
            picks = sorted(rng.choice(target) for _ in fib)
            for x, y in zip(fib, picks):
                f2[x] = y
        if ok:
            return TreeMorphism(src, dst, tuple(f2), f1)
    return None


# ---------------------------------------------------------------------------
# vines


@dataclass(frozen=True)
class VinesMorphism:
    m: int
    n: int
    braid: tuple[int, ...]
    delta: tuple[int, ...]

    def __post_init__(self):
        BraidWord(max(self.m, 1), self.braid)
        dl.check_monotone(self.delta, self.n)
        if len(self.delta) != self.m:
            raise SizeMismatch("delta must be defined on all strands")

    def to_json(self) -> dict:
        return {"braid": list(self.braid), "delta": list(self.delta), "m": self.m, "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> "VinesMorphism":
        d = tuple(int(v) for v in data["delta"])
        m = int(data.get("m", len(d)))
        n = int(data["n"]) if "n" in data else (max(d) + 1 if d else 0)
        return cls(m, n, tuple(int(v) for v in data["braid"]), d)


def vines_identity(m: int) -> VinesMorphism:
    return VinesMorphism(m, m, (), tuple(range(m)))


def vines_compose(g: VinesMorphism, f: VinesMorphism) -> VinesMorphism:
    """``g ∘ f`` in normal form: ``g``'s braid is pushed through the elementary factors of ``f``'s monotone map."""
    if f.n != g.m:
        raise SizeMismatch(f"cannot compose {f.m}->{f.n} with {g.m}->{g.n}")
    steps = dl.factorization(f.delta, f.n)
    new_steps, word = dl.push_word(g.braid, steps)
    d = dl.compose(g.delta, dl.steps_map(new_steps, f.m))
    return VinesMorphism(f.m, g.n, f.braid + tuple(word), d)


def vines_equal(a: VinesMorphism, b: VinesMorphism) -> bool:
    """Same monotone part, and the braids differ by a permutation preserving every fibre of it."""
    if (a.m, a.n) != (b.m, b.n):
        raise SizeMismatch("vines morphisms have different shapes")
    if a.delta != b.delta:
        return False
    pa = BraidWord(max(a.m, 1), a.braid).permutation()
    pb = BraidWord(max(b.m, 1), b.braid).permutation()
    return all(a.delta[pa[i]] == a.delta[pb[i]] for i in range(a.m))


def vines_eval(v: VinesMorphism, M, R):
    """Operator ``A^{⊗m} -> A^{⊗n}``: braid action followed by the fibrewise products."""
    from .cosimplicial import eval_monotone
    from .yb import carrier_of

    c = carrier_of(R)
    e = eval_monotone(M, v.delta, v.n)
    if v.m < 2:
        return e
    return c.compose(e, braid_action(R, BraidWord(v.m, v.braid)))


def random_vines(rng: random.Random, m: int, n: int, max_len: int = 4) -> VinesMorphism:
    letters = []
    if m >= 2:
        for _ in range(rng.randint(0, max_len)):
            letters.append(rng.choice([1, -1]) * rng.randint(1, m - 1))
    d = tuple(sorted(rng.randrange(n) for _ in range(m))) if n else ()
    return VinesMorphism(m, n, tuple(letters), d)


def bfs_generated(f: TreeMorphism, max_depth: int | None = None) -> bool:
    """Independent check that ``f`` lies in the subcategory generated by single merges.

    Both ends are first made fibre-contiguous. Starting from the identity, repeatedly post-compose
    with a layer holding one merge generator (any shuffle) or one unit, and
    identities elsewhere, until ``f`` is reached.
    """
    C, P = canonical_tree(f.src)
    _, Q = canonical_tree(f.dst)
    target = compose(Q, compose(f, invert_iso(P)))
    units = sum(1 for k in target.dst.fibre_sizes() if k == 0)
    depth = max_depth if max_depth is not None else C.inner + units
    start = identity(C)
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        h, d = frontier.popleft()
        if h == target:
            return True
        if d >= depth:
            continue
        used = sum(1 for k in h.dst.fibre_sizes() if k == 0)
        for step in _single_layers(h.dst, allow_unit=used < units):
            nxt = compose(step, h)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, d + 1))
    return False


def _single_layers(T: Tree2, allow_unit: bool = True) -> Iterator[TreeMorphism]:
    """Layers on a contiguous tree with exactly one merge (of neighbours) or one unit."""
    sizes = T.fibre_sizes()
    for k in range(len(sizes) - 1):
        a, b = sizes[k], sizes[k + 1]
        for positions in itertools.combinations(range(a + b), a):
            rest = [p for p in range(a + b) if p not in positions]
            sh = tuple(positions) + tuple(rest)
            items = [("id", s) for s in sizes[:k]] + [("merge", a, b, sh)] + [("id", s) for s in sizes[k + 2 :]]
            yield tensor_all([gen_morphism(i) for i in items])
    for k in range(len(sizes) + 1 if allow_unit else 0):
        items = [("id", s) for s in sizes[:k]] + [("unit",)] + [("id", s) for s in sizes[k:]]
        yield tensor_all([gen_morphism(i) for i in items])
