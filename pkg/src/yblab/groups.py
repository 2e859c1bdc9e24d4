"""Finite monoids and groups as Cayley tables, actions, cocycles and a small catalog.

Elements are dense indices ``0..n-1``; index 0 is always the identity of the
catalog groups and of every product construction. Actions are *right*
actions, written ``u^g`` and stored as ``act[u][g]``.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import (
    CocycleViolation,
    InvalidAction,
    InvalidTable,
    NonCentral,
    NotAGroup,
    NotAssociative,
    NotUnit,
    OrderOutOfRange,
    SizeMismatch,
    YBLabError,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    table: Table
    identity: int = 0
    name: str = ""

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def flat(self) -> tuple[int, ...]:
        """Row-major multiplication table, entry ``a*n + b``."""
        return tuple(itertools.chain.from_iterable(self.table))

    @cached_property
    def is_commutative(self) -> bool:
        n = self.size
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def product(self, elements: Iterable[int]) -> int:
        acc = self.identity
        for x in elements:
            acc = self.table[acc][x]
        return acc

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteMonoid):
            return NotImplemented
        return self.table == other.table and self.identity == other.identity

    def __hash__(self) -> int:
        return hash((self.table, self.identity))

    def __repr__(self) -> str:
        label = self.name or "anonymous"
        return f"<{type(self).__name__} {label} of order {self.size}>"


@dataclass(frozen=True, eq=False, repr=False)
class FiniteGroup(FiniteMonoid):
    inv: tuple[int, ...] = field(default=())

    @cached_property
    def is_abelian(self) -> bool:
        return self.is_commutative

    def conj(self, x: int, y: int) -> int:
        """``y^-1 x y``."""
        t = self.table
        return t[t[self.inv[y]][x]][y]

    def commutator(self, x: int, y: int) -> int:
        """``x y x^-1 y^-1``."""
        t = self.table
        return t[t[t[x][y]][self.inv[x]]][self.inv[y]]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        acc = self.identity
        for _ in range(k):
            acc = self.table[acc][x]
        return acc

    @cached_property
    def orders(self) -> tuple[int, ...]:
        out = []
        for x in range(self.size):
            k, y = 1, x
            while y != self.identity:
                y = self.table[y][x]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Greedy generating sequence: scan elements in index order."""
        gens: list[int] = []
        sub = {self.identity}
        for x in range(self.size):
            if x not in sub:
                gens.append(x)
                sub = set(self.closure(gens))
        return tuple(gens)

    def closure(self, elements: Iterable[int]) -> list[int]:
        """Sorted subgroup generated by ``elements``."""
        gens = list(elements)
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    @cached_property
    def center(self) -> tuple[int, ...]:
        n = self.size
        return tuple(z for z in range(n) if all(self.table[z][x] == self.table[x][z] for x in range(n)))


# ---------------------------------------------------------------------------
# validation


def _as_table(table: Sequence[Sequence[int]]) -> Table:
    n = len(table)
    if n == 0:
        raise InvalidTable("empty table")
    rows = []
    for row in table:
        if len(row) != n:
            raise InvalidTable("table is not square")
        r = tuple(int(v) for v in row)
        if any(v < 0 or v >= n for v in r):
            raise InvalidTable("table entry out of range")
        rows.append(r)
    return tuple(rows)


def validate_monoid(table: Sequence[Sequence[int]], identity: int = 0, name: str = "") -> FiniteMonoid:
    t = _as_table(table)
    n = len(t)
    if not 0 <= identity < n:
        raise InvalidTable("identity out of range")
    for x in range(n):
        if t[identity][x] != x or t[x][identity] != x:
            raise NotUnit(x)
    for x in range(n):
        tx = t[x]
        for y in range(n):
            txy = t[tx[y]]
            ty = t[y]
            for z in range(n):
                if txy[z] != tx[ty[z]]:
                    raise NotAssociative(x, y, z)
    return FiniteMonoid(t, identity, name)


def validate_group(monoid: FiniteMonoid) -> FiniteGroup:
    t, e = monoid.table, monoid.identity
    inv = []
    for x in range(monoid.size):
        for y in range(monoid.size):
            if t[x][y] == e and t[y][x] == e:
                inv.append(y)
                break
        else:
            raise NotAGroup(x)
    return FiniteGroup(t, e, monoid.name, tuple(inv))


def enumerate_monoids(n: int, identity: int | None = None) -> list[FiniteMonoid]:
    """Every monoid table on ``{0, ..., n-1}``, labelled (not up to isomorphism).

    With ``identity=None`` every element is tried as the identity.
    """
    out = []
    for e in range(n) if identity is None else [identity]:
        others = [x for x in range(n) if x != e]
        cells = [(x, y) for x in others for y in others]
        for values in itertools.product(range(n), repeat=len(cells)):
            t = [[y if x == e else x for y in range(n)] for x in range(n)]
            for (x, y), v in zip(cells, values):
                t[x][y] = v
            try:
                out.append(validate_monoid(t, e, f"M{n}#{len(out)}"))
            except NotAssociative:
                continue
    return out


def is_group(monoid: FiniteMonoid) -> bool:
    try:
        validate_group(monoid)
    except NotAGroup:
        return False
    return True


def group_from_table(table: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    return validate_group(validate_monoid(table, 0, name))


def _from_elements(elements: Sequence, mul: Callable, name: str) -> FiniteGroup:
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    return group_from_table(table, name)


# ---------------------------------------------------------------------------
# products, actions


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str = "") -> FiniteGroup:
    """Pairs ``(g, h)`` encoded as ``g*|H| + h``."""
    m = H.size
    table = tuple(
        tuple(G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(G.size * m))
        for a in range(G.size * m)
    )
    inv = tuple(G.inv[a // m] * m + H.inv[a % m] for a in range(G.size * m))
    return FiniteGroup(table, 0, name or f"{G.name}x{H.name}", inv)


@dataclass(frozen=True)
class RightAction:
    actor: FiniteGroup
    carrier: FiniteGroup
    act: Table  # act[u][g] = u^g

    def __call__(self, u: int, g: int) -> int:
        return self.act[u][g]

    @cached_property
    def is_trivial(self) -> bool:
        return all(self.act[u][g] == u for u in range(self.carrier.size) for g in range(self.actor.size))


def make_action(G: FiniteGroup, K: FiniteGroup, act: Sequence[Sequence[int]]) -> RightAction:
    """Validate that ``act[u][g]`` is a right action of G on K by automorphisms."""
    a = tuple(tuple(int(v) for v in row) for row in act)
    nG, nK = G.size, K.size
    if len(a) != nK or any(len(row) != nG for row in a):
        raise InvalidAction("action table has wrong shape")
    for u in range(nK):
        if a[u][G.identity] != u:
            raise InvalidAction(f"u^e != u for u={u}")
        for f in range(nG):
            for g in range(nG):
                if a[a[u][f]][g] != a[u][G.table[f][g]]:
                    raise InvalidAction(f"(u^f)^g != u^(fg) at u={u}, f={f}, g={g}")
    for g in range(nG):
        images = [a[u][g] for u in range(nK)]
        if len(set(images)) != nK:
            raise InvalidAction(f"u -> u^{g} is not bijective")
        for u in range(nK):
            for v in range(nK):
                if images[K.table[u][v]] != K.table[images[u]][images[v]]:
                    raise InvalidAction(f"u -> u^{g} is not a homomorphism")
    return RightAction(G, K, a)


def trivial_action(G: FiniteGroup, K: FiniteGroup) -> RightAction:
    return RightAction(G, K, tuple(tuple(u for _ in range(G.size)) for u in range(K.size)))


def semidirect_product(G: FiniteGroup, action: RightAction, name: str = "") -> FiniteGroup:
    """``G ⋉ K`` on pairs ``(f, u)`` encoded ``f*|K| + u`` with ``(f,u)(g,v) = (fg, u^g v)``."""
    if action.actor is not G and action.actor != G:
        raise InvalidAction("action is not an action of G")
    K, a = action.carrier, action.act
    m = K.size
    n = G.size * m
    table = []
    for x in range(n):
        f, u = divmod(x, m)
        row = []
        for y in range(n):
            g, v = divmod(y, m)
            row.append(G.table[f][g] * m + K.table[a[u][g]][v])
        table.append(tuple(row))
    return validate_group(FiniteMonoid(tuple(table), 0, name or f"{G.name}|x{K.name}"))


def automorphisms(K: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms of K as image tables, sorted lexicographically."""
    gens = K.generators
    orders = K.orders
    found = []
    for images in itertools.product(*[[y for y in range(K.size) if orders[y] == orders[g]] for g in gens]):
        phi = _extend_hom(K, K, gens, images)
        if phi is not None and len(set(phi)) == K.size:
            found.append(phi)
    return sorted(found)


def _extend_hom(G: FiniteGroup, H: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> tuple[int, ...] | None:
    phi: list[int | None] = [None] * G.size
    phi[G.identity] = H.identity
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for g, h in zip(gens, images):
            y = G.table[x][g]
            val = H.table[phi[x]][h]
            if phi[y] is None:
                phi[y] = val
                queue.append(y)
            elif phi[y] != val:
                return None
    for x in range(G.size):
        for y in range(G.size):
            if phi[G.table[x][y]] != H.table[phi[x]][phi[y]]:
                return None
    return tuple(phi)  # type: ignore[arg-type]


def enumerate_actions(G: FiniteGroup, K: FiniteGroup) -> list[RightAction]:
    """All right actions of G on K by automorphisms (homomorphisms into Aut(K))."""
    auts = automorphisms(K)
    nK = K.size
    ident = tuple(range(nK))

    def compose(p, q):  # p after q
        return tuple(p[q[u]] for u in range(nK))

    def power_is_identity(p, k):
        acc = ident
        for _ in range(k):
            acc = compose(p, acc)
        return acc == ident

    gens = G.generators
    choices = [[p for p in auts if power_is_identity(p, G.orders[g])] for g in gens]
    actions = {}
    for images in itertools.product(*choices):
        maps: list = [None] * G.size
        maps[G.identity] = ident
        queue = deque([G.identity])
        ok = True
        while queue and ok:
            x = queue.popleft()
            for g, p in zip(gens, images):
                y = G.table[x][g]
                val = compose(p, maps[x])
                if maps[y] is None:
                    maps[y] = val
                    queue.append(y)
                elif maps[y] != val:
                    ok = False
                    break
        if not ok:
            continue
        act = tuple(tuple(maps[g][u] for g in range(G.size)) for u in range(nK))
        try:
            actions[act] = make_action(G, K, act)
        except InvalidAction:
            continue
    return [actions[k] for k in sorted(actions)]


# ---------------------------------------------------------------------------
# 1-cocycles


@dataclass(frozen=True)
class OneCocycle:
    action: RightAction
    table: tuple[int, ...]
    bijective: bool

    @property
    def G(self) -> FiniteGroup:
        return self.action.actor

    @property
    def K(self) -> FiniteGroup:
        return self.action.carrier

    def __call__(self, g: int) -> int:
        return self.table[g]

    @cached_property
    def inverse_table(self) -> tuple[int, ...]:
        if not self.bijective:
            raise YBLabError("cocycle is not bijective")
        inv = [0] * len(self.table)
        for g, u in enumerate(self.table):
            inv[u] = g
        return tuple(inv)


def check_one_cocycle(table: Sequence[int], action: RightAction) -> OneCocycle:
    G, K, a = action.actor, action.carrier, action.act
    phi = tuple(int(v) for v in table)
    if len(phi) != G.size or any(not 0 <= v < K.size for v in phi):
        raise InvalidTable("cocycle table must map every element of G into K")
    for f in range(G.size):
        for g in range(G.size):
            if phi[G.table[f][g]] != K.table[a[phi[f]][g]][phi[g]]:
                raise CocycleViolation(f, g)
    return OneCocycle(action, phi, len(set(phi)) == K.size == G.size)


def enumerate_bijective_cocycles(action: RightAction) -> list[OneCocycle]:
    """All bijective 1-cocycles ``G -> K``, sorted by table.

    Values on a generating sequence of G determine the cocycle through
    ``phi(xg) = phi(x)^g phi(g)``; every assignment is propagated and checked.
    """
    G, K, a = action.actor, action.carrier, action.act
    if G.size != K.size:
        raise SizeMismatch(f"|G|={G.size} != |K|={K.size}")
    gens = G.generators
    found = []
    for images in itertools.product(range(K.size), repeat=len(gens)):
        phi: list[int | None] = [None] * G.size
        phi[G.identity] = K.identity
        queue = deque([G.identity])
        ok = True
        while queue and ok:
            x = queue.popleft()
            for g, u in zip(gens, images):
                y = G.table[x][g]
                val = K.table[a[phi[x]][g]][u]
                if phi[y] is None:
                    phi[y] = val
                    queue.append(y)
                elif phi[y] != val:
                    ok = False
                    break
        if not ok or len(set(phi)) != K.size:
            continue
        try:
            found.append(check_one_cocycle(phi, action))  # type: ignore[arg-type]
        except CocycleViolation:
            continue
    return sorted(found, key=lambda c: c.table)


# ---------------------------------------------------------------------------
# 2-cocycles with rational values


@dataclass(frozen=True)
class TwoCocycleQ:
    group: FiniteGroup
    alpha: tuple[tuple[Fraction, ...], ...]

    def __call__(self, s: int, t: int) -> Fraction:
        return self.alpha[s][t]


def check_two_cocycle(alpha: Sequence[Sequence], S: FiniteGroup, normalise: bool = True) -> TwoCocycleQ:
    """Validate ``a(s,t) a(st,u) = a(t,u) a(s,tu)``; optionally normalise so ``a(e,.) = a(.,e) = 1``."""
    n = S.size
    al = tuple(tuple(Fraction(v) for v in row) for row in alpha)
    if len(al) != n or any(len(row) != n for row in al):
        raise InvalidTable("2-cocycle table has wrong shape")
    if any(v == 0 for row in al for v in row):
        raise InvalidTable("2-cocycle values must be nonzero")
    t = S.table
    for s in range(n):
        for u in range(n):
            for w in range(n):
                if al[s][u] * al[t[s][u]][w] != al[u][w] * al[s][t[u][w]]:
                    raise CocycleViolation(s, u, w)
    if normalise:
        c = al[S.identity][S.identity]
        if c != 1:
            al = tuple(tuple(v / c for v in row) for row in al)
    return TwoCocycleQ(S, al)


def quaternion_cocycle(V: FiniteGroup | None = None) -> TwoCocycleQ:
    """Sign cocycle on the Klein four-group whose twisted group algebra is the quaternions.

    Element ``2x + y`` stands for ``i^x j^y``.
    """
    V = V or catalog_group("Z/2xZ/2")
    alpha = []
    for s in range(4):
        x, y = divmod(s, 2)
        row = []
        for t in range(4):
            u, v = divmod(t, 2)
            row.append(Fraction(-1) ** (y * u + x * u + y * v))
        alpha.append(row)
    return check_two_cocycle(alpha, V)


def trivial_two_cocycle(S: FiniteGroup) -> TwoCocycleQ:
    return TwoCocycleQ(S, tuple(tuple(Fraction(1) for _ in range(S.size)) for _ in range(S.size)))


# ---------------------------------------------------------------------------
# central extensions


@dataclass(frozen=True)
class CentralExtension:
    total: FiniteGroup
    center_sub: tuple[int, ...]
    chi: dict  # element of A -> nonzero Fraction

    def __hash__(self) -> int:
        return hash((self.total, self.center_sub, tuple(sorted(self.chi.items()))))


def make_central_extension(G: FiniteGroup, A: Iterable[int], chi: dict | None = None) -> CentralExtension:
    sub = tuple(sorted(set(A)))
    if G.identity not in sub or G.closure(sub) != list(sub):
        raise InvalidTable("A is not a subgroup")
    center = set(G.center)
    if not set(sub) <= center:
        raise NonCentral(f"{set(sub) - center} not central")
    chi = {a: Fraction(1) for a in sub} if chi is None else {int(k): Fraction(v) for k, v in chi.items()}
    if set(chi) != set(sub) or any(v == 0 for v in chi.values()):
        raise InvalidTable("chi must be a nonzero function on A")
    for a in sub:
        for b in sub:
            if chi[G.table[a][b]] != chi[a] * chi[b]:
                raise InvalidTable(f"chi is not multiplicative at {a}, {b}")
    return CentralExtension(G, sub, chi)


def near_commutative_extension_test(ext: CentralExtension) -> bool:
    """True iff every commutator of the total group lies in A (G/A abelian)."""
    G, A = ext.total, set(ext.center_sub)
    return all(G.commutator(x, y) in A for x in range(G.size) for y in range(G.size))


def central_subgroups(G: FiniteGroup) -> list[tuple[int, ...]]:
    subs = set()
    rest = [z for z in G.center if z != G.identity]
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            subs.add(tuple(G.closure(combo)))
    return sorted(subs, key=lambda s: (len(s), s))


def sign_characters(G: FiniteGroup, A: Sequence[int]) -> list[dict]:
    """All homomorphisms ``A -> {+1, -1}``."""
    out = []
    for signs in itertools.product((1, -1), repeat=len(A)):
        chi = {a: Fraction(s) for a, s in zip(A, signs)}
        if chi[G.identity] != 1:
            continue
        if all(chi[G.table[a][b]] == chi[a] * chi[b] for a in A for b in A):
            out.append(chi)
    return out


# ---------------------------------------------------------------------------
# catalog


def _cyclic(n: int, name: str | None = None) -> FiniteGroup:
    return _from_elements(list(range(n)), lambda a, b: (a + b) % n, name or f"Z/{n}")


def _abelian(*ns: int) -> FiniteGroup:
    elements = list(itertools.product(*[range(n) for n in ns]))
    return _from_elements(
        elements,
        lambda a, b: tuple((x + y) % n for x, y, n in zip(a, b, ns)),
        "x".join(f"Z/{n}" for n in ns),
    )


def _dihedral(n: int, name: str) -> FiniteGroup:
    elements = [(k, 0) for k in range(n)] + [(k, 1) for k in range(n)]

    def mul(a, b):
        (p, s), (q, t) = a, b
        return ((p + (q if s == 0 else -q)) % n, s ^ t)

    return _from_elements(elements, mul, name)


def _dicyclic(m: int, name: str) -> FiniteGroup:
    elements = [(k, 0) for k in range(2 * m)] + [(k, 1) for k in range(2 * m)]

    def mul(a, b):
        (k, s), (l, t) = a, b
        if s == 0:
            return ((k + l) % (2 * m), t)
        if t == 0:
            return ((k - l) % (2 * m), 1)
        return ((k - l + m) % (2 * m), 0)

    return _from_elements(elements, mul, name)


def _alternating4() -> FiniteGroup:
    def sign(p):
        return (-1) ** sum(1 for i in range(4) for j in range(i) if p[j] > p[i])

    elements = sorted(p for p in itertools.permutations(range(4)) if sign(p) == 1)
    return _from_elements(elements, lambda p, q: tuple(p[q[i]] for i in range(4)), "A4")


_BUILDERS: dict[int, list[Callable[[], FiniteGroup]]] = {
    1: [lambda: _cyclic(1, "trivial")],
    2: [lambda: _cyclic(2)],
    3: [lambda: _cyclic(3)],
    4: [lambda: _cyclic(4), lambda: _abelian(2, 2)],
    5: [lambda: _cyclic(5)],
    6: [lambda: _cyclic(6), lambda: _dihedral(3, "S3")],
    7: [lambda: _cyclic(7)],
    8: [
        lambda: _cyclic(8),
        lambda: _abelian(4, 2),
        lambda: _abelian(2, 2, 2),
        lambda: _dihedral(4, "D4"),
        lambda: _dicyclic(2, "Q8"),
    ],
    9: [lambda: _cyclic(9), lambda: _abelian(3, 3)],
    10: [lambda: _cyclic(10), lambda: _dihedral(5, "D5")],
    11: [lambda: _cyclic(11)],
    12: [
        lambda: _cyclic(12),
        lambda: _abelian(6, 2),
        lambda: _alternating4(),
        lambda: _dihedral(6, "D6"),
        lambda: _dicyclic(3, "Dic3"),
    ],
}

_CACHE: dict[int, list[FiniteGroup]] = {}

ALIASES = {
    "1": "trivial",
    "Z/1": "trivial",
    "V": "Z/2xZ/2",
    "K4": "Z/2xZ/2",
    "D3": "S3",
    "Dic2": "Q8",
    "Z/2xZ/4": "Z/4xZ/2",
    "Z/2xZ/6": "Z/6xZ/2",
}


def catalog(order: int) -> list[FiniteGroup]:
    """All groups of the given order (1..12) up to isomorphism, with stable names."""
    if not 1 <= order <= 12:
        raise OrderOutOfRange(f"catalog covers orders 1..12, got {order}")
    if order not in _CACHE:
        _CACHE[order] = [build() for build in _BUILDERS[order]]
    return list(_CACHE[order])


def all_catalog(max_order: int = 12) -> list[FiniteGroup]:
    return [G for n in range(1, max_order + 1) for G in catalog(n)]


def catalog_group(name: str) -> FiniteGroup:
    key = name.replace("×", "x").replace(" ", "")
    key = ALIASES.get(key, key)
    for G in all_catalog():
        if G.name == key:
            return G
    raise KeyError(f"no catalog group named {name!r}")


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Brute-force isomorphism test, pruned by element-order statistics."""
    if G.size != H.size or Counter(G.orders) != Counter(H.orders):
        return False
    gens = G.generators
    choices = [[h for h in range(H.size) if H.orders[h] == G.orders[g]] for g in gens]
    for images in itertools.product(*choices):
        phi = _extend_hom(G, H, gens, images)
        if phi is not None and len(set(phi)) == H.size:
            return True
    return False


# ---------------------------------------------------------------------------
# JSON


def group_to_json(M: FiniteMonoid) -> dict:
    return {"name": M.name, "order": M.size, "table": [list(r) for r in M.table], "identity": M.identity}


def monoid_from_json(data: dict) -> FiniteMonoid:
    M = validate_monoid(data["table"], int(data.get("identity", 0)), data.get("name", ""))
    if "order" in data and int(data["order"]) != M.size:
        raise InvalidTable("order field disagrees with table size")
    return M


def group_from_json(data: dict) -> FiniteGroup:
    return validate_group(monoid_from_json(data))


def action_to_json(action: RightAction) -> dict:
    return {
        "actor": action.actor.name,
        "carrier": action.carrier.name,
        "act": {str(u): list(row) for u, row in enumerate(action.act)},
    }


def cocycle_to_json(phi: OneCocycle) -> dict:
    return {
        "action": action_to_json(phi.action),
        "table": {str(g): u for g, u in enumerate(phi.table)},
        "bijective": phi.bijective,
    }
