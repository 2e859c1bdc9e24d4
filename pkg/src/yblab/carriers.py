"""The two ambient monoidal categories: finite sets and exact rational vector spaces.

Objects are sizes (cardinality or dimension). Morphisms are ``SetMap`` tables or
``Mat`` matrices (rows index the target). Tensor products of objects multiply
sizes and use the index convention ``(i, j) -> i * size2 + j`` in both cases.

A *point* is an element of an object: an int for sets, a sparse vector
``{basis index: Fraction}`` for vector spaces. Many constructions are built
pointwise through ``from_function`` so that large tensor powers never need to
be materialised as explicit composites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable

from .errors import NotBijective, SizeMismatch, Singular
from .linalg import Mat, mat_from_json, mat_to_json


@dataclass(frozen=True)
class SetMap:
    src: int
    dst: int
    table: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.table[x]


class SetCarrier:
    name = "set"
    linear = False
    unit_obj = 1

    def identity(self, n: int) -> SetMap:
        return SetMap(n, n, tuple(range(n)))

    def compose(self, g: SetMap, f: SetMap) -> SetMap:
        """``g ∘ f``."""
        if f.dst != g.src:
            raise SizeMismatch(f"cannot compose {f.src}->{f.dst} with {g.src}->{g.dst}")
        gt = g.table
        return SetMap(f.src, g.dst, tuple(gt[x] for x in f.table))

    def tensor(self, f: SetMap, g: SetMap) -> SetMap:
        gd, gt = g.dst, g.table
        return SetMap(f.src * g.src, f.dst * gd, tuple(a * gd + b for a in f.table for b in gt))

    def equal(self, f: SetMap, g: SetMap) -> bool:
        return f.src == g.src and f.dst == g.dst and f.table == g.table

    def first_difference(self, f: SetMap, g: SetMap) -> int | None:
        for i, (a, b) in enumerate(zip(f.table, g.table)):
            if a != b:
                return i
        return None

    def is_invertible(self, f: SetMap) -> bool:
        return f.src == f.dst and len(set(f.table)) == f.src

    def inverse(self, f: SetMap) -> SetMap:
        if not self.is_invertible(f):
            raise NotBijective("map is not a bijection")
        inv = [0] * f.src
        for x, y in enumerate(f.table):
            inv[y] = x
        return SetMap(f.dst, f.src, tuple(inv))

    def point(self, i: int, n: int | None = None) -> int:
        return i

    def apply(self, f: SetMap, p: int) -> int:
        return f.table[p]

    def tensor_points(self, p: int, q: int, dq: int) -> int:
        return p * dq + q

    def from_function(self, src: int, dst: int, fn: Callable[[int], int]) -> SetMap:
        table = tuple(fn(i) for i in range(src))
        if any(not 0 <= y < dst for y in table):
            raise SizeMismatch("function leaves the target set")
        return SetMap(src, dst, table)

    def swap(self, a: int, b: int) -> SetMap:
        return SetMap(a * b, a * b, tuple(j * a + i for i in range(a) for j in range(b)))

    def describe(self, f: SetMap, i: int):
        return f.table[i]

    def to_json(self, f: SetMap) -> list[int]:
        return list(f.table)

    def from_json(self, data, src: int, dst: int) -> SetMap:
        table = tuple(int(v) for v in data)
        if len(table) != src:
            raise SizeMismatch(f"expected a table of length {src}, got {len(table)}")
        return self.from_function(src, dst, lambda i: table[i])


class VectCarrier:
    name = "vect"
    linear = True
    unit_obj = 1

    def identity(self, n: int) -> Mat:
        return Mat.identity(n)

    def compose(self, g: Mat, f: Mat) -> Mat:
        return g @ f

    def tensor(self, f: Mat, g: Mat) -> Mat:
        return f.kron(g)

    def equal(self, f: Mat, g: Mat) -> bool:
        return f == g

    def first_difference(self, f: Mat, g: Mat) -> int | None:
        fc, gc = f.columns(), g.columns()
        for j, (a, b) in enumerate(zip(fc, gc)):
            if a != b:
                return j
        return None

    def is_invertible(self, f: Mat) -> bool:
        return f.is_invertible()

    def inverse(self, f: Mat) -> Mat:
        return f.inverse()

    def point(self, i: int, n: int | None = None) -> dict:
        return {i: Fraction(1)}

    def apply(self, f: Mat, p: dict) -> dict:
        return f.apply(p)

    def tensor_points(self, p: dict, q: dict, dq: int) -> dict:
        return {a * dq + b: x * y for a, x in p.items() for b, y in q.items()}

    def from_function(self, src: int, dst: int, fn: Callable[[int], dict]) -> Mat:
        cols = [fn(i) for i in range(src)]
        if any(not 0 <= k < dst for c in cols for k in c):
            raise SizeMismatch("vector leaves the target space")
        return Mat.from_columns(dst, cols)

    def swap(self, a: int, b: int) -> Mat:
        return Mat.permutation([j * a + i for i in range(a) for j in range(b)])

    def describe(self, f: Mat, j: int):
        return {k: str(v) for k, v in sorted(f.column(j).items())}

    def to_json(self, f: Mat):
        return mat_to_json(f)

    def from_json(self, data, src: int, dst: int) -> Mat:
        m = mat_from_json(data)
        if m.shape != (dst, src):
            raise SizeMismatch(f"expected a {dst}x{src} matrix, got {m.shape}")
        return m


SETS = SetCarrier()
VECT = VectCarrier()


class MonoidObject:
    """A monoid ``(A, mu, iota)`` in one of the carriers.

    Either pass ``mu`` and ``unit`` as carrier morphisms, or pass ``basis_mul``
    (product of two basis indices as a point) and ``unit_point``; the missing
    representation is built on demand.
    """

    def __init__(
        self,
        carrier,
        obj: int,
        mu=None,
        unit=None,
        *,
        basis_mul: Callable[[int, int], object] | None = None,
        unit_point=None,
        name: str = "",
    ):
        if mu is None and basis_mul is None:
            raise ValueError("need mu or basis_mul")
        if unit is None and unit_point is None:
            raise ValueError("need unit or unit_point")
        self.carrier = carrier
        self.obj = obj
        self._mu = mu
        self._unit = unit
        self._basis_mul = basis_mul
        self._unit_point = unit_point
        self.name = name

    @cached_property
    def mu(self):
        if self._mu is not None:
            return self._mu
        n = self.obj
        bm = self._basis_mul
        return self.carrier.from_function(n * n, n, lambda k: bm(k // n, k % n))

    @cached_property
    def unit(self):
        if self._unit is not None:
            return self._unit
        return self.carrier.from_function(1, self.obj, lambda _: self._unit_point)

    @cached_property
    def unit_elt(self):
        if self._unit_point is not None:
            return self._unit_point
        return self.carrier.apply(self._unit, self.carrier.point(0))

    def basis_mul(self, a: int, b: int):
        if self._basis_mul is not None:
            return self._basis_mul(a, b)
        return self.carrier.apply(self._mu, self.carrier.point(a * self.obj + b))

    def mul_points(self, p, q):
        c = self.carrier
        if not c.linear:
            return self.basis_mul(p, q)
        if self._basis_mul is None:
            return c.apply(self._mu, c.tensor_points(p, q, self.obj))
        out: dict = {}
        for a, x in p.items():
            for b, y in q.items():
                for k, v in self._basis_mul(a, b).items():
                    out[k] = out.get(k, 0) + x * y * v
        return {k: v for k, v in out.items() if v != 0}

    def product(self, points):
        acc = self.unit_elt
        for p in points:
            acc = self.mul_points(acc, p)
        return acc

    def generators(self) -> list[int]:
        """Basis elements generating the monoid (sets only), found greedily in index order."""
        if self.carrier.linear:
            return list(range(self.obj))
        gens: list[int] = []
        reached = {self.unit_elt}
        for x in range(self.obj):
            if x in reached:
                continue
            gens.append(x)
            queue = list(reached)
            while queue:
                y = queue.pop()
                for g in gens:
                    z = self.basis_mul(y, g)
                    if z not in reached:
                        reached.add(z)
                        queue.append(z)
        return gens

    def check(self) -> dict:
        """Associativity and two-sided unit, each with the first failing basis tuple.

        Associativity uses Light's test: ``(x g) y = x (g y)`` for ``g`` in a
        generating set suffices, since the elements with this property form a
        submonoid. For vector spaces the generating set is the whole basis.
        """
        from .verdict import failed, passed

        c, n = self.carrier, self.obj
        out = {}
        bad_unit = None
        for a in range(n):
            pa = c.point(a)
            if self.mul_points(self.unit_elt, pa) != pa or self.mul_points(pa, self.unit_elt) != pa:
                bad_unit = a
                break
        out["unit"] = failed("unit", bad_unit) if bad_unit is not None else passed("unit")
        bad = None
        gens = self.generators() if bad_unit is None else list(range(n))
        for g in gens:
            right = [self.basis_mul(x, g) for x in range(n)]
            left = [self.basis_mul(g, y) for y in range(n)]
            for x in range(n):
                px = c.point(x)
                for y in range(n):
                    if self.mul_points(right[x], c.point(y)) != self.mul_points(px, left[y]):
                        bad = (x, g, y)
                        break
                if bad:
                    break
            if bad:
                break
        out["associative"] = failed("associative", bad) if bad else passed("associative")
        return out


def tensor_monoid(M: MonoidObject, N: MonoidObject) -> MonoidObject:
    """Componentwise monoid structure on ``M ⊗ N``."""
    c = M.carrier
    m, n = M.obj, N.obj

    def bm(a, b):
        a1, a2 = divmod(a, n)
        b1, b2 = divmod(b, n)
        return c.tensor_points(M.basis_mul(a1, b1), N.basis_mul(a2, b2), n)

    return MonoidObject(
        c, m * n, basis_mul=bm, unit_point=c.tensor_points(M.unit_elt, N.unit_elt, n)
    )


def unit_monoid(carrier) -> MonoidObject:
    return MonoidObject(carrier, 1, basis_mul=lambda a, b: carrier.point(0), unit_point=carrier.point(0))


def is_homomorphism(f, M: MonoidObject, N: MonoidObject):
    """First basis pair ``(a, b)`` with ``f(ab) != f(a) f(b)``, or ``"unit"``, or None.

    For sets it is enough to let ``b`` run over generators of ``M``.
    """
    c = M.carrier
    if c.apply(f, M.unit_elt) != N.unit_elt:
        return "unit"
    images = [c.apply(f, c.point(a)) for a in range(M.obj)]
    for b in M.generators():
        for a in range(M.obj):
            if c.apply(f, M.basis_mul(a, b)) != N.mul_points(images[a], images[b]):
                return (a, b)
    return None


def require_invertible(carrier, f, error=Singular):
    if not carrier.is_invertible(f):
        raise error("morphism is not invertible")
    return carrier.inverse(f)
