"""Yang-Baxter operators on sets and on rational vector spaces.

A set-level operator on ``n`` points is a bijection of pairs, with ``(i, j)``
encoded as ``i * n + j``. A linear operator is a ``d^2 x d^2`` matrix in the
same tensor index convention, so ``linearize`` of a set-level operator can be
compared entrywise with linear constructions.

Braid words act left to right: the first letter is applied first. Letter
``k > 0`` applies ``R`` to strands ``k, k+1`` (1-based); ``-k`` applies ``R^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from .algebras import AlgebraSC, ComoduleAlgebra, HopfSC, skew_group_algebra
from .carriers import SETS, VECT, MonoidObject, SetMap
from .errors import (
    InvalidTable,
    NotBijective,
    QCChecksFailed,
    SizeMismatch,
    WordOutOfRange,
)
from .groups import (
    FiniteGroup,
    FiniteMonoid,
    OneCocycle,
    RightAction,
    TwoCocycleQ,
    check_one_cocycle,
    group_from_table,
    make_action,
)
from .linalg import Mat
from .verdict import Verdict, failed, passed


@dataclass(frozen=True)
class SetYB:
    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.n * self.n:
            raise SizeMismatch("table must have n^2 entries")
        if sorted(self.table) != list(range(self.n * self.n)):
            raise NotBijective("Yang-Baxter table is not a bijection of pairs")

    @classmethod
    def from_pairs(cls, n: int, fn) -> "SetYB":
        """Build from a function ``(i, j) -> (i', j')``."""
        return cls(n, tuple(_enc(fn(i, j), n) for i in range(n) for j in range(n)))

    def __call__(self, i: int, j: int) -> tuple[int, int]:
        return divmod(self.table[i * self.n + j], self.n)

    @cached_property
    def morphism(self) -> SetMap:
        return SetMap(self.n * self.n, self.n * self.n, self.table)

    @cached_property
    def inverse(self) -> "SetYB":
        inv = [0] * len(self.table)
        for k, v in enumerate(self.table):
            inv[v] = k
        return SetYB(self.n, tuple(inv))

    def to_json(self) -> dict:
        return {"n": self.n, "table": [list(self(i, j)) for i in range(self.n) for j in range(self.n)]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SetYB":
        n = int(data["n"])
        pairs = data["table"]
        if len(pairs) != n * n:
            raise SizeMismatch("table must have n^2 entries")
        for p in pairs:
            if len(p) != 2 or not all(0 <= int(v) < n for v in p):
                raise InvalidTable(f"bad pair {p!r}")
        return cls(n, tuple(int(a) * n + int(b) for a, b in pairs))


def _enc(pair, n: int) -> int:
    a, b = pair
    return a * n + b


@dataclass(eq=False)
class LinYB:
    d: int
    matrix: Mat

    def __post_init__(self):
        if self.matrix.shape != (self.d * self.d, self.d * self.d):
            raise SizeMismatch("matrix must be d^2 x d^2")

    @property
    def morphism(self) -> Mat:
        return self.matrix

    @cached_property
    def inverse(self) -> "LinYB":
        return LinYB(self.d, self.matrix.inverse())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinYB):
            return NotImplemented
        return self.d == other.d and self.matrix == other.matrix

    def to_json(self) -> dict:
        from .linalg import mat_to_json

        return {"d": self.d, "matrix": mat_to_json(self.matrix)}


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        for k in self.letters:
            if k == 0 or abs(k) >= self.n:
                raise WordOutOfRange(f"letter {k} out of range for {self.n} strands")

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-k for k in reversed(self.letters)))

    def permutation(self) -> tuple[int, ...]:
        """Underlying permutation ``p`` (0-based): the strand starting at position ``i`` ends at ``p[i]``."""
        pos = list(range(self.n))  # pos[strand] = current position
        at = list(range(self.n))  # at[position] = strand
        for k in self.letters:
            i = abs(k) - 1
            a, b = at[i], at[i + 1]
            at[i], at[i + 1] = b, a
            pos[a], pos[b] = i + 1, i
        return tuple(pos)


@dataclass(eq=False)
class QCMonoid:
    monoid: object  # FiniteMonoid or AlgebraSC
    R: object  # SetYB or LinYB
    report: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# carrier plumbing


def monoid_object(M) -> MonoidObject:
    if isinstance(M, MonoidObject):
        return M
    if isinstance(M, FiniteMonoid):
        t = M.table
        return MonoidObject(SETS, M.size, basis_mul=lambda a, b: t[a][b], unit_point=M.identity, name=M.name)
    if isinstance(M, AlgebraSC):
        return M.monoid
    if isinstance(M, HopfSC):
        return M.algebra.monoid
    raise TypeError(f"not a monoid: {type(M).__name__}")


def carrier_of(R):
    return VECT if isinstance(R, LinYB) else SETS


def size_of(R) -> int:
    return R.d if isinstance(R, LinYB) else R.n


def _decode(index: int, n: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        index, r = divmod(index, n)
        out.append(r)
    return tuple(reversed(out))


def _compare(name: str, c, lhs, rhs, n: int, k: int) -> Verdict:
    j = c.first_difference(lhs, rhs)
    if j is None:
        return passed(name)
    return failed(
        name,
        {"input": list(_decode(j, n, k)), "lhs": c.describe(lhs, j), "rhs": c.describe(rhs, j)},
    )


# ---------------------------------------------------------------------------
# checkers


def check_ybe(R) -> Verdict:
    c, n = carrier_of(R), size_of(R)
    r, I = R.morphism, c.identity(n)
    r1, r2 = c.tensor(r, I), c.tensor(I, r)
    lhs = c.compose(r1, c.compose(r2, r1))
    rhs = c.compose(r2, c.compose(r1, r2))
    return _compare("ybe", c, lhs, rhs, n, 3)


def check_braided(M, R) -> dict[str, Verdict]:
    A = monoid_object(M)
    c, n = carrier_of(R), size_of(R)
    if A.obj != n or A.carrier is not c:
        raise SizeMismatch("monoid and operator live on different objects")
    r, I, mu, iota = R.morphism, c.identity(n), A.mu, A.unit
    out: dict[str, Verdict] = {}
    left = _compare("ide_left", c, c.compose(r, c.tensor(iota, I)), c.tensor(I, iota), n, 1)
    right = _compare("ide_right", c, c.compose(r, c.tensor(I, iota)), c.tensor(iota, I), n, 1)
    if left.ok and right.ok:
        out["ide"] = passed("ide")
    else:
        bad = left if not left.ok else right
        out["ide"] = failed("ide", bad.counterexample, bad.name)
    lhs = c.compose(r, c.tensor(I, mu))
    rhs = c.compose(c.tensor(mu, I), c.compose(c.tensor(I, r), c.tensor(r, I)))
    out["mur"] = _compare("mur", c, lhs, rhs, n, 3)
    lhs = c.compose(r, c.tensor(mu, I))
    rhs = c.compose(c.tensor(I, mu), c.compose(c.tensor(r, I), c.tensor(I, r)))
    out["mul"] = _compare("mul", c, lhs, rhs, n, 3)
    return out


def check_quasi_commutative(M, R) -> Verdict:
    A = monoid_object(M)
    c, n = carrier_of(R), size_of(R)
    return _compare("com", c, c.compose(A.mu, R.morphism), A.mu, n, 2)


def check_nearly_commutative(R) -> Verdict:
    c, n = carrier_of(R), size_of(R)
    return _compare("nearly_commutative", c, c.compose(R.morphism, R.morphism), c.identity(n * n), n, 2)


def qc_suite(M, R, nearly: bool = False) -> dict[str, Verdict]:
    """YBE, both unit laws, the two multiplication laws and ``mu R = mu``."""
    out = {"ybe": check_ybe(R)}
    out.update(check_braided(M, R))
    out["com"] = check_quasi_commutative(M, R)
    if nearly:
        out["nearly_commutative"] = check_nearly_commutative(R)
    return out


def _qc(M, R) -> QCMonoid:
    report = qc_suite(M, R)
    if not all(v.ok for v in report.values()):
        raise QCChecksFailed(report)
    return QCMonoid(M, R, report)


# ---------------------------------------------------------------------------
# constructors


def yb_from_group(G: FiniteGroup) -> QCMonoid:
    """``R(x, y) = (y, y^-1 x y)``."""
    return _qc(G, SetYB.from_pairs(G.size, lambda x, y: (y, G.conj(x, y))))


def yb_from_cocycle(phi: OneCocycle) -> QCMonoid:
    """``R(f, g) = (f g p^-1, p)`` with ``p = phi^-1(phi(f)^g)``."""
    if not phi.bijective:
        raise NotBijective("cocycle is not bijective")
    G, a, inv = phi.G, phi.action.act, phi.inverse_table

    def rule(f, g):
        p = inv[a[phi.table[f]][g]]
        return (G.table[G.table[f][g]][G.inv[p]], p)

    return _qc(G, SetYB.from_pairs(G.size, rule))


def yb_from_matched_pair(G: FiniteGroup, alpha: Sequence[Sequence[int]], beta: Sequence[Sequence[int]]):
    """Build ``R(f, g) = (alpha(f, g), beta(f, g))`` and report which axioms hold.

    Returns ``(R or None, report)``; ``R`` is None when the table is not a bijection.
    """
    n = G.size
    table = tuple(int(alpha[f][g]) * n + int(beta[f][g]) for f in range(n) for g in range(n))
    if sorted(table) != list(range(n * n)):
        return None, {"bijective": failed("bijective", None, "pair table is not a bijection")}
    R = SetYB(n, table)
    report = {"bijective": passed("bijective")}
    report.update(qc_suite(G, R))
    braided = all(report[k].ok for k in ("ybe", "ide", "mur", "mul"))
    report["braided"] = passed("braided") if braided else failed("braided")
    return R, report


def linearize(R: SetYB) -> LinYB:
    return LinYB(R.n, Mat.permutation(list(R.table)))


def yb_from_skew_group(alpha: TwoCocycleQ) -> QCMonoid:
    """``R(e_s ⊗ e_t) = alpha(s, t) / alpha(t, t^-1 s t) e_t ⊗ e_{t^-1 s t}``."""
    S = alpha.group
    d = S.size
    al = alpha.alpha
    cols = []
    for s in range(d):
        for t in range(d):
            c = S.conj(s, t)
            cols.append({t * d + c: al[s][t] / al[t][c]})
    R = LinYB(d, Mat.from_columns(d * d, cols))
    return _qc(skew_group_algebra(alpha), R)


def yb_from_hopf(H: HopfSC) -> QCMonoid:
    """``R(g ⊗ h) = Σ h(2) ⊗ S^-1(h(1)) g h(0)`` via the structure constants of ``(Δ ⊗ I) Δ``."""
    d = H.dim
    Sinv = H.antipode_inv
    A = H.algebra
    d2 = H.delta2.columns()
    cols = []
    for g in range(d):
        eg = VECT.point(g)
        for h in range(d):
            out: dict = {}
            for idx, coeff in d2[h].items():
                a, rest = divmod(idx, d * d)
                b, c = divmod(rest, d)
                right = A.mul(A.mul(Sinv.column(b), eg), VECT.point(a))
                for k, v in right.items():
                    key = c * d + k
                    out[key] = out.get(key, 0) + coeff * v
            cols.append({k: v for k, v in out.items() if v != 0})
    R = LinYB(d, Mat.from_columns(d * d, cols))
    return _qc(A, R)


# ---------------------------------------------------------------------------
# braid group action


def _letter_map(R, n: int, k: int):
    c, m = carrier_of(R), size_of(R)
    i = abs(k) - 1
    r = R.morphism if k > 0 else R.inverse.morphism
    left = c.identity(m**i)
    right = c.identity(m ** (n - i - 2))
    return c.tensor(c.tensor(left, r), right)


def braid_action(R, word: BraidWord):
    c, m = carrier_of(R), size_of(R)
    out = c.identity(m**word.n)
    cache: dict = {}
    for k in word.letters:
        if k not in cache:
            cache[k] = _letter_map(R, word.n, k)
        out = c.compose(cache[k], out)
    return out


# ---------------------------------------------------------------------------
# back from an operator to a cocycle


def cocycle_from_yb(G: FiniteGroup, R: SetYB) -> tuple[FiniteGroup, RightAction, OneCocycle]:
    """Recover ``(K, action, phi)`` from a quasi-commutative structure on ``G``.

    With ``a`` the first component of ``R``: ``x * y = x a(x^-1, y)``,
    ``x^y = y^-1 x a(x^-1, y)`` and ``phi(x) = x^-1``; inverses are taken in ``G``.
    """
    report = qc_suite(G, R)
    if not all(v.ok for v in report.values()):
        raise QCChecksFailed(report)
    n, t, inv = G.size, G.table, G.inv

    def a(x, y):
        return R(x, y)[0]

    K = group_from_table([[t[x][a(inv[x], y)] for y in range(n)] for x in range(n)], f"K({G.name})")
    act = [[t[t[inv[y]][x]][a(inv[x], y)] for y in range(n)] for x in range(n)]
    action = make_action(G, K, act)
    phi = check_one_cocycle(list(inv), action)
    if not phi.bijective:
        raise NotBijective("recovered cocycle is not bijective")
    return K, action, phi


# ---------------------------------------------------------------------------
# Galois map of a comodule algebra


def galois_tau(C: ComoduleAlgebra) -> tuple[Mat, dict[str, Verdict]]:
    """``tau(a ⊗ h) = psi(a) (1 ⊗ S(h))`` on ``A ⊗ H`` with its defining equations checked."""
    from .cosimplicial import cosimp_from_comodule

    A, H = C.algebra, C.hopf
    dA, dH = A.dim, H.dim
    T = cosimp_from_comodule(C)
    M2 = T.level(2)
    cols = []
    for a in range(dA):
        pa = C.coaction.column(a)
        for h in range(dH):
            right = VECT.tensor_points(A.unit_vec, H.antipode.column(h), dH)
            cols.append(M2.mul_points(pa, right))
    tau = Mat.from_columns(dA * dH, cols)
    d0, d1 = T.coface(1, 0), T.coface(1, 1)
    s0 = T.codegeneracy(2, 0)
    report = {
        "tau_d0_eq_d1": _compare("tau_d0_eq_d1", VECT, tau @ d0, d1, dA, 1),
        "tau_d1_eq_d0": _compare("tau_d1_eq_d0", VECT, tau @ d1, d0, dA, 1),
        "sigma_tau_eq_sigma": _compare("sigma_tau_eq_sigma", VECT, s0 @ tau, s0, dA * dH, 1),
        "tau_squared_identity": _compare("tau_squared_identity", VECT, tau @ tau, Mat.identity(dA * dH), dA * dH, 1),
    }
    return tau, report
