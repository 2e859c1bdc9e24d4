"""Algebras given by structure constants, Hopf algebras and comodule algebras over Q.

Every structure is stored as carrier morphisms in ``VECT`` (matrices whose
rows index the target), so the same code paths used for monoids in sets apply.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .carriers import VECT, MonoidObject
from .errors import AntipodeNotInvertible, InvalidTable, Singular, SizeMismatch
from .groups import (
    CentralExtension,
    FiniteGroup,
    TwoCocycleQ,
    check_two_cocycle,
    group_from_table,
)
from .linalg import Mat, parse_rat, rat_str
from .verdict import Verdict, failed, passed


@dataclass(eq=False)
class AlgebraSC:
    """``mu`` is ``d x d^2``, ``unit`` is ``d x 1``."""

    dim: int
    mu: Mat
    unit: Mat
    name: str = ""

    @classmethod
    def from_sc(cls, sc: Sequence, unit: Sequence, name: str = "") -> "AlgebraSC":
        """``sc[i][j][k]`` is the coefficient of ``e_k`` in ``e_i e_j``."""
        d = len(sc)
        cols = []
        for i in range(d):
            if len(sc[i]) != d:
                raise SizeMismatch("structure constants must be d x d x d")
            for j in range(d):
                if len(sc[i][j]) != d:
                    raise SizeMismatch("structure constants must be d x d x d")
                cols.append({k: parse_rat(v) for k, v in enumerate(sc[i][j]) if parse_rat(v) != 0})
        if len(unit) != d:
            raise SizeMismatch("unit vector has wrong length")
        u = Mat.from_columns(d, [{k: parse_rat(v) for k, v in enumerate(unit) if parse_rat(v) != 0}])
        return cls(d, Mat.from_columns(d, cols), u, name)

    @cached_property
    def monoid(self) -> MonoidObject:
        return MonoidObject(VECT, self.dim, self.mu, self.unit, name=self.name)

    def mul(self, p: dict, q: dict) -> dict:
        return self.monoid.mul_points(p, q)

    @property
    def unit_vec(self) -> dict:
        return self.unit.column(0)

    def sc(self) -> list:
        d = self.dim
        cols = self.mu.columns()
        return [[[cols[i * d + j].get(k, Fraction(0)) for k in range(d)] for j in range(d)] for i in range(d)]

    def check(self) -> dict:
        return self.monoid.check()


@dataclass(eq=False)
class HopfSC:
    algebra: AlgebraSC
    delta: Mat  # d^2 x d
    counit: Mat  # 1 x d
    antipode: Mat  # d x d
    name: str = ""

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @cached_property
    def antipode_inv(self) -> Mat:
        try:
            return self.antipode.inverse()
        except Singular as exc:
            raise AntipodeNotInvertible(str(exc)) from None

    @cached_property
    def delta2(self) -> Mat:
        """``(Δ ⊗ I) Δ``, a ``d^3 x d`` matrix."""
        return self.delta.kron(Mat.identity(self.dim)) @ self.delta

    @cached_property
    def is_commutative(self) -> bool:
        return self.algebra.mu == self.algebra.mu @ VECT.swap(self.dim, self.dim)


@dataclass(eq=False)
class ComoduleAlgebra:
    algebra: AlgebraSC
    hopf: HopfSC
    coaction: Mat  # (dA * dH) x dA


# ---------------------------------------------------------------------------
# constructors


def _basis_algebra(d: int, prod, unit_index: int, name: str) -> AlgebraSC:
    cols = [prod(i, j) for i in range(d) for j in range(d)]
    return AlgebraSC(d, Mat.from_columns(d, cols), Mat.from_columns(d, [{unit_index: 1}]), name)


def group_algebra(G: FiniteGroup) -> HopfSC:
    d = G.size
    A = _basis_algebra(d, lambda i, j: {G.table[i][j]: 1}, G.identity, f"k[{G.name}]")
    delta = Mat.from_columns(d * d, [{g * d + g: 1} for g in range(d)])
    counit = Mat.from_columns(1, [{0: 1} for _ in range(d)])
    S = Mat.permutation(list(G.inv))
    H = HopfSC(A, delta, counit, S, A.name)
    _assert_hopf(H)
    return H


def function_algebra(G: FiniteGroup) -> HopfSC:
    """The dual of the group algebra: pointwise product on delta functions."""
    d = G.size
    A = AlgebraSC(
        d,
        Mat.from_columns(d, [({i: 1} if i == j else {}) for i in range(d) for j in range(d)]),
        Mat.from_columns(d, [{g: 1 for g in range(d)}]),
        f"k^{G.name}",
    )
    cols: list[dict] = [dict() for _ in range(d)]
    for a in range(d):
        for b in range(d):
            cols[G.table[a][b]][a * d + b] = Fraction(1)
    delta = Mat.from_columns(d * d, cols)
    counit = Mat.from_columns(1, [({0: 1} if g == G.identity else {}) for g in range(d)])
    S = Mat.permutation(list(G.inv))
    H = HopfSC(A, delta, counit, S, A.name)
    _assert_hopf(H)
    return H


def skew_product_algebra(S: FiniteGroup, alpha: Sequence[Sequence]) -> AlgebraSC:
    """``e_s e_t = alpha(s, t) e_{st}`` for an arbitrary nonzero table, with unit ``e_e / alpha(e, e)``.

    No axioms are checked here.
    """
    al = [[Fraction(v) for v in row] for row in alpha]
    e = S.identity
    cols = [{S.table[s][t]: al[s][t]} for s in range(S.size) for t in range(S.size)]
    unit = Mat.from_columns(S.size, [{e: 1 / al[e][e]}])
    return AlgebraSC(S.size, Mat.from_columns(S.size, cols), unit, f"k[{S.name},alpha]")


def skew_group_algebra(alpha: TwoCocycleQ) -> AlgebraSC:
    """The twisted group algebra of a validated cocycle; associativity is re-checked."""
    A = skew_product_algebra(alpha.group, alpha.alpha)
    report = A.check()
    if not all(v.ok for v in report.values()):
        raise InvalidTable("skew group algebra is not associative and unital")
    return A


def quotient_group(ext: CentralExtension) -> tuple[FiniteGroup, list[int], list[int]]:
    """``G/A`` with cosets ordered by least element; returns (quotient, section, coset index)."""
    G, A = ext.total, ext.center_sub
    coset_of = [-1] * G.size
    section: list[int] = []
    for g in range(G.size):
        if coset_of[g] < 0:
            idx = len(section)
            section.append(g)
            for a in A:
                coset_of[G.table[g][a]] = idx
    q = len(section)
    table = [[coset_of[G.table[section[p]][section[r]]] for r in range(q)] for p in range(q)]
    return group_from_table(table, f"{G.name}/A"), section, coset_of


def k_chi_span(ext: CentralExtension) -> tuple[AlgebraSC, TwoCocycleQ]:
    """The algebra spanned by ``G`` with ``a`` identified with ``chi(a)``, as a skew group algebra of ``G/A``.

    The section takes the least element of each coset.
    """
    G = ext.total
    Q, section, coset_of = quotient_group(ext)
    alpha = []
    for p in range(Q.size):
        row = []
        for r in range(Q.size):
            sp, sr = section[p], section[r]
            s_pr = section[Q.table[p][r]]
            gamma = G.table[G.table[sp][sr]][G.inv[s_pr]]
            row.append(ext.chi[gamma])
        alpha.append(row)
    cocycle = check_two_cocycle(alpha, Q)
    return skew_group_algebra(cocycle), cocycle


def comodule_from_skew(alpha: TwoCocycleQ) -> ComoduleAlgebra:
    """``k[S, alpha]`` over ``k[S]`` with coaction ``e_g -> e_g ⊗ g``."""
    S = alpha.group
    A = skew_group_algebra(alpha)
    H = group_algebra(S)
    d = S.size
    psi = Mat.from_columns(d * d, [{g * d + g: 1} for g in range(d)])
    C = ComoduleAlgebra(A, H, psi)
    bad = [k for k, v in check_comodule(C).items() if not v.ok]
    if bad:
        raise InvalidTable(f"coaction axioms fail: {bad}")
    return C


# ---------------------------------------------------------------------------
# axiom checks


def _eq(name: str, lhs: Mat, rhs: Mat) -> Verdict:
    j = VECT.first_difference(lhs, rhs) if lhs.shape == rhs.shape else -1
    if j is None:
        return passed(name)
    return failed(name, j, "first basis index where the two sides differ")


def check_hopf(H: HopfSC) -> dict[str, Verdict]:
    """One verdict per Hopf algebra axiom; never raises."""
    d = H.dim
    I = Mat.identity(d)
    A = H.algebra
    mu, unit, delta, eps, S = A.mu, A.unit, H.delta, H.counit, H.antipode
    out: dict[str, Verdict] = {}
    alg = A.check()
    out["associative"] = alg["associative"]
    out["unit"] = alg["unit"]
    out["coassociative"] = _eq("coassociative", delta.kron(I) @ delta, I.kron(delta) @ delta)
    out["counit"] = _eq("counit", eps.kron(I) @ delta, I)
    if out["counit"].ok:
        out["counit"] = _eq("counit", I.kron(eps) @ delta, I)
    # Δ and ε are algebra maps
    swap_mid = Mat.identity(d).kron(VECT.swap(d, d)).kron(Mat.identity(d))
    mu2 = mu.kron(mu) @ swap_mid
    out["delta_multiplicative"] = _eq("delta_multiplicative", delta @ mu, mu2 @ delta.kron(delta))
    if out["delta_multiplicative"].ok:
        out["delta_multiplicative"] = _eq("delta_multiplicative", delta @ unit, unit.kron(unit))
    out["counit_multiplicative"] = _eq("counit_multiplicative", eps @ mu, eps.kron(eps))
    if out["counit_multiplicative"].ok:
        out["counit_multiplicative"] = _eq("counit_multiplicative", eps @ unit, Mat.identity(1))
    ie = unit @ eps
    out["antipode"] = _eq("antipode", mu @ S.kron(I) @ delta, ie)
    if out["antipode"].ok:
        out["antipode"] = _eq("antipode", mu @ I.kron(S) @ delta, ie)
    try:
        Sinv = S.inverse()
        out["antipode_invertible"] = _eq("antipode_invertible", S @ Sinv, I)
    except Singular:
        out["antipode_invertible"] = failed("antipode_invertible", None, "antipode is singular")
    return out


def _assert_hopf(H: HopfSC) -> None:
    bad = [k for k, v in check_hopf(H).items() if not v.ok]
    if bad:
        raise InvalidTable(f"Hopf axioms fail: {bad}")


def check_comodule(C: ComoduleAlgebra) -> dict[str, Verdict]:
    A, H, psi = C.algebra, C.hopf, C.coaction
    dA, dH = A.dim, H.dim
    IA, IH = Mat.identity(dA), Mat.identity(dH)
    out: dict[str, Verdict] = {}
    out["coassociative"] = _eq("coassociative", psi.kron(IH) @ psi, IA.kron(H.delta) @ psi)
    out["counit"] = _eq("counit", IA.kron(H.counit) @ psi, IA)
    # multiplication on A ⊗ H is componentwise
    swap_mid = IA.kron(VECT.swap(dH, dA)).kron(IH)
    mu_AH = A.mu.kron(H.algebra.mu) @ swap_mid
    out["algebra_map"] = _eq("algebra_map", psi @ A.mu, mu_AH @ psi.kron(psi))
    if out["algebra_map"].ok:
        out["algebra_map"] = _eq("algebra_map", psi @ A.unit, A.unit.kron(H.algebra.unit))
    return out


# ---------------------------------------------------------------------------
# JSON


def algebra_to_json(A: AlgebraSC) -> dict:
    return {
        "dim": A.dim,
        "sc": [[[rat_str(v) for v in row] for row in plane] for plane in A.sc()],
        "unit": [rat_str(A.unit[i, 0]) for i in range(A.dim)],
    }


def algebra_from_json(data: dict) -> AlgebraSC:
    A = AlgebraSC.from_sc(data["sc"], data["unit"], data.get("name", ""))
    if "dim" in data and int(data["dim"]) != A.dim:
        raise SizeMismatch("dim field disagrees with structure constants")
    return A


def hopf_to_json(H: HopfSC) -> dict:
    d = H.dim
    cols = H.delta.columns()
    out = algebra_to_json(H.algebra)
    out["delta"] = [[[rat_str(cols[i].get(j * d + k, Fraction(0))) for k in range(d)] for j in range(d)] for i in range(d)]
    out["counit"] = [rat_str(H.counit[0, i]) for i in range(d)]
    out["antipode"] = [[rat_str(v) for v in row] for row in H.antipode.to_dense()]
    return out


def hopf_from_json(data: dict) -> HopfSC:
    A = algebra_from_json(data)
    d = A.dim
    delta = Mat.from_columns(
        d * d,
        [{j * d + k: parse_rat(data["delta"][i][j][k]) for j in range(d) for k in range(d)} for i in range(d)],
    )
    counit = Mat.from_dense([[parse_rat(v) for v in data["counit"]]])
    S = Mat.from_dense(data["antipode"])
    if counit.shape != (1, d) or S.shape != (d, d):
        raise SizeMismatch("counit or antipode has wrong shape")
    return HopfSC(A, delta, counit, S, data.get("name", ""))
