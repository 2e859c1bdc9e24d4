"""The acceptance criteria as runnable checks, shared by ``yblab selftest`` and the test suite.

Each check returns ``(ok, detail)``; ``run`` adds timing and compares it with
the criterion's time budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import algebras as al
from . import classify as cl
from . import cosimplicial as cs
from . import groups as gp
from . import trees as tr
from . import yb
from .verdict import all_ok


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    elapsed: float
    budget: float
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.ok and self.elapsed <= self.budget

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.elapsed <= self.budget else " (over budget)"
        return f"[{status}] criterion {self.number}: {self.title} ({self.elapsed:.2f}s / {self.budget:.0f}s){extra}"

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "ok": self.ok,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 3),
            "budget": self.budget,
            "detail": self.detail,
        }


def _groups(max_order: int) -> list[gp.FiniteGroup]:
    return gp.all_catalog(max_order)


def _cocycles(max_order: int, abelian_only: bool = False):
    for order in range(1, max_order + 1):
        for G in gp.catalog(order):
            for K in gp.catalog(order):
                if abelian_only and not K.is_abelian:
                    continue
                for action in gp.enumerate_actions(G, K):
                    for phi in gp.enumerate_bijective_cocycles(action):
                        yield G, K, phi


# ---------------------------------------------------------------------------


def group_family(quick: bool = False):
    bad, checked = [], 0
    for G in _groups(6 if quick else 8):
        R = yb.yb_from_group(G).R
        suite = yb.qc_suite(G, R)
        involutive = yb.check_nearly_commutative(R).ok
        checked += 1
        if not all_ok(suite) or involutive != G.is_abelian:
            bad.append(G.name)
    return not bad, {"groups": checked, "failures": bad}


def cobar_round_trip(quick: bool = False):
    bad = []
    groups = _groups(6 if quick else 8)
    for G in groups:
        if cs.derive_yb(cs.cobar_from_group(G)).table != yb.yb_from_group(G).R.table:
            bad.append(G.name)
    monoids = [M for n in (2, 3) for M in gp.enumerate_monoids(n) if not gp.is_group(M)]
    covered = [M.name for M in monoids if cs.check_covering_condition(cs.cobar_from_group(M)).ok]
    return not bad and not covered, {
        "groups": len(groups),
        "derive_mismatches": bad,
        "non_group_monoids": len(monoids),
        "monoids_passing_covering": covered,
    }


def cocycle_correspondence(quick: bool = False):
    count, bad = 0, []
    for G, K, phi in _cocycles(6):
        R = yb.yb_from_cocycle(phi).R
        derived = cs.derive_yb(cs.cosimp_from_cocycle(phi))
        _, _, psi = yb.cocycle_from_yb(G, R)
        back = yb.yb_from_cocycle(psi).R
        count += 1
        if derived.table != R.table or back.table != R.table:
            bad.append([G.name, K.name, list(phi.table)])
    return not bad and count > 0, {"triples": count, "failures": bad}


def oracle_agreement(quick: bool = False):
    out, ok = {}, True
    for G in _groups(4):
        report = cl.classify_group(G)
        diff = cl.oracle_diff(report, cl.oracle_structures(G))
        out[G.name] = len(report.entries)
        ok = ok and diff["equal"]
    return ok, {"structures": out}


def linear_family(quick: bool = False):
    detail = {}
    ok = True
    for name in ("Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3"):
        G = gp.catalog_group(name)
        same = yb.yb_from_hopf(al.group_algebra(G)).R == yb.linearize(yb.yb_from_group(G).R)
        detail[name] = same
        ok = ok and same
    q = gp.quaternion_cocycle()
    Q8 = gp.catalog_group("Q8")
    chi = next(c for c in gp.sign_characters(Q8, Q8.center) if any(v != 1 for v in c.values()))
    ext = gp.make_central_extension(Q8, Q8.center, chi)
    detail["quotient_abelian"] = gp.near_commutative_extension_test(ext)
    A, alpha = al.k_chi_span(ext)
    for label, cocycle in (("quaternion", q), ("k_chi_span", alpha)):
        qc = yb.yb_from_skew_group(cocycle)
        suite = yb.qc_suite(qc.monoid, qc.R, nearly=True)
        detail[label] = all_ok(suite)
        ok = ok and detail[label]
    derived = cs.derive_yb(cs.cosimp_from_comodule(al.comodule_from_skew(q)))
    detail["comodule_derive"] = derived == yb.yb_from_skew_group(q).R
    ok = ok and detail["comodule_derive"] and detail["quotient_abelian"]
    return ok, detail


def galois(quick: bool = False):
    instances = {"quaternion": gp.quaternion_cocycle()}
    for name in ("Z/2", "Z/3", "Z/4", "Z/2xZ/2"):
        instances[f"trivial on {name}"] = gp.trivial_two_cocycle(gp.catalog_group(name))
    detail = {}
    for label, alpha in instances.items():
        _, report = yb.galois_tau(al.comodule_from_skew(alpha))
        detail[label] = {k: v.ok for k, v in report.items()}
    return all(all(v.values()) for v in detail.values()), detail


def braid_monotone(quick: bool = False):
    S3, Z4 = gp.catalog_group("S3"), gp.catalog_group("Z/4")
    detail = {}
    for label, M, R in (("S3", S3, yb.yb_from_group(S3).R), ("Z/4", Z4, yb.yb_from_group(Z4).R)):
        report = cs.check_bractcc(M, R, 4)
        detail[label] = {k: v.ok for k, v in report.items()}
    return all(all(v.values()) for v in detail.values()), detail


def trees_laws(quick: bool = False):
    rng = random.Random(20261015)
    laws = 0
    while laws < 1000:
        f = tr.random_morphism_from(rng, tr.random_tree(rng))
        g = f and tr.random_morphism_from(rng, f.dst)
        h = g and tr.random_morphism_from(rng, g.dst)
        if h is None:
            continue
        k = tr.random_morphism_from(rng, tr.random_tree(rng, 2, 2))
        k2 = k and tr.random_morphism_from(rng, k.dst)
        if k2 is None:
            continue
        if tr.compose(h, tr.compose(g, f)) != tr.compose(tr.compose(h, g), f):
            return False, {"failure": "associativity"}
        if tr.compose(tr.identity(f.dst), f) != f or tr.compose(f, tr.identity(f.src)) != f:
            return False, {"failure": "identity"}
        if tr.compose(tr.tensor(g, k2), tr.tensor(f, k)) != tr.tensor(tr.compose(g, f), tr.compose(k2, k)):
            return False, {"failure": "interchange"}
        laws += 1
    T = cs.cobar_from_group(gp.catalog_group("Z/3"))
    c = T.carrier
    count = 0
    for n in range(5):
        for f in tr.tip_bijective_morphisms(n):
            layers = tr.factor_into_generators(f)
            if tr.recompose_layers(layers, f.src) != f or tr.decompose_covering(f).recompose() != f:
                return False, {"failure": "factorization", "morphism": f.to_json()}
            if not c.is_invertible(tr.eval_morphism(f, T)):
                return False, {"failure": "eval not invertible", "morphism": f.to_json()}
            count += 1
    functor = 0
    S3 = cs.cobar_from_group(gp.catalog_group("S3"))
    while functor < 100:
        f = tr.random_morphism_from(rng, tr.random_tree(rng, 3, 3), 3, 3)
        g = f and tr.random_morphism_from(rng, f.dst, 3, 3)
        if g is None:
            continue
        lhs = tr.eval_morphism(tr.compose(g, f), S3)
        if lhs != S3.carrier.compose(tr.eval_morphism(g, S3), tr.eval_morphism(f, S3)):
            return False, {"failure": "eval functoriality"}
        functor += 1
    return True, {"random_laws": laws, "tip_bijective": count, "functoriality": functor}


def vines(quick: bool = False):
    rng = random.Random(7)
    pair = (tr.VinesMorphism(2, 1, (1,), (0, 0)), tr.VinesMorphism(2, 1, (), (0, 0)))
    if not tr.vines_equal(*pair):
        return False, {"failure": "fibre-stabilising pair"}
    if tr.vines_equal(tr.VinesMorphism(2, 2, (1,), (0, 1)), tr.vines_identity(2)):
        return False, {"failure": "singleton fibres"}
    chains = 0
    while chains < 500:
        m, n, p, q = (rng.randint(1, 4) for _ in range(4))
        f, g, h = tr.random_vines(rng, m, n), tr.random_vines(rng, n, p), tr.random_vines(rng, p, q)
        a = tr.vines_compose(h, tr.vines_compose(g, f))
        b = tr.vines_compose(tr.vines_compose(h, g), f)
        if not tr.vines_equal(a, b):
            return False, {"failure": "confluence", "chain": [f.to_json(), g.to_json(), h.to_json()]}
        # congruence: replace f by an equivalent morphism with a fibre-stabilising braid appended
        f2 = tr.VinesMorphism(f.m, f.n, f.braid + _stabiliser(f, rng), f.delta)
        if not tr.vines_equal(f, f2) or not tr.vines_equal(tr.vines_compose(g, f), tr.vines_compose(g, f2)):
            return False, {"failure": "congruence"}
        if not (tr.vines_equal(a, a) and tr.vines_equal(b, a)):
            return False, {"failure": "equivalence"}
        chains += 1
    return True, {"chains": chains}


def _stabiliser(f: tr.VinesMorphism, rng: random.Random) -> tuple[int, ...]:
    """Random crossings of neighbouring positions that ``f.delta`` sends to the same point."""
    letters = []
    for k in range(f.m - 1):
        if f.delta[k] == f.delta[k + 1] and rng.random() < 0.5:
            letters.append(rng.choice([1, -1]) * (k + 1))
    return tuple(letters)


def symmetric(quick: bool = False):
    count, bad = 0, []
    for G, K, phi in _cocycles(4, abelian_only=True):
        R = yb.yb_from_cocycle(phi).R
        if not yb.check_nearly_commutative(R).ok:
            bad.append([G.name, K.name, "R^2"])
        for n in (1, 2, 3):
            _, v1 = cs.symmetric_action(phi, n)
            _, _, v2 = cs.symmetric_power(phi, n)
            failing = [k for k, v in {**v1, **v2}.items() if not v.ok]
            if failing:
                bad.append([G.name, K.name, n, failing])
        count += 1
    return not bad and count > 0, {"cocycles": count, "failures": bad}


CRITERIA: list[tuple[int, str, float, Callable]] = [
    (1, "group family passes the quasi-commutative suite", 5, group_family),
    (2, "cobar derivation round trip and covering failures", 10, cobar_round_trip),
    (3, "cocycle correspondence", 60, cocycle_correspondence),
    (4, "classification equals brute force", 120, oracle_agreement),
    (5, "linear family", 30, linear_family),
    (6, "Galois map", 5, galois),
    (7, "braid and monotone relations", 10, braid_monotone),
    (8, "trees", 60, trees_laws),
    (9, "vines", 10, vines),
    (10, "symmetric group action and symmetric powers", 30, symmetric),
]


def run(number: int, quick: bool = False) -> CriterionResult:
    for k, title, budget, fn in CRITERIA:
        if k == number:
            start = time.perf_counter()
            try:
                ok, detail = fn(quick)
            except Exception as exc:  # a broken checker must surface as a failed criterion
                ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
            return CriterionResult(k, title, bool(ok), time.perf_counter() - start, budget, detail)
    raise KeyError(f"no criterion {number}")


def run_all(quick: bool = False, report: Callable[[CriterionResult], None] | None = None) -> list[CriterionResult]:
    out = []
    for k, *_ in CRITERIA:
        r = run(k, quick)
        if report:
            report(r)
        out.append(r)
    return out
