"""Quasi-commutative structures on small groups, enumerated through bijective 1-cocycles.

Every structure is verified independently after construction. A separate brute
force search over Yang-Baxter tables (``oracle_structures``) shares no
constructor code with the cocycle route and serves as a cross-check.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import groups as gp
from .cosimplicial import cosimp_from_cocycle, derive_yb
from .errors import OrderOutOfRange, YBLabError
from .verdict import Verdict, failed, passed, report_to_json
from .yb import SetYB, cocycle_from_yb, qc_suite, yb_from_cocycle

MAX_ORDER = 12
ORACLE_MAX = 4
ORACLE_MAX_LONG = 6


@dataclass(frozen=True)
class Source:
    K: str
    action: int
    cocycle: tuple[int, ...]
    phi: gp.OneCocycle = field(compare=False, repr=False)

    def to_json(self) -> dict:
        return {"K": self.K, "action": self.action, "cocycle": list(self.cocycle)}


@dataclass
class Entry:
    G: gp.FiniteGroup
    R: SetYB
    sources: list[Source]
    nearly_commutative: bool
    verdicts: dict[str, Verdict] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts.values())

    def to_json(self) -> dict:
        return {
            "R": list(self.R.table),
            "nearly_commutative": self.nearly_commutative,
            "sources": [s.to_json() for s in self.sources],
            "verdicts": report_to_json(self.verdicts),
        }


@dataclass
class ClassificationReport:
    group: str
    order: int
    nearly: bool
    entries: list[Entry]
    triples: int
    aut_orbits: list[list[int]]

    @property
    def tables(self) -> set[tuple[int, ...]]:
        return {e.R.table for e in self.entries}

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "group": self.group,
            "order": self.order,
            "nearly": self.nearly,
            "stats": {"triples": self.triples, "structures": len(self.entries), "aut_orbits": len(self.aut_orbits)},
            "entries": [e.to_json() for e in self.entries],
            "aut_orbits": self.aut_orbits,
        }


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("YBLAB_THREADS", "1")))
    except ValueError:
        return 1


def _branch(G: gp.FiniteGroup, K: gp.FiniteGroup, index: int, action: gp.RightAction) -> list[tuple[tuple, Source]]:
    out = []
    for phi in gp.enumerate_bijective_cocycles(action):
        R = yb_from_cocycle(phi).R
        out.append((R.table, Source(K.name, index, phi.table, phi)))
    return out


def verify_entry(entry: Entry) -> dict[str, Verdict]:
    """QC suite, agreement with the derived operator of the cocycle complex, and the cocycle round trip."""
    G, R = entry.G, entry.R
    out = dict(qc_suite(G, R, nearly=entry.nearly_commutative))
    phi = entry.sources[0].phi if entry.sources else None
    if phi is None:
        out["derived_matches"] = failed("derived_matches", detail="no cocycle recorded")
    else:
        try:
            D = derive_yb(cosimp_from_cocycle(phi))
            out["derived_matches"] = (
                passed("derived_matches") if D.table == R.table else failed("derived_matches", _first_diff(D, R))
            )
        except YBLabError as exc:
            out["derived_matches"] = failed("derived_matches", detail=str(exc))
    try:
        _, _, psi = cocycle_from_yb(G, R)
        back = yb_from_cocycle(psi).R
        out["round_trip"] = passed("round_trip") if back.table == R.table else failed("round_trip", _first_diff(back, R))
    except YBLabError as exc:
        out["round_trip"] = failed("round_trip", detail=type(exc).__name__)
    return out


def _first_diff(A: SetYB, B: SetYB):
    for k, (a, b) in enumerate(zip(A.table, B.table)):
        if a != b:
            return list(divmod(k, A.n))
    return None


def _aut_orbits(G: gp.FiniteGroup, tables: list[tuple[int, ...]]) -> list[list[int]]:
    """Entries grouped by ``R -> (a x a) R (a^-1 x a^-1)`` for automorphisms ``a`` of G."""
    n = G.size
    index = {t: k for k, t in enumerate(tables)}
    auts = gp.automorphisms(G)
    seen: set[int] = set()
    orbits = []
    for k, t in enumerate(tables):
        if k in seen:
            continue
        orbit = set()
        for a in auts:
            ainv = [0] * n
            for x, y in enumerate(a):
                ainv[y] = x
            moved = [0] * (n * n)
            for x in range(n):
                for y in range(n):
                    p, q = divmod(t[ainv[x] * n + ainv[y]], n)
                    moved[x * n + y] = a[p] * n + a[q]
            j = index.get(tuple(moved))
            if j is not None:
                orbit.add(j)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def classify_group(G: gp.FiniteGroup, *, nearly: bool = False, threads: int | None = None) -> ClassificationReport:
    """All quasi-commutative structures on ``G`` (nearly commutative ones if ``nearly``).

    Branches over ``(K, action)`` run on a thread pool; results are merged and
    sorted by R table, so the report does not depend on the thread count.
    """
    if not 1 <= G.size <= MAX_ORDER:
        raise OrderOutOfRange(f"order {G.size} is outside 1..{MAX_ORDER}")
    jobs = []
    for K in gp.catalog(G.size):
        if nearly and not K.is_abelian:
            continue
        for index, action in enumerate(gp.enumerate_actions(G, K)):
            jobs.append((K, index, action))
    threads = threads or default_threads()
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda j: _branch(G, *j), jobs))
    else:
        results = [_branch(G, *j) for j in jobs]
    merged: dict[tuple[int, ...], list[Source]] = {}
    triples = 0
    for branch in results:
        for table, src in branch:
            merged.setdefault(table, []).append(src)
            triples += 1
    entries = []
    for table in sorted(merged):
        R = SetYB(G.size, table)
        nc = all(R.table[R.table[k]] == k for k in range(len(table)))
        sources = sorted(merged[table], key=lambda s: (s.K, s.action, s.cocycle))
        e = Entry(G, R, sources, nc)
        e.verdicts = verify_entry(e)
        if nearly and not nc:
            e.verdicts["nearly"] = failed("nearly", detail="R^2 is not the identity")
        entries.append(e)
    return ClassificationReport(
        G.name, G.size, nearly, entries, triples, _aut_orbits(G, [e.R.table for e in entries])
    )


def classify_nearly_commutative(G: gp.FiniteGroup, *, threads: int | None = None) -> ClassificationReport:
    return classify_group(G, nearly=True, threads=threads)


# ---------------------------------------------------------------------------
# independent brute force


def oracle_structures(G: gp.FiniteGroup, *, allow_long: bool = False) -> set[tuple[int, ...]]:
    """Every bijection ``R`` of ``G x G`` satisfying the quasi-commutative axioms, by backtracking.

    Unit cells are fixed by the unit axioms and each remaining cell ``(x, y)``
    ranges over pairs ``(a, b)`` with ``ab = xy``. The two multiplicativity
    axioms are checked on every triple as soon as the cells it reads are
    assigned; the braid relation is checked on complete tables.
    """
    limit = ORACLE_MAX_LONG if allow_long else ORACLE_MAX
    n = G.size
    if n > limit:
        raise OrderOutOfRange(f"brute force is limited to order {limit}")
    t, e = G.table, G.identity
    R: list = [None] * (n * n)
    for x in range(n):
        R[e * n + x] = (x, e)
        R[x * n + e] = (e, x)
    free = [(x, y) for x in range(n) for y in range(n) if x != e and y != e]
    options = {
        (x, y): [(a, b) for a in range(n) for b in range(n) if t[a][b] == t[x][y]] for (x, y) in free
    }
    used = {R[k] for k in range(n * n) if R[k] is not None}
    triples = [(x, y, z) for x in range(n) for y in range(n) for z in range(n)]

    def consistent() -> bool:
        for x, y, z in triples:
            # R(xy, z) = (b, c w) with (a, w) = R(y, z), (b, c) = R(x, a)
            lhs = R[t[x][y] * n + z]
            yz = R[y * n + z]
            if lhs is not None and yz is not None:
                a, w = yz
                xa = R[x * n + a]
                if xa is not None and lhs != (xa[0], t[xa[1]][w]):
                    return False
            # R(x, yz) = (a c, d) with (a, b) = R(x, y), (c, d) = R(b, z)
            lhs = R[x * n + t[y][z]]
            xy = R[x * n + y]
            if lhs is not None and xy is not None:
                a, b = xy
                bz = R[b * n + z]
                if bz is not None and lhs != (t[a][bz[0]], bz[1]):
                    return False
        return True

    def braid_ok() -> bool:
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    a, b = R[x * n + y]
                    c, d = R[b * n + z]
                    f, g = R[a * n + c]
                    lhs = (f, g, d)
                    p, q = R[y * n + z]
                    r, s = R[x * n + p]
                    u, v = R[s * n + q]
                    if lhs != (r, u, v):
                        return False
        return True

    found: set[tuple[int, ...]] = set()

    def search(k: int):
        if k == len(free):
            if braid_ok():
                found.add(tuple(a * n + b for a, b in R))
            return
        cell = free[k]
        for pair in options[cell]:
            if pair in used:
                continue
            R[cell[0] * n + cell[1]] = pair
            used.add(pair)
            if consistent():
                search(k + 1)
            used.discard(pair)
            R[cell[0] * n + cell[1]] = None

    if consistent():
        search(0)
    return found


def oracle_diff(report: ClassificationReport, oracle: set[tuple[int, ...]]) -> dict:
    mine = report.tables
    return {
        "only_classification": sorted(list(t) for t in mine - oracle),
        "only_oracle": sorted(list(t) for t in oracle - mine),
        "equal": mine == oracle,
    }


def render_table(report: ClassificationReport) -> str:
    lines = [f"group {report.group} (order {report.order}){' nearly commutative' if report.nearly else ''}"]
    lines.append(f"  cocycle triples: {report.triples}  structures: {len(report.entries)}  Aut-orbits: {len(report.aut_orbits)}")
    for k, e in enumerate(report.entries):
        ks = sorted({s.K for s in e.sources})
        lines.append(
            f"  [{k}] K in {ks} via {len(e.sources)} cocycle(s)  R^2=I: {e.nearly_commutative}  verified: {e.ok}"
        )
    return "\n".join(lines)
