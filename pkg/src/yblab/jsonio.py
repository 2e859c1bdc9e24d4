"""Reading and writing input documents: groups, monoids, algebras, Hopf algebras and truncated complexes."""

from __future__ import annotations

import json
import sys
from pathlib import Path

from . import groups as gp
from .algebras import AlgebraSC, algebra_from_json, algebra_to_json, hopf_from_json
from .carriers import SETS, VECT, MonoidObject
from .cosimplicial import MAP_NAMES, Cosimplicial, map_signature, truncated_from_tables
from .errors import InputError, YBLabError
from .linalg import Mat, mat_to_json


def read_source(arg: str) -> object:
    """``catalog:NAME`` literal, ``-`` for stdin, or a path to a JSON file."""
    if arg.startswith("catalog:"):
        return arg
    try:
        text = sys.stdin.read() if arg == "-" else Path(arg).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {arg}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc


def detect_kind(data) -> str:
    if isinstance(data, str):
        if data.startswith("catalog:"):
            return "group"
        raise InputError(f"unrecognised input {data!r}")
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    if "kind" in data:
        return str(data["kind"])
    if "maps" in data:
        return "complex"
    if "sc" in data:
        return "hopf" if "delta" in data else "algebra"
    if "table" in data:
        return "monoid"
    raise InputError("cannot tell what the input describes")


def parse_input(data):
    """``(kind, object)``; monoids that happen to be groups come back as groups."""
    kind = detect_kind(data)
    try:
        if isinstance(data, str):
            return "group", gp.catalog_group(data.split(":", 1)[1])
        if kind in ("group", "monoid"):
            M = gp.monoid_from_json(data)
            return ("group", gp.validate_group(M)) if gp.is_group(M) else ("monoid", M)
        if kind == "algebra":
            return "algebra", algebra_from_json(data)
        if kind == "hopf":
            return "hopf", hopf_from_json(data)
        if kind == "complex":
            return "complex", complex_from_json(data)
    except YBLabError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"invalid {kind} document: {exc}") from exc
    raise InputError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# monoid objects


def monoid_object_to_json(M: MonoidObject) -> dict:
    n = M.obj
    if not M.carrier.linear:
        return {"order": n, "table": [[M.basis_mul(a, b) for b in range(n)] for a in range(n)], "identity": M.unit_elt}
    mu = M.mu
    A = AlgebraSC(n, mu, Mat.from_columns(n, [M.unit_elt]))
    return algebra_to_json(A)


def monoid_object_from_json(carrier, data: dict) -> MonoidObject:
    if carrier is SETS:
        F = gp.monoid_from_json(data)
        return MonoidObject(SETS, F.size, basis_mul=lambda a, b: F.table[a][b], unit_point=F.identity, name=F.name)
    return algebra_from_json(data).monoid


# ---------------------------------------------------------------------------
# truncated complexes


def _map_to_json(carrier, f):
    return list(f.table) if carrier is SETS else mat_to_json(f)


def complex_to_json(T: Cosimplicial, top: int = 3) -> dict:
    """Levels ``1..top`` and the named structure maps between them."""
    c = T.carrier
    levels = {str(n): monoid_object_to_json(T.level(n)) for n in range(1, top + 1)}
    maps = {}
    for name in MAP_NAMES:
        kind, idx, a, b = map_signature(name)
        if max(a, b) > top or (kind == "s" and T.kind != "full"):
            continue
        maps[name] = _map_to_json(c, T.coface(a, idx) if kind == "d" else T.codegeneracy(a, idx))
    return {"schema": 1, "kind": "complex", "carrier": c.name, "name": T.name, "levels": levels, "maps": maps}


def complex_from_json(data: dict) -> Cosimplicial:
    carrier = {"set": SETS, "vect": VECT}.get(data.get("carrier", "set"))
    if carrier is None:
        raise InputError(f"unknown carrier {data.get('carrier')!r}")
    levels = {int(k): monoid_object_from_json(carrier, v) for k, v in data["levels"].items()}
    maps = {}
    for name, table in data["maps"].items():
        if name not in MAP_NAMES:
            raise InputError(f"unknown structure map {name!r}")
        kind, _, a, b = map_signature(name)
        if a not in levels or b not in levels:
            raise InputError(f"{name} refers to a missing level")
        src, dst = levels[a].obj, levels[b].obj
        maps[name] = carrier.from_json(table, src, dst)
    return truncated_from_tables(carrier, levels, maps, name=data.get("name", ""))


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)

