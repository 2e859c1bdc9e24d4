"""Command-line interface: ``yblab verify | derive | classify | trees | selftest``.

Results go to stdout as JSON (or a plain-text table with ``--format=table``);
diagnostics go to stderr. Exit status: 0 when every selected check passes,
1 when a check fails, 2 for unusable input.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import acceptance
from . import algebras as al
from . import classify as cl
from . import cosimplicial as cs
from . import trees as tr
from . import yb
from .errors import CoveringNotInvertible, InputError, OrderOutOfRange, QCChecksFailed, YBLabError, format_blocks
from .jsonio import dumps, parse_input, read_source
from .verdict import Verdict, all_ok, report_to_json

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
DEFAULT_SUITE = {"group": "yb", "monoid": "cosimp", "hopf": "hopf", "complex": "cosimp"}


class UsageError(YBLabError):
    pass


def _threads(args) -> int:
    if args.threads is not None:
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        return args.threads
    raw = os.environ.get("YBLAB_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise UsageError(f"YBLAB_THREADS must be an integer, got {raw!r}") from exc
    if value < 1:
        raise UsageError("YBLAB_THREADS must be positive")
    return value


def _emit(args, payload: dict, table: str | None = None) -> None:
    if args.format == "table" and table is not None:
        print(table)
    else:
        print(dumps(payload))


def _table_from_checks(title: str, checks: dict[str, Verdict]) -> str:
    lines = [title]
    for name, v in checks.items():
        mark = "ok  " if v.ok else "FAIL"
        extra = f"  counterexample: {v.to_json().get('counterexample')}" if not v.ok else ""
        lines.append(f"  {mark} {name}{extra}")
    return "\n".join(lines)


def _load(path: str):
    return parse_input(read_source(path))


# ---------------------------------------------------------------------------
# complexes and operators for each input kind


def _complex_for(kind: str, obj):
    if kind in ("group", "monoid"):
        return cs.cobar_from_group(obj)
    if kind == "hopf":
        return cs.cosimp_from_hopf(obj)
    if kind == "complex":
        return obj
    raise UsageError(f"no cosimplicial monoid is attached to {kind} input")


def _qc_report(build) -> dict[str, Verdict]:
    try:
        qc = build()
    except QCChecksFailed as exc:
        return dict(exc.report)
    return dict(qc.report) if qc.report else yb.qc_suite(qc.monoid, qc.R)


def _yb_checks(kind: str, obj) -> dict[str, Verdict]:
    if kind == "group":
        return _qc_report(lambda: yb.yb_from_group(obj))
    if kind == "hopf":
        return _qc_report(lambda: yb.yb_from_hopf(obj))
    if kind == "complex":
        R = cs.derive_yb(obj)
        return yb.qc_suite(obj.level(1), R)
    raise UsageError(f"the yb suite needs a group, a Hopf algebra or a complex, not {kind} input")


def _cosimp_checks(kind: str, obj) -> dict[str, Verdict]:
    T = _complex_for(kind, obj)
    out = cs.check_identities(T)
    out["covering"] = cs.check_covering_condition(T)
    return out


def _hopf_checks(kind: str, obj) -> dict[str, Verdict]:
    if kind == "group":
        return al.check_hopf(al.group_algebra(obj))
    if kind == "hopf":
        return al.check_hopf(obj)
    raise UsageError(f"the hopf suite needs a Hopf algebra or a group, not {kind} input")


SUITES = {"yb": _yb_checks, "cosimp": _cosimp_checks, "hopf": _hopf_checks}


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    kind, obj = _load(args.input)
    suite = args.suite or DEFAULT_SUITE.get(kind)
    if suite is None:
        raise UsageError(f"choose --suite for {kind} input")
    checks = SUITES[suite](kind, obj)
    ok = all_ok(checks)
    payload = {"schema": 1, "command": "verify", "suite": suite, "kind": kind, "ok": ok, "checks": report_to_json(checks)}
    _emit(args, payload, _table_from_checks(f"{suite} suite on {kind} input: {'pass' if ok else 'FAIL'}", checks))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_derive(args) -> int:
    kind, obj = _load(args.input)
    T = _complex_for(kind, obj)
    try:
        R = cs.derive_yb(T)
    except CoveringNotInvertible as exc:
        covering = format_blocks(exc.blocks)
        print(f"error: {exc}", file=sys.stderr)
        _emit(args, {"schema": 1, "command": "derive", "ok": False, "error": "CoveringNotInvertible", "covering": covering}, f"covering {covering} is not invertible")
        return EXIT_FAIL
    checks = dict(cs.check_identities(T))
    checks.update(yb.qc_suite(T.level(1), R))
    ok = all_ok(checks)
    payload = {"schema": 1, "command": "derive", "ok": ok, "carrier": T.carrier.name, "R": R.to_json(), "checks": report_to_json(checks)}
    table = _table_from_checks(f"derived operator on {T.size(1)}-element level: {'pass' if ok else 'FAIL'}", checks)
    _emit(args, payload, table)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classify(args) -> int:
    kind, G = _load(args.input)
    if kind != "group":
        raise UsageError("classify needs a group")
    report = cl.classify_group(G, nearly=args.nearly, threads=_threads(args))
    payload = report.to_json()
    ok = report.ok
    table = cl.render_table(report)
    if args.oracle or args.oracle_long:
        oracle = cl.oracle_structures(G, allow_long=args.oracle_long)
        if args.nearly:
            n2 = G.size * G.size
            oracle = {t for t in oracle if all(t[t[k]] == k for k in range(n2))}
        diff = cl.oracle_diff(report, oracle)
        payload["oracle"] = diff
        ok = ok and diff["equal"]
        table += f"\n  oracle agrees: {diff['equal']}"
    _emit(args, payload, table)
    return EXIT_OK if ok else EXIT_FAIL


def _pair(doc: dict, a: str, b: str):
    if not isinstance(doc, dict) or a not in doc or b not in doc:
        raise InputError(f"expected a JSON object with keys {a!r} and {b!r}")
    return doc[a], doc[b]


def cmd_trees(args) -> int:
    doc = read_source(args.input)
    try:
        if args.op == "compose":
            f, g = (tr.TreeMorphism.from_json(x) for x in _pair(doc, "f", "g"))
            out = {"result": tr.compose(g, f).to_json()}
        elif args.op == "factor":
            f = tr.TreeMorphism.from_json(doc)
            layers = tr.factor_into_generators(f)
            out = {"layers": tr.layers_to_json(layers), "recomposes": tr.recompose_layers(layers, f.src) == f}
        elif args.op == "vines-compose":
            f, g = (tr.VinesMorphism.from_json(x) for x in _pair(doc, "f", "g"))
            out = {"result": tr.vines_compose(g, f).to_json()}
        else:
            a, b = (tr.VinesMorphism.from_json(x) for x in _pair(doc, "a", "b"))
            out = {"equal": tr.vines_equal(a, b)}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid trees document: {exc}") from exc
    out.update({"schema": 1, "command": f"trees {args.op}"})
    _emit(args, out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    def report(r):
        print(r.line(), file=sys.stderr, flush=True)

    results = acceptance.run_all(quick=args.quick, report=report)
    ok = all(r.passed for r in results)
    payload = {"schema": 1, "command": "selftest", "quick": args.quick, "ok": ok, "criteria": [r.to_json() for r in results]}
    _emit(args, payload, "\n".join(r.line() for r in results))
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker threads (default: YBLAB_THREADS or 1)")
    common.add_argument("--format", choices=("json", "table"), default="json")
    p = argparse.ArgumentParser(prog="yblab", description="Yang-Baxter operators from cosimplicial monoids.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a check suite on an input")
    v.add_argument("input", help="catalog:NAME, a JSON file, or - for stdin")
    v.add_argument("--suite", choices=tuple(SUITES))
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("derive", parents=[common], help="derive the Yang-Baxter operator of a complex")
    d.add_argument("input")
    d.set_defaults(func=cmd_derive)

    c = sub.add_parser("classify", parents=[common], help="quasi-commutative structures on a group")
    c.add_argument("input")
    c.add_argument("--nearly", action="store_true", help="only nearly commutative structures")
    c.add_argument("--oracle", action="store_true", help="compare with the brute-force search (order <= 4)")
    c.add_argument("--oracle-long", action="store_true", help="allow the brute-force search up to order 6")
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("trees", parents=[common], help="tree and vines operations")
    t.add_argument("op", choices=("compose", "factor", "vines-compose", "vines-equal"))
    t.add_argument("input")
    t.set_defaults(func=cmd_trees)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance criteria")
    s.add_argument("--quick", action="store_true", help="restrict group families to order <= 6")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads(args)
        return args.func(args)
    except (InputError, UsageError, OrderOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except YBLabError as exc:
        # the input parsed but describes an invalid structure
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
