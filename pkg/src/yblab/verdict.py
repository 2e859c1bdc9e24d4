"""Check results that carry their first counterexample."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping


@dataclass(frozen=True)
class Verdict:
    name: str
    ok: bool
    counterexample: Any = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "ok": self.ok}
        if self.counterexample is not None:
            out["counterexample"] = _jsonable(self.counterexample)
        if self.detail:
            out["detail"] = self.detail
        return out


def passed(name: str, detail: str = "") -> Verdict:
    return Verdict(name, True, None, detail)


def failed(name: str, counterexample: Any = None, detail: str = "") -> Verdict:
    return Verdict(name, False, counterexample, detail)


def all_ok(report: Mapping[str, Verdict]) -> bool:
    return all(v.ok for v in report.values())


def report_to_json(report: Mapping[str, Verdict]) -> dict:
    return {k: v.to_json() for k, v in report.items()}


def _jsonable(x: Any) -> Any:
    from fractions import Fraction

    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def first_failure(current: Verdict | None, candidate: Verdict | None) -> Verdict | None:
    """Keep the earliest failure; failing verdicts are falsy, so ``or`` must not be used."""
    return current if current is not None else candidate


def settle(bad: Verdict | None, name: str, detail: str = "") -> Verdict:
    return bad if bad is not None else passed(name, detail)
