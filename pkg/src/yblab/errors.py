"""Exception hierarchy shared by every yblab module."""

from __future__ import annotations


class YBLabError(Exception):
    """Base class for all errors raised by yblab."""


class NotAssociative(YBLabError):
    def __init__(self, x: int, y: int, z: int):
        super().__init__(f"(x*y)*z != x*(y*z) at x={x}, y={y}, z={z}")
        self.triple = (x, y, z)


class NotUnit(YBLabError):
    def __init__(self, x: int):
        super().__init__(f"identity is not a two-sided unit for element {x}")
        self.element = x


class NotAGroup(YBLabError):
    def __init__(self, x: int):
        super().__init__(f"element {x} has no inverse")
        self.element = x


class InvalidTable(YBLabError):
    pass


class InvalidAction(YBLabError):
    pass


class CocycleViolation(YBLabError):
    def __init__(self, *where: int):
        super().__init__(f"cocycle law fails at {where}")
        self.where = where


class SizeMismatch(YBLabError):
    pass


class OrderOutOfRange(YBLabError):
    pass


class NotBijective(YBLabError):
    pass


class NonCentral(YBLabError):
    pass


class Singular(YBLabError):
    pass


class AntipodeNotInvertible(YBLabError):
    pass


class NotAbelian(YBLabError):
    pass


class QCChecksFailed(YBLabError):
    def __init__(self, report):
        failing = [name for name, v in report.items() if not v.ok]
        super().__init__(f"quasi-commutativity checks failed: {', '.join(failing)}")
        self.report = report


class WordOutOfRange(YBLabError):
    pass


class LevelUnsupported(YBLabError):
    pass


class LevelMissing(YBLabError):
    pass


class CoveringNotInvertible(YBLabError):
    def __init__(self, blocks):
        super().__init__(f"covering map {format_blocks(blocks)} is not invertible")
        self.blocks = blocks


class NotMonotone(YBLabError):
    pass


class InvalidTree(YBLabError):
    pass


class NotComposable(YBLabError):
    pass


class NotTipBijective(YBLabError):
    pass


def format_blocks(blocks) -> str:
    """Render an ordered set partition 1-based, e.g. ``({1},{2})``."""
    inner = ",".join("{" + ",".join(str(i + 1) for i in b) + "}" for b in blocks)
    return f"({inner})"


class InputError(YBLabError):
    """Unreadable or structurally invalid input document."""
