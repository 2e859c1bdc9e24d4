"""Exact rational matrices, stored sparsely as row dictionaries of ``Fraction``.

Tensor products follow the Kronecker convention: basis vector ``e_i ⊗ e_j`` of
``V ⊗ W`` has index ``i * dim W + j``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import SizeMismatch, Singular

Rat = Fraction


def parse_rat(value) -> Fraction:
    """Accept ints, Fractions and strings like ``"3"``, ``"-2/5"``."""
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"cannot read {value!r} as an exact rational")


def rat_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Mat:
    """An ``nrows x ncols`` matrix; ``rows[i]`` maps column index to a nonzero entry."""

    __slots__ = ("nrows", "ncols", "rows", "_cols")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[dict] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self._cols: list[dict] | None = None
        if rows is None:
            self.rows = [dict() for _ in range(nrows)]
        else:
            if len(rows) != nrows:
                raise SizeMismatch("row count disagrees with shape")
            self.rows = [{j: v for j, v in r.items() if v != 0} for r in rows]

    # construction -----------------------------------------------------------

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Mat":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, [{i: Fraction(1)} for i in range(n)])

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "Mat":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        rows = []
        for r in data:
            if len(r) != ncols:
                raise SizeMismatch("ragged matrix")
            rows.append({j: parse_rat(v) for j, v in enumerate(r) if parse_rat(v) != 0})
        return cls(nrows, ncols, rows)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[dict]) -> "Mat":
        """Build from sparse column vectors ``{row: value}``."""
        m = cls(nrows, len(columns))
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v != 0:
                    m.rows[i][j] = Fraction(v)
        return m

    @classmethod
    def permutation(cls, images: Sequence[int]) -> "Mat":
        """Matrix sending basis vector ``e_j`` to ``e_{images[j]}``."""
        n = len(images)
        return cls.from_columns(n, [{images[j]: 1} for j in range(n)])

    # access -----------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i].get(j, Fraction(0))

    def column(self, j: int) -> dict:
        return self.columns()[j]

    def columns(self) -> list[dict]:
        """Column dictionaries, computed once; treat the result as read-only."""
        if self._cols is None:
            cols: list[dict] = [dict() for _ in range(self.ncols)]
            for i, r in enumerate(self.rows):
                for j, v in r.items():
                    cols[j][i] = v
            self._cols = cols
        return self._cols

    def to_dense(self) -> list[list[Fraction]]:
        return [[r.get(j, Fraction(0)) for j in range(self.ncols)] for r in self.rows]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    # arithmetic -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):  # matrices are mutable containers
        raise TypeError("Mat is unhashable")

    def __add__(self, other: "Mat") -> "Mat":
        if self.shape != other.shape:
            raise SizeMismatch(f"{self.shape} + {other.shape}")
        rows = []
        for a, b in zip(self.rows, other.rows):
            r = dict(a)
            for j, v in b.items():
                r[j] = r.get(j, 0) + v
            rows.append(r)
        return Mat(self.nrows, self.ncols, rows)

    def __neg__(self) -> "Mat":
        return Mat(self.nrows, self.ncols, [{j: -v for j, v in r.items()} for r in self.rows])

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (-other)

    def scale(self, c) -> "Mat":
        c = Fraction(c)
        return Mat(self.nrows, self.ncols, [{j: c * v for j, v in r.items()} for r in self.rows])

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise SizeMismatch(f"{self.shape} @ {other.shape}")
        orows = other.rows
        out = []
        for r in self.rows:
            acc: dict = {}
            for k, a in r.items():
                for j, b in orows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            out.append(acc)
        return Mat(self.nrows, other.ncols, out)

    def apply(self, vec: dict) -> dict:
        """Multiply a sparse column vector ``{index: value}``."""
        cols = self.columns()
        out: dict = {}
        for j, v in vec.items():
            for i, a in cols[j].items():
                out[i] = out.get(i, 0) + a * v
        return {i: w for i, w in out.items() if w != 0}

    def kron(self, other: "Mat") -> "Mat":
        p, q = other.nrows, other.ncols
        out = []
        for ra in self.rows:
            for i2 in range(p):
                rb = other.rows[i2]
                out.append({j1 * q + j2: a * b for j1, a in ra.items() for j2, b in rb.items()})
        return Mat(self.nrows * p, self.ncols * q, out)

    def transpose(self) -> "Mat":
        return Mat(self.ncols, self.nrows, [dict(c) for c in self.columns()])

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(r == {i: 1} for i, r in enumerate(self.rows))

    # elimination ------------------------------------------------------------

    def inverse(self) -> "Mat":
        """Gauss-Jordan inverse; raises ``Singular``."""
        n = self.nrows
        if n != self.ncols:
            raise Singular("non-square matrix")
        a = [dict(r) for r in self.rows]
        b = [{i: Fraction(1)} for i in range(n)]
        for col in range(n):
            pivot = next((i for i in range(col, n) if col in a[i]), None)
            if pivot is None:
                raise Singular(f"no pivot in column {col}")
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
            c = a[col][col]
            if c != 1:
                a[col] = {j: v / c for j, v in a[col].items()}
                b[col] = {j: v / c for j, v in b[col].items()}
            for i in range(n):
                if i != col and col in a[i]:
                    f = a[i][col]
                    _axpy(a[i], -f, a[col])
                    _axpy(b[i], -f, b[col])
        return Mat(n, n, b)

    def rank(self) -> int:
        a = [dict(r) for r in self.rows]
        rank = 0
        for col in range(self.ncols):
            pivot = next((i for i in range(rank, len(a)) if col in a[i]), None)
            if pivot is None:
                continue
            a[rank], a[pivot] = a[pivot], a[rank]
            c = a[rank][col]
            for i in range(rank + 1, len(a)):
                if col in a[i]:
                    _axpy(a[i], -a[i][col] / c, a[rank])
            rank += 1
        return rank

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def __repr__(self) -> str:
        return f"Mat({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def _axpy(y: dict, a: Fraction, x: dict) -> None:
    for j, v in x.items():
        w = y.get(j, 0) + a * v
        if w == 0:
            y.pop(j, None)
        else:
            y[j] = w


def kron_all(mats: Iterable[Mat]) -> Mat:
    out = Mat.identity(1)
    for m in mats:
        out = out.kron(m)
    return out


def swap_matrix(d1: int, d2: int) -> Mat:
    """``V ⊗ W -> W ⊗ V``, ``e_i ⊗ e_j -> e_j ⊗ e_i``."""
    return Mat.permutation([j * d1 + i for i in range(d1) for j in range(d2)])


def mat_to_json(m: Mat) -> list[list[str]]:
    return [[rat_str(v) for v in row] for row in m.to_dense()]


def mat_from_json(data: Sequence[Sequence]) -> Mat:
    return Mat.from_dense(data)
