"""Dense exact matrices over a :class:`FieldSpec`.

Matrices are immutable; entries are stored as raw field values (see
``FieldSpec``) in a tuple of row tuples.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .fields import FieldElement, FieldSpec, embed_extension

__all__ = [
    "Matrix",
    "LinearSolution",
    "RREF",
    "rref",
    "solve_linear",
    "invert",
    "nullspace",
    "column_space",
    "inconsistency_witness",
]


class Matrix:
    __slots__ = ("field", "rows", "cols", "data", "_hash")

    def __init__(self, field: FieldSpec, data: Sequence[Sequence], rows: int | None = None, cols: int | None = None):
        self.field = field
        self.data = tuple(tuple(r) for r in data)
        self.rows = len(self.data) if rows is None else rows
        self.cols = (len(self.data[0]) if self.data else 0) if cols is None else cols
        if any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged matrix rows")
        self._hash = None

    # construction ------------------------------------------------------------
    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Iterable[Any]]) -> "Matrix":
        conv = field.convert
        data = [[conv(v) for v in r] for r in rows]
        cols = len(data[0]) if data else 0
        return cls(field, data, len(data), cols)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def diag(cls, field: FieldSpec, values: Sequence[Any]) -> "Matrix":
        n = len(values)
        z = field.zero
        vals = [field.convert(v) for v in values]
        return cls(field, [[vals[i] if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def column(cls, field: FieldSpec, values: Sequence[Any]) -> "Matrix":
        return cls.from_rows(field, [[v] for v in values])

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence["Matrix"], rows: int | None = None) -> "Matrix":
        if not columns:
            return cls(field, [[] for _ in range(rows or 0)], rows or 0, 0)
        n = columns[0].rows
        data = [[c.data[i][j] for c in columns for j in range(c.cols)] for i in range(n)]
        return cls(field, data, n, sum(c.cols for c in columns))

    @classmethod
    def random(cls, field: FieldSpec, rows: int, cols: int | None = None, rng: random.Random | None = None, height: int = 5) -> "Matrix":
        rng = rng or random.Random(0)
        cols = rows if cols is None else cols
        return cls(field, [[field.random(rng, height) for _ in range(cols)] for _ in range(rows)], rows, cols)

    @classmethod
    def random_invertible(cls, field: FieldSpec, n: int, rng: random.Random, height: int = 3) -> "Matrix":
        while True:
            m = cls.random(field, n, n, rng, height)
            if m.rank() == n:
                return m

    # access -----------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.data[i][j])

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> "Matrix":
        return Matrix(self.field, [[r[j]] for r in self.data], self.rows, 1)

    def columns(self) -> list["Matrix"]:
        return [self.col(j) for j in range(self.cols)]

    def flatten(self) -> list:
        return [v for r in self.data for v in r]

    @classmethod
    def unflatten(cls, field: FieldSpec, values: Sequence, rows: int, cols: int) -> "Matrix":
        return cls(field, [list(values[i * cols:(i + 1) * cols]) for i in range(rows)], rows, cols)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [[self.data[i][j] for j in cols] for i in rows], len(rows), len(cols))

    def hstack(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, [a + b for a, b in zip(self.data, other.data)], self.rows, self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        return Matrix(self.field, self.data + other.data, self.rows + other.rows, self.cols)

    # comparisons -------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.kind, self.field.p, self.field.k, self.data))
        return self._hash

    def is_zero(self) -> bool:
        return not any(v for r in self.data for v in r)

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.field, self.rows)

    def is_diagonal(self) -> bool:
        return all(not self.data[i][j] for i in range(self.rows) for j in range(self.cols) if i != j)

    # arithmetic ---------------------------------------------------------------
    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        add = self.field.add
        return Matrix(self.field, [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        sub = self.field.sub
        return Matrix(self.field, [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.rows, self.cols)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.data], self.rows, self.cols)

    def scale(self, c) -> "Matrix":
        c = c.value if isinstance(c, FieldElement) else self.field.convert(c)
        mul = self.field.mul
        return Matrix(self.field, [[mul(c, a) for a in r] for r in self.data], self.rows, self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        cols = list(zip(*other.data)) if other.rows else [() for _ in range(other.cols)]
        if F.kind == "Q" or F.k == 1:
            p = F.p
            out = []
            for r in self.data:
                if F.kind == "Q":
                    out.append([sum((a * b for a, b in zip(r, c) if a and b), F.zero) for c in cols])
                else:
                    out.append([sum(a * b for a, b in zip(r, c)) % p for c in cols])
            return Matrix(F, out, self.rows, other.cols)
        add, mul = F.add, F.mul
        out = []
        for r in self.data:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = add(acc, mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(F, out, self.rows, other.cols)

    __mul__ = __matmul__

    def __pow__(self, e: int) -> "Matrix":
        if not self.is_square:
            raise ValueError("power of non-square matrix")
        if e < 0:
            inv = invert(self)
            if inv is None:
                raise ZeroDivisionError("singular matrix")
            return inv ** (-e)
        result = Matrix.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.data)) if self.rows else [], self.cols, self.rows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def trace(self):
        acc = self.field.zero
        for i in range(min(self.rows, self.cols)):
            acc = self.field.add(acc, self.data[i][i])
        return acc

    def det(self):
        if not self.is_square:
            raise ValueError("determinant of non-square matrix")
        F = self.field
        m = [list(r) for r in self.data]
        n = self.rows
        det = F.one
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return F.zero
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = F.neg(det)
            det = F.mul(det, m[c][c])
            inv = F.inv(m[c][c])
            for r in range(c + 1, n):
                if m[r][c]:
                    f = F.mul(m[r][c], inv)
                    m[r] = [F.sub(a, F.mul(f, b)) for a, b in zip(m[r], m[c])]
        return det

    def rank(self) -> int:
        return rref(self).rank

    def inverse(self) -> "Matrix | None":
        return invert(self)

    def change_field(self, target: FieldSpec) -> "Matrix":
        if target == self.field:
            return self
        return Matrix(target, [[embed_extension(FieldElement(self.field, v), target).value for v in r] for r in self.data], self.rows, self.cols)

    # display ------------------------------------------------------------------
    def to_strings(self) -> list[list[str]]:
        fmt = self.field.format
        return [[fmt(v) for v in r] for r in self.data]

    def __repr__(self):
        body = "; ".join(",".join(r) for r in self.to_strings())
        return f"Matrix[{self.field!r}]({body})"


@dataclass(frozen=True)
class RREF:
    matrix: Matrix
    pivots: tuple[int, ...]
    rank: int

    def __iter__(self):
        return iter((self.matrix, list(self.pivots), self.rank))


def _rref_rows(F: FieldSpec, m: list[list], ncols: int, track: list[list] | None = None) -> list[int]:
    """In-place Gauss-Jordan on ``m`` (and the same row ops on ``track``)."""
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            if track is not None:
                track[r], track[piv] = track[piv], track[r]
        inv = F.inv(m[r][c])
        if m[r][c] != F.one:
            m[r] = [F.mul(inv, v) for v in m[r]]
            if track is not None:
                track[r] = [F.mul(inv, v) for v in track[r]]
        pr = m[r]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(a, F.mul(f, b)) if b else a for a, b in zip(m[i], pr)]
                if track is not None:
                    track[i] = [F.sub(a, F.mul(f, b)) if b else a for a, b in zip(track[i], track[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: Matrix) -> RREF:
    rows = [list(r) for r in m.data]
    pivots = _rref_rows(m.field, rows, m.cols)
    return RREF(Matrix(m.field, rows, m.rows, m.cols), tuple(pivots), len(pivots))


def nullspace(m: Matrix) -> list[Matrix]:
    """Basis of {v : m v = 0} as column matrices (deterministic: one per free column)."""
    F = m.field
    rows = [list(r) for r in m.data]
    pivots = _rref_rows(F, rows, m.cols)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [F.zero] * m.cols
        v[f] = F.one
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(rows[i][f])
        basis.append(Matrix(F, [[x] for x in v], m.cols, 1))
    return basis


def column_space(m: Matrix) -> Matrix:
    """A basis of the column space, as the columns of an n x rank matrix in RREF-transposed form."""
    r = rref(m.transpose())
    return Matrix(m.field, [list(row) for row in r.matrix.data[: r.rank]], r.rank, m.rows).transpose() if r.rank else Matrix(m.field, [[] for _ in range(m.rows)], m.rows, 0)


@dataclass(frozen=True)
class LinearSolution:
    """Affine solution set ``particular + span(kernel)``."""

    particular: Matrix
    kernel: tuple[Matrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.kernel)


def solve_linear(a: Matrix, b: Matrix) -> LinearSolution | None:
    """All X with a X = b, or None when the system is inconsistent."""
    if a.rows != b.rows:
        raise ValueError("a and b must have the same number of rows")
    if a.field != b.field:
        raise ValueError("field mismatch")
    F = a.field
    aug = [list(ra) + list(rb) for ra, rb in zip(a.data, b.data)]
    pivots = _rref_rows(F, aug, a.cols)
    rank = len(pivots)
    for i in range(rank, a.rows):
        if any(aug[i][a.cols:]):
            return None
    part = [[F.zero] * b.cols for _ in range(a.cols)]
    for i, pc in enumerate(pivots):
        part[pc] = list(aug[i][a.cols:])
    return LinearSolution(Matrix(F, part, a.cols, b.cols), tuple(nullspace(a)))


def inconsistency_witness(a: Matrix, b: Matrix) -> Matrix | None:
    """A row vector y with y a = 0 and y b != 0, when a x = b has no solution."""
    F = a.field
    m = [list(r) for r in a.data]
    track = [[F.one if i == j else F.zero for j in range(a.rows)] for i in range(a.rows)]
    pivots = _rref_rows(F, m, a.cols, track)
    for i in range(len(pivots), a.rows):
        y = Matrix(F, [track[i]], 1, a.rows)
        if not (y @ b).is_zero():
            return y
    return None


def invert(m: Matrix) -> Matrix | None:
    """Exact inverse, or None if singular."""
    if not m.is_square:
        raise ValueError("inverse of non-square matrix")
    F, n = m.field, m.rows
    rows = [list(r) for r in m.data]
    track = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    pivots = _rref_rows(F, rows, n, track)
    if len(pivots) < n:
        return None
    return Matrix(F, track, n, n)
