"""Matrix tuples under simultaneous conjugation."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .fields import FieldSpec
from .matrix import Matrix, invert, solve_linear

__all__ = ["MatrixTuple"]


@dataclass(frozen=True)
class MatrixTuple:
    entries: tuple[Matrix, ...]
    det_constraint: str | None = None
    field_spec: FieldSpec | None = None
    dim: int | None = None

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if entries:
            f, n = entries[0].field, entries[0].rows
            for m in entries:
                if m.field != f:
                    raise ValueError("tuple entries over different fields")
                if m.shape != (n, n):
                    raise ValueError("tuple entries must be square of equal size")
            object.__setattr__(self, "field_spec", f)
            object.__setattr__(self, "dim", n)
        elif self.field_spec is None or self.dim is None:
            raise ValueError("empty tuple needs explicit field_spec and dim")
        if self.det_constraint not in (None, "SL"):
            raise ValueError(f"unknown det constraint {self.det_constraint!r}")

    @classmethod
    def of(cls, field: FieldSpec, *mats: Sequence[Sequence], det_constraint: str | None = None) -> "MatrixTuple":
        return cls(tuple(Matrix.from_rows(field, m) for m in mats), det_constraint)

    @property
    def field(self) -> FieldSpec:
        return self.field_spec

    @property
    def n(self) -> int:
        return self.dim

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[Matrix]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Matrix:
        return self.entries[i]

    def conjugate(self, g: Matrix, g_inv: Matrix | None = None) -> "MatrixTuple":
        """g . t = (g t_i g^-1)."""
        if g_inv is None:
            g_inv = invert(g)
            if g_inv is None:
                raise ValueError("conjugating by a singular matrix")
        return MatrixTuple(tuple(g @ m @ g_inv for m in self.entries), self.det_constraint, self.field_spec, self.dim)

    def concat(self, other: "MatrixTuple") -> "MatrixTuple":
        if other.field != self.field or other.n != self.n:
            raise ValueError("cannot concatenate tuples of different shape")
        return MatrixTuple(self.entries + other.entries, self.det_constraint or other.det_constraint, self.field_spec, self.dim)

    def change_field(self, target: FieldSpec) -> "MatrixTuple":
        return MatrixTuple(tuple(m.change_field(target) for m in self.entries), self.det_constraint, target, self.dim)

    def restrict(self, basis: Matrix) -> "MatrixTuple":
        """Action on the invariant subspace spanned by the columns of ``basis``."""
        mats = []
        for m in self.entries:
            sol = solve_linear(basis, m @ basis)
            if sol is None:
                raise ValueError("subspace is not invariant")
            mats.append(sol.particular)
        return MatrixTuple(tuple(mats), None, self.field_spec, basis.cols)

    def is_invariant(self, basis: Matrix) -> bool:
        return all(solve_linear(basis, m @ basis) is not None for m in self.entries)

    def __repr__(self):
        return f"MatrixTuple({', '.join(repr(m) for m in self.entries)})"
