"""Cocharacters of GL_n, weight gradings of actions, and limits as t -> 0.

A cocharacter is stored as a base change ``g`` and integer weights ``w`` and
stands for ``t -> g diag(t^w_1, ..., t^w_n) g^-1``.  Limits are never taken
numerically: a point is split into its weight components and the limit exists
exactly when no negative weight carries a nonzero component.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Union

from .fields import FieldSpec
from .matrix import Matrix, invert
from .tuples import MatrixTuple

__all__ = [
    "Cocharacter",
    "ActionInstance",
    "WeightGrading",
    "LimitOutcome",
    "grade",
    "limit",
    "matrix_grading",
    "p_lambda_contains",
    "l_lambda_contains",
    "ru_p_lambda_contains",
    "act_on_cocharacter",
    "check_conjfixed",
    "check_conjlim",
    "PreconditionError",
]


class PreconditionError(ValueError):
    """An operation was called outside its documented preconditions."""


@dataclass(frozen=True, eq=False)
class Cocharacter:
    base_change: Matrix
    weights: tuple[int, ...]
    _inv: Matrix = dc_field(default=None, repr=False)

    def __post_init__(self):
        g, w = self.base_change, tuple(int(x) for x in self.weights)
        if not g.is_square or g.rows != len(w):
            raise ValueError("base change must be n x n with n weights")
        order = sorted(range(len(w)), key=lambda i: -w[i])
        if order != list(range(len(w))):
            g = g.submatrix(range(g.rows), order)
            w = tuple(w[i] for i in order)
        inv = invert(g)
        if inv is None:
            raise ValueError("base change is singular")
        object.__setattr__(self, "base_change", g)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "_inv", inv)

    @classmethod
    def diagonal(cls, field: FieldSpec, weights) -> "Cocharacter":
        return cls(Matrix.identity(field, len(weights)), tuple(weights))

    @property
    def field(self) -> FieldSpec:
        return self.base_change.field

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def inverse_base(self) -> Matrix:
        return self._inv

    def is_trivial(self) -> bool:
        return all(x == 0 for x in self.weights)

    def eigenspaces(self) -> dict[int, Matrix]:
        """Weight -> matrix whose columns span that eigenspace."""
        out: dict[int, list[int]] = {}
        for i, d in enumerate(self.weights):
            out.setdefault(d, []).append(i)
        g = self.base_change
        return {d: g.submatrix(range(g.rows), cols) for d, cols in out.items()}

    def projectors(self) -> dict[int, Matrix]:
        """Weight -> projector onto its eigenspace along the others."""
        g, gi, n = self.base_change, self._inv, self.n
        F = self.field
        out = {}
        for d in sorted(set(self.weights)):
            mask = Matrix(F, [[F.one if (i == j and self.weights[i] == d) else F.zero for j in range(n)] for i in range(n)], n, n)
            out[d] = g @ mask @ gi
        return out

    def evaluate(self, t) -> Matrix:
        F = self.field
        tv = F.convert(t)
        if not tv:
            raise ValueError("cocharacters are only defined on nonzero t")
        return self.base_change @ Matrix.diag(F, [F.pow(tv, d) for d in self.weights]) @ self._inv

    def inverse(self) -> "Cocharacter":
        return Cocharacter(self.base_change, tuple(-d for d in self.weights))

    def scaled(self, c: int) -> "Cocharacter":
        return Cocharacter(self.base_change, tuple(c * d for d in self.weights))

    def __eq__(self, other):
        if not isinstance(other, Cocharacter):
            return NotImplemented
        if self.field != other.field or self.weights != other.weights:
            return False
        # same maps iff each weight eigenspace coincides
        mine, theirs = self.eigenspaces(), other.eigenspaces()
        for d, basis in mine.items():
            both = basis.hstack(theirs[d])
            if both.rank() != basis.cols:
                return False
        return True

    def __hash__(self):
        return hash((self.field.kind, self.field.p, self.field.k, self.weights))

    def __repr__(self):
        return f"Cocharacter(weights={self.weights}, base_change={self.base_change!r})"


Point = Union[Matrix, MatrixTuple, tuple]


@dataclass(frozen=True)
class ActionInstance:
    """A point together with how GL_n (or SL_n) acts on it.

    ``kind`` is ``"linear"`` (column vector), ``"conjugation"`` (matrix tuple)
    or ``"product"`` (a pair of instances acted on diagonally).
    """

    kind: str
    point: Point
    ambient_dim: int
    det_constraint: str | None = None

    def __post_init__(self):
        if self.kind == "linear":
            if not isinstance(self.point, Matrix) or self.point.shape != (self.ambient_dim, 1):
                raise ValueError("linear action needs an n x 1 column vector")
        elif self.kind == "conjugation":
            if not isinstance(self.point, MatrixTuple) or self.point.n != self.ambient_dim:
                raise ValueError("conjugation action needs a matrix tuple of size n")
        elif self.kind == "product":
            a, b = self.point
            if not (isinstance(a, ActionInstance) and isinstance(b, ActionInstance)):
                raise ValueError("product action needs two ActionInstances")
            if a.ambient_dim != self.ambient_dim or b.ambient_dim != self.ambient_dim:
                raise ValueError("product factors must share the acting group")
        else:
            raise ValueError(f"unknown action kind {self.kind!r}")

    @classmethod
    def conjugation(cls, t: MatrixTuple) -> "ActionInstance":
        return cls("conjugation", t, t.n, t.det_constraint)

    @classmethod
    def linear(cls, v: Matrix, det_constraint: str | None = None) -> "ActionInstance":
        return cls("linear", v, v.rows, det_constraint)

    @classmethod
    def product(cls, a: "ActionInstance", b: "ActionInstance") -> "ActionInstance":
        return cls("product", (a, b), a.ambient_dim, a.det_constraint or b.det_constraint)

    @property
    def field(self) -> FieldSpec:
        if self.kind == "linear":
            return self.point.field
        if self.kind == "conjugation":
            return self.point.field
        return self.point[0].field

    def with_point(self, point: Point) -> "ActionInstance":
        return ActionInstance(self.kind, point, self.ambient_dim, self.det_constraint)

    def act(self, g: Matrix, g_inv: Matrix | None = None) -> "ActionInstance":
        if self.kind == "linear":
            return self.with_point(g @ self.point)
        if self.kind == "conjugation":
            return self.with_point(self.point.conjugate(g, g_inv))
        a, b = self.point
        if g_inv is None:
            g_inv = invert(g)
        return self.with_point((a.act(g, g_inv), b.act(g, g_inv)))

    def zero_point(self) -> Point:
        return _zero_like(self.kind, self.point)

    def is_zero(self) -> bool:
        return _is_zero(self.kind, self.point)


def _zero_like(kind: str, point: Point) -> Point:
    if kind == "linear":
        return Matrix.zeros(point.field, point.rows, 1)
    if kind == "conjugation":
        z = Matrix.zeros(point.field, point.n)
        return MatrixTuple(tuple(z for _ in point.entries), point.det_constraint, point.field, point.n)
    a, b = point
    return (a.with_point(_zero_like(a.kind, a.point)), b.with_point(_zero_like(b.kind, b.point)))


def _is_zero(kind: str, point: Point) -> bool:
    if kind == "linear":
        return point.is_zero()
    if kind == "conjugation":
        return all(m.is_zero() for m in point.entries)
    return all(_is_zero(f.kind, f.point) for f in point)


def _add_points(kind: str, p: Point, q: Point) -> Point:
    if kind == "linear":
        return p + q
    if kind == "conjugation":
        return MatrixTuple(tuple(a + b for a, b in zip(p.entries, q.entries)), p.det_constraint, p.field, p.n)
    return tuple(a.with_point(_add_points(a.kind, a.point, b.point)) for a, b in zip(p, q))


def _scale_point(kind: str, p: Point, c) -> Point:
    if kind == "linear":
        return p.scale(c)
    if kind == "conjugation":
        return MatrixTuple(tuple(m.scale(c) for m in p.entries), p.det_constraint, p.field, p.n)
    return tuple(a.with_point(_scale_point(a.kind, a.point, c)) for a in p)


def points_equal(kind: str, p: Point, q: Point) -> bool:
    if kind == "product":
        return all(points_equal(a.kind, a.point, b.point) for a, b in zip(p, q))
    return p == q


@dataclass(frozen=True)
class WeightGrading:
    """Weight d -> weight-d component; only nonzero components are stored."""

    kind: str
    components: dict
    template: ActionInstance

    def support(self) -> list[int]:
        return sorted(self.components)

    def total(self) -> Point:
        acc = self.template.zero_point()
        for comp in self.components.values():
            acc = _add_points(self.kind, acc, comp)
        return acc

    def evaluate(self, t) -> Point:
        """sum_d t^d * component_d, i.e. lambda(t) . x reconstructed from the grading."""
        F = self.template.field
        tv = F.convert(t)
        acc = self.template.zero_point()
        for d, comp in self.components.items():
            acc = _add_points(self.kind, acc, _scale_point(self.kind, comp, F.pow(tv, d)))
        return acc


@dataclass(frozen=True)
class LimitOutcome:
    exists: bool
    value: Point | None
    negative_support: tuple[int, ...] = ()


def _check_dims(x: ActionInstance, lam: Cocharacter):
    if x.ambient_dim != lam.n:
        raise PreconditionError(f"cocharacter of GL_{lam.n} cannot act on an instance of GL_{x.ambient_dim}")
    if x.field != lam.field:
        raise PreconditionError(f"field mismatch: {x.field!r} vs {lam.field!r}")


def matrix_grading(m: Matrix, lam: Cocharacter) -> dict[int, Matrix]:
    """Weight components of ``m`` under conjugation by lam (entry (i,j) has weight w_i - w_j)."""
    g, gi, w = lam.base_change, lam.inverse_base, lam.weights
    F = m.field
    y = gi @ m @ g
    n = len(w)
    out: dict[int, list[list]] = {}
    for i in range(n):
        for j in range(n):
            v = y.data[i][j]
            if v:
                d = w[i] - w[j]
                blk = out.get(d)
                if blk is None:
                    blk = out[d] = [[F.zero] * n for _ in range(n)]
                blk[i][j] = v
    return {d: g @ Matrix(F, blk, n, n) @ gi for d, blk in out.items()}


def _vector_grading(v: Matrix, lam: Cocharacter) -> dict[int, Matrix]:
    g, gi, w = lam.base_change, lam.inverse_base, lam.weights
    F = v.field
    c = gi @ v
    out: dict[int, list] = {}
    for i, d in enumerate(w):
        val = c.data[i][0]
        if val:
            out.setdefault(d, [F.zero] * len(w))[i] = val
    return {d: g @ Matrix(F, [[a] for a in col], len(w), 1) for d, col in out.items()}


def _components(x: ActionInstance, lam: Cocharacter) -> dict[int, Point]:
    if x.kind == "linear":
        return _vector_grading(x.point, lam)
    if x.kind == "conjugation":
        t = x.point
        per_entry = [matrix_grading(m, lam) for m in t.entries]
        weights = sorted({d for pe in per_entry for d in pe})
        zero = Matrix.zeros(t.field, t.n)
        return {d: MatrixTuple(tuple(pe.get(d, zero) for pe in per_entry), t.det_constraint, t.field, t.n) for d in weights}
    a, b = x.point
    ca, cb = _components(a, lam), _components(b, lam)
    out = {}
    for d in sorted(set(ca) | set(cb)):
        pa = ca.get(d, a.zero_point())
        pb = cb.get(d, b.zero_point())
        out[d] = (a.with_point(pa), b.with_point(pb))
    return out


def grade(x: ActionInstance, lam: Cocharacter) -> WeightGrading:
    _check_dims(x, lam)
    return WeightGrading(x.kind, _components(x, lam), x)


def limit(x: ActionInstance, lam: Cocharacter) -> LimitOutcome:
    gr = grade(x, lam)
    neg = tuple(d for d in gr.support() if d < 0)
    if neg:
        return LimitOutcome(False, None, neg)
    return LimitOutcome(True, gr.components.get(0, x.zero_point()), ())


def _require_invertible(g: Matrix):
    if not g.is_square or g.rank() < g.rows:
        raise PreconditionError("group element must be invertible")


def p_lambda_contains(g: Matrix, lam: Cocharacter) -> bool:
    _require_invertible(g)
    return all(d >= 0 for d in matrix_grading(g, lam))


def l_lambda_contains(g: Matrix, lam: Cocharacter) -> bool:
    _require_invertible(g)
    return set(matrix_grading(g, lam)) <= {0}


def ru_p_lambda_contains(g: Matrix, lam: Cocharacter) -> bool:
    _require_invertible(g)
    comps = matrix_grading(g, lam)
    if any(d < 0 for d in comps):
        return False
    zero_part = comps.get(0)
    return zero_part is not None and zero_part.is_identity()


def act_on_cocharacter(g: Matrix, lam: Cocharacter) -> Cocharacter:
    """(g . lam)(t) = g lam(t) g^-1."""
    _require_invertible(g)
    return Cocharacter(g @ lam.base_change, lam.weights)


def is_fixed(x: ActionInstance, lam: Cocharacter) -> bool:
    return set(grade(x, lam).support()) <= {0}


def check_conjfixed(x: ActionInstance, lam: Cocharacter, u: Matrix) -> tuple[bool, bool]:
    """(limit == u.x, (u^-1 . lam) fixes x); the two always agree."""
    if not ru_p_lambda_contains(u, lam):
        raise PreconditionError("u is not in R_u(P_lambda)")
    lim = limit(x, lam)
    if not lim.exists:
        raise PreconditionError("limit does not exist")
    lhs = points_equal(x.kind, lim.value, x.act(u).point)
    u_inv = invert(u)
    rhs = is_fixed(x, act_on_cocharacter(u_inv, lam))
    return lhs, rhs


def check_conjlim(x: ActionInstance, lam: Cocharacter, u: Matrix) -> bool:
    """lim mu(t).x exists and equals u.x' for mu = u.lam and x' = lim lam(t).x."""
    if not ru_p_lambda_contains(u, lam):
        raise PreconditionError("u is not in R_u(P_lambda)")
    lim = limit(x, lam)
    if not lim.exists:
        raise PreconditionError("limit does not exist")
    mu = act_on_cocharacter(u, lam)
    lim_mu = limit(x, mu)
    if not lim_mu.exists:
        return False
    return points_equal(x.kind, lim_mu.value, x.with_point(lim.value).act(u).point)
