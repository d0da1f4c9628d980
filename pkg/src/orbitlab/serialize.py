"""JSON forms of matrices, tuples, cocharacters and action instances."""
from __future__ import annotations

from typing import Any

from .cochar import ActionInstance, Cocharacter
from .fields import FieldSpec
from .matrix import Matrix
from .tuples import MatrixTuple


def matrix_to_json(m: Matrix) -> dict[str, Any]:
    return {"field": m.field.to_json(), "rows": m.rows, "cols": m.cols, "entries": m.to_strings()}


def matrix_from_json(d: dict[str, Any]) -> Matrix:
    F = FieldSpec.from_json(d["field"])
    rows, cols = int(d["rows"]), int(d["cols"])
    entries = d["entries"]
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ValueError("matrix entries do not match the declared shape")
    if rows == 0 or cols == 0:
        return Matrix(F, [[] for _ in range(rows)], rows, cols)
    return Matrix.from_rows(F, entries)


def tuple_to_json(t: MatrixTuple) -> dict[str, Any]:
    out = {"entries": [matrix_to_json(m) for m in t.entries], "det_constraint": t.det_constraint}
    if not t.entries:
        out["field"] = t.field.to_json()
        out["dim"] = t.n
    return out


def tuple_from_json(d: dict[str, Any]) -> MatrixTuple:
    mats = tuple(matrix_from_json(m) for m in d["entries"])
    if mats:
        return MatrixTuple(mats, d.get("det_constraint"))
    return MatrixTuple((), d.get("det_constraint"), FieldSpec.from_json(d["field"]), int(d["dim"]))


def cochar_to_json(lam: Cocharacter) -> dict[str, Any]:
    return {"base_change": matrix_to_json(lam.base_change), "weights": list(lam.weights)}


def cochar_from_json(d: dict[str, Any]) -> Cocharacter:
    return Cocharacter(matrix_from_json(d["base_change"]), tuple(int(w) for w in d["weights"]))


def point_to_json(kind: str, point) -> Any:
    if kind == "linear":
        return matrix_to_json(point)
    if kind == "conjugation":
        return tuple_to_json(point)
    return [instance_to_json(f) for f in point]


def point_from_json(kind: str, d: Any):
    if kind == "linear":
        return matrix_from_json(d)
    if kind == "conjugation":
        return tuple_from_json(d)
    return tuple(instance_from_json(f) for f in d)


def instance_to_json(x: ActionInstance) -> dict[str, Any]:
    return {
        "kind": x.kind,
        "ambient_dim": x.ambient_dim,
        "det_constraint": x.det_constraint,
        "point": point_to_json(x.kind, x.point),
    }


def instance_from_json(d: dict[str, Any]) -> ActionInstance:
    if "kind" not in d and "entries" in d:
        # a bare tuple is read as a conjugation instance
        t = tuple_from_json(d)
        return ActionInstance.conjugation(t)
    kind = d["kind"]
    point = point_from_json(kind, d["point"])
    if kind == "linear":
        dim = point.rows
    elif kind == "conjugation":
        dim = point.n
    else:
        dim = point[0].ambient_dim
    return ActionInstance(kind, point, int(d.get("ambient_dim", dim)), d.get("det_constraint"))
