"""Deterministic constructions for the stored instance corpus."""
from __future__ import annotations

import random
from typing import Any

from .fields import GF, QQ, FieldSpec
from .matrix import Matrix
from .serialize import tuple_to_json
from .tuples import MatrixTuple


def _unitriangular(F: FieldSpec, n: int, rng: random.Random) -> Matrix:
    rows = [[F.one if i == j else (F.random_nonzero(rng, 3) if j > i else F.zero) for j in range(n)] for i in range(n)]
    return Matrix(F, rows, n, n)


def _distinct_diag(F: FieldSpec, n: int, offset: int) -> Matrix:
    return Matrix.diag(F, [offset + i for i in range(n)])


def _block_diag(F: FieldSpec, blocks: list[Matrix]) -> Matrix:
    n = sum(b.rows for b in blocks)
    rows = [[F.zero] * n for _ in range(n)]
    pos = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[pos + i][pos + j] = b.data[i][j]
        pos += b.rows
    return Matrix(F, rows, n, n)


def _kron(a: Matrix, b: Matrix) -> Matrix:
    F = a.field
    n, m = a.rows, b.rows
    rows = [[F.mul(a.data[i // m][j // m], b.data[i % m][j % m]) for j in range(n * m)] for i in range(n * m)]
    return Matrix(F, rows, n * m, n * m)


def two_varieties_instances(seed: int) -> list[dict[str, Any]]:
    rng = random.Random(seed)
    out: list[dict[str, Any]] = []

    def add(kind: str, desc: str, x: MatrixTuple, y: MatrixTuple, both: bool | None):
        out.append({
            "id": f"tv-{len(out):02d}-{kind}",
            "description": desc,
            "provenance": "Constructed",
            "x": tuple_to_json(x),
            "y": tuple_to_json(y),
            "expect_both_not_closed": both,
        })

    # x diagonal, y a unitriangular conjugate of another diagonal: commuting-free
    # semisimple pair whose joint algebra is triangular
    for F, n in [(QQ, 2), (QQ, 3), (QQ, 4), (GF(5), 2), (GF(5), 3), (GF(7), 3), (GF(7), 4), (GF(11), 3)]:
        g = _unitriangular(F, n, rng)
        x = MatrixTuple((_distinct_diag(F, n, 1),))
        y = MatrixTuple((g @ _distinct_diag(F, n, 1) @ g.inverse(),))
        add("triangular", f"x = diag(1..{n}), y = g diag(1..{n}) g^-1 with g unitriangular over {F!r}", x, y, True)
    # both diagonal: joint algebra commutative and semisimple
    for F, n in [(QQ, 3), (GF(5), 3), (GF(7), 2), (QQ, 4)]:
        x = MatrixTuple((_distinct_diag(F, n, 1),))
        y = MatrixTuple((Matrix.diag(F, [2 * i + 1 for i in range(n)]),))
        add("commuting", f"x, y both diagonal over {F!r}", x, y, False)
    # x = y
    for F, n in [(QQ, 2), (GF(3), 3), (GF(5), 2)]:
        x = MatrixTuple((Matrix.random_invertible(F, n, rng), Matrix.random_invertible(F, n, rng)))
        while not _semisimple(x):
            x = MatrixTuple((Matrix.random_invertible(F, n, rng), Matrix.random_invertible(F, n, rng)))
        add("equal", f"x = y random semisimple pair over {F!r}", x, x, False)
    # irreducible pairs: stabilizers are scalars
    for F in [QQ, GF(3), GF(7)]:
        x = MatrixTuple.of(F, [[1, 1], [0, 1]], [[1, 0], [1, 1]])
        y = MatrixTuple.of(F, [[1, 0], [2, 1]], [[1, 2], [0, 1]])
        add("scalar-stabilizers", f"two generating pairs of M_2 over {F!r}", x, y, False)
    # block versions: irreducible 2-block plus a line
    for F in [QQ, GF(5)]:
        irred = Matrix.from_rows(F, [[0, -1], [1, 0]]) if F == QQ else Matrix.from_rows(F, [[0, 1], [3, 0]])
        x = MatrixTuple((_block_diag(F, [irred, Matrix.diag(F, [3])]),))
        g = _unitriangular(F, 3, rng)
        y = MatrixTuple((g @ _block_diag(F, [Matrix.diag(F, [1, 2]), Matrix.diag(F, [4])]) @ g.inverse(),))
        add("block", f"x = irreducible 2-block + line, y = triangular conjugate of a diagonal over {F!r}", x, y, None)
    return out


def htog_instances() -> list[dict[str, Any]]:
    out: list[dict[str, Any]] = []

    def add(kind: str, desc: str, x: MatrixTuple, a: MatrixTuple):
        out.append({
            "id": f"htog-{len(out):02d}-{kind}",
            "description": desc,
            "provenance": "Constructed",
            "x": tuple_to_json(x),
            "a": tuple_to_json(a),
        })

    for F in [QQ, GF(5), GF(7)]:
        ident = Matrix.identity(F, 2)
        x = MatrixTuple.of(F, [[1, 0], [0, 2]], [[1, 1], [0, 1]])
        add("identity", f"triangular pair, A trivial, over {F!r}", x, MatrixTuple((ident,)))
    for F in [QQ, GF(5), GF(7)]:
        # x = semisimple part + nilpotent part; A generated by the semisimple part
        s = Matrix.diag(F, [2, 2, 3])
        nil = Matrix.from_rows(F, [[0, 1, 0], [0, 0, 0], [0, 0, 0]])
        add("jordan", f"A = semisimple part of a non-semisimple x over {F!r}", MatrixTuple((s + nil,)), MatrixTuple((s,)))
    for F in [QQ, GF(5), GF(7)]:
        # two Jordan blocks swapped by A
        j = Matrix.from_rows(F, [[1, 1], [0, 1]])
        x = MatrixTuple((_block_diag(F, [j, j]),))
        swap = Matrix.from_rows(F, [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
        add("swap", f"diag(J, J) with A swapping the blocks over {F!r}", x, MatrixTuple((swap,)))
    for F in [QQ, GF(7)]:
        # x = I (x) y with y non-semisimple, A = B (x) I with B irreducible
        y = [Matrix.from_rows(F, [[1, 0], [0, 2]]), Matrix.from_rows(F, [[1, 1], [0, 1]])]
        ident = Matrix.identity(F, 2)
        b1 = Matrix.from_rows(F, [[1, 1], [0, 1]])
        b2 = Matrix.from_rows(F, [[1, 0], [1, 1]])
        x = MatrixTuple(tuple(_kron(ident, m) for m in y))
        add("tensor", f"I (x) y with y triangular, A = B (x) I with B generating M_2 over {F!r}", x, MatrixTuple((_kron(b1, ident), _kron(b2, ident))))
    for F in [QQ, GF(5)]:
        # block with a central scaling
        j = Matrix.from_rows(F, [[1, 1], [0, 1]])
        x = MatrixTuple((_block_diag(F, [j, Matrix.diag(F, [2])]),))
        a = MatrixTuple((Matrix.diag(F, [1, 1, 3]),))
        add("block-scaling", f"Jordan block plus a line, A scaling the blocks over {F!r}", x, a)
    return out


def _semisimple(t: MatrixTuple) -> bool:
    from .modules import is_semisimple_module

    return is_semisimple_module(t)
