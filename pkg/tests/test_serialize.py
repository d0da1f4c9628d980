import random

import pytest
from hypothesis import given, strategies as st

from orbitlab.cochar import ActionInstance, Cocharacter
from orbitlab.fields import GF, QQ
from orbitlab.matrix import Matrix
from orbitlab.serialize import (
    cochar_from_json,
    cochar_to_json,
    instance_from_json,
    instance_to_json,
    matrix_from_json,
    matrix_to_json,
    tuple_from_json,
    tuple_to_json,
)
from orbitlab.tuples import MatrixTuple

FIELDS = [QQ, GF(2), GF(7), GF(2, 2), GF(3, 3)]


@pytest.mark.parametrize("F", FIELDS, ids=repr)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 3))
def test_matrix_and_tuple_roundtrip(F, seed, n):
    rng = random.Random(seed)
    m = Matrix.random(F, n, n, rng)
    assert matrix_from_json(matrix_to_json(m)) == m
    t = MatrixTuple((m, Matrix.random(F, n, n, rng)), "SL" if seed % 2 else None)
    assert tuple_from_json(tuple_to_json(t)) == t


def test_instance_roundtrip():
    F = GF(5)
    a = ActionInstance.linear(Matrix.column(F, [1, 2]))
    b = ActionInstance.conjugation(MatrixTuple.of(F, [[1, 1], [0, 1]]))
    for x in (a, b, ActionInstance.product(a, b)):
        assert instance_to_json(instance_from_json(instance_to_json(x))) == instance_to_json(x)


def test_bare_tuple_reads_as_conjugation():
    t = MatrixTuple.of(QQ, [[1, 2], [3, 4]])
    x = instance_from_json(tuple_to_json(t))
    assert x.kind == "conjugation" and x.point == t


def test_empty_tuple_roundtrip():
    t = MatrixTuple((), None, GF(3), 2)
    assert tuple_from_json(tuple_to_json(t)) == t


def test_cochar_roundtrip():
    lam = Cocharacter(Matrix.from_rows(QQ, [[1, 1], [0, 1]]), (2, -1))
    assert cochar_from_json(cochar_to_json(lam)) == lam


def test_rational_entries_are_strings():
    d = matrix_to_json(Matrix.from_rows(QQ, [["1/3", 0]]))
    assert d["entries"] == [["1/3", "0"]]
