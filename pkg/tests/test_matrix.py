import random

import pytest
from hypothesis import given, strategies as st

from orbitlab.fields import GF, QQ
from orbitlab.matrix import Matrix, inconsistency_witness, invert, nullspace, rref, solve_linear


def rand_matrix(F, n, m, seed):
    return Matrix.random(F, n, m, random.Random(seed))


@pytest.mark.parametrize("F", [QQ, GF(2), GF(7), GF(3, 2)], ids=repr)
@given(n=st.integers(1, 4), seed=st.integers(0, 10**6))
def test_inverse_roundtrip(F, n, seed):
    m = rand_matrix(F, n, n, seed)
    inv = invert(m)
    if m.det() == F.zero:
        assert inv is None and m.rank() < n
    else:
        assert (m @ inv).is_identity() and (inv @ m).is_identity()


@pytest.mark.parametrize("F", [QQ, GF(5), GF(2, 3)], ids=repr)
@given(n=st.integers(1, 4), m=st.integers(1, 4), seed=st.integers(0, 10**6))
def test_rank_nullity(F, n, m, seed):
    a = rand_matrix(F, n, m, seed)
    ns = nullspace(a)
    assert a.rank() + len(ns) == m
    for v in ns:
        assert (a @ v).is_zero()


@given(n=st.integers(1, 3), seed=st.integers(0, 10**6))
def test_det_multiplicative(n, seed):
    a, b = rand_matrix(QQ, n, n, seed), rand_matrix(QQ, n, n, seed + 1)
    assert (a @ b).det() == QQ.mul(a.det(), b.det())


def test_rref_reduced():
    a = Matrix.from_rows(QQ, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r = rref(a)
    assert r.rank == 2


def test_solve_and_witness():
    F = GF(7)
    a = Matrix.from_rows(F, [[1, 1], [2, 2]])
    good = Matrix.column(F, [1, 2])
    bad = Matrix.column(F, [1, 3])
    sol = solve_linear(a, good)
    assert sol is not None and (a @ sol.particular) == good
    assert solve_linear(a, bad) is None
    y = inconsistency_witness(a, bad)
    assert (y @ a).is_zero() and not (y @ bad).is_zero()


def test_power_and_transpose():
    m = Matrix.from_rows(QQ, [[1, 1], [0, 1]])
    assert (m ** 3) == Matrix.from_rows(QQ, [[1, 3], [0, 1]])
    assert (m ** -1) == Matrix.from_rows(QQ, [[1, -1], [0, 1]])
    assert m.T.T == m


def test_shape_errors():
    with pytest.raises(ValueError):
        Matrix.identity(QQ, 2) @ Matrix.identity(QQ, 3)


def test_change_field():
    m = Matrix.from_rows(GF(2), [[1, 0], [1, 1]])
    big = m.change_field(GF(2, 2))
    assert big.field == GF(2, 2) and big.det() == GF(2, 2).one
