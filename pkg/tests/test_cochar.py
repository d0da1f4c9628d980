import random

import pytest
from hypothesis import given, strategies as st

from orbitlab.cochar import (
    ActionInstance,
    Cocharacter,
    PreconditionError,
    act_on_cocharacter,
    check_conjfixed,
    check_conjlim,
    grade,
    l_lambda_contains,
    limit,
    p_lambda_contains,
    ru_p_lambda_contains,
)
from orbitlab.fields import GF, QQ
from orbitlab.matrix import Matrix
from orbitlab.tuples import MatrixTuple


def test_gl2_limit():
    x = ActionInstance.conjugation(MatrixTuple.of(QQ, [[1, 0], [0, 2]], [[1, 1], [0, 1]]))
    lam = Cocharacter.diagonal(QQ, (1, -1))
    out = limit(x, lam)
    assert out.exists
    assert out.value == MatrixTuple.of(QQ, [[1, 0], [0, 2]], [[1, 0], [0, 1]])
    assert not limit(x, lam.inverse()).exists


def test_grading_reconstructs_action():
    F = GF(7)
    x = ActionInstance.linear(Matrix.column(F, [1, 2, 3]))
    lam = Cocharacter.diagonal(F, (2, 0, -1))
    g = grade(x, lam)
    assert g.support() == [-1, 0, 2]
    assert g.total() == x.point
    t = 3
    assert g.evaluate(t) == lam.evaluate(t) @ x.point


def test_canonical_order_preserves_map():
    lam = Cocharacter.diagonal(QQ, (0, 1, -1))
    assert lam.weights == (1, 0, -1)
    assert lam.evaluate(2) == Matrix.diag(QQ, [1, 2, QQ.convert("1/2")])


def test_parabolic_membership():
    lam = Cocharacter.diagonal(QQ, (1, 0, -1))
    up = Matrix.from_rows(QQ, [[1, 5, 7], [0, 1, 2], [0, 0, 1]])
    low = up.T
    assert p_lambda_contains(up, lam) and ru_p_lambda_contains(up, lam)
    assert not p_lambda_contains(low, lam)
    assert l_lambda_contains(Matrix.diag(QQ, [2, 3, 4]), lam)
    with pytest.raises(PreconditionError):
        p_lambda_contains(Matrix.zeros(QQ, 3, 3), lam)


def test_conjlim_precondition():
    lam = Cocharacter.diagonal(QQ, (1, -1))
    x = ActionInstance.linear(Matrix.column(QQ, [1, 1]))
    u = Matrix.from_rows(QQ, [[1, 0], [1, 1]])
    with pytest.raises(PreconditionError):
        check_conjlim(x, lam, u)


@given(seed=st.integers(0, 10**6), n=st.integers(1, 4))
def test_conjlim_and_conjfixed_property(seed, n):
    rng = random.Random(seed)
    F = GF(7) if seed % 2 else QQ
    g = Matrix.random_invertible(F, n, rng)
    lam = Cocharacter(g, tuple(rng.randint(-2, 2) for _ in range(n)))
    w = lam.weights
    y = Matrix(F, [[F.random(rng) if w[i] >= w[j] else F.zero for j in range(n)] for i in range(n)], n, n)
    x = ActionInstance.conjugation(MatrixTuple((lam.base_change @ y @ lam.inverse_base,)))
    nmat = Matrix(F, [[F.random(rng) if w[i] > w[j] else F.zero for j in range(n)] for i in range(n)], n, n)
    u = lam.base_change @ (Matrix.identity(F, n) + nmat) @ lam.inverse_base
    assert check_conjlim(x, lam, u)
    lhs, rhs = check_conjfixed(x, lam, u)
    assert lhs == rhs


def test_act_on_cocharacter():
    lam = Cocharacter.diagonal(QQ, (1, -1))
    g = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    mu = act_on_cocharacter(g, lam)
    assert mu == Cocharacter.diagonal(QQ, (-1, 1))


def test_product_action_limit():
    F = QQ
    a = ActionInstance.linear(Matrix.column(F, [1, 0]))
    b = ActionInstance.conjugation(MatrixTuple.of(F, [[1, 1], [0, 1]]))
    x = ActionInstance.product(a, b)
    lam = Cocharacter.diagonal(F, (1, -1))
    out = limit(x, lam)
    assert out.exists
    assert not limit(x, lam.inverse()).exists
