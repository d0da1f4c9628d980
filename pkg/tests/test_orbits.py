import random

import pytest
from hypothesis import given, strategies as st

from orbitlab.cochar import ActionInstance, Cocharacter, PreconditionError
from orbitlab.fields import GF, QQ
from orbitlab.matrix import Matrix
from orbitlab.modules import brute_force_semisimple
from orbitlab.orbits import (
    CLOSED,
    NO_DESTABILIZER,
    NOT_CLOSED,
    Certificate,
    InconsistencyError,
    SubgroupSpec,
    TorusOfSubgroup,
    default_torus,
    destabilizer_search,
    htog_check,
    is_orbit_closed_full,
    kraft_check,
    ru_conjugacy_back,
    torus_of_centralizer,
    two_varieties_check,
    weight_order_key,
)
from orbitlab.tuples import MatrixTuple
from orbitlab.verify import verify_orbit
from orbitlab.zoo import gl2_pair, random_tuple


def test_gl2_full_verdicts():
    x, y = gl2_pair(2)
    cx = is_orbit_closed_full(x)
    assert cx.verdict == NOT_CLOSED
    assert cx.destabilizer == Cocharacter.diagonal(QQ, (1, -1))
    assert cx.limit_value == MatrixTuple.of(QQ, [[1, 0], [0, 2]], [[1, 0], [0, 1]])
    assert is_orbit_closed_full(y).verdict == CLOSED
    assert is_orbit_closed_full(x.concat(y)).verdict == CLOSED
    assert not verify_orbit(cx)


def test_empty_tuple_closed():
    t = MatrixTuple((), None, QQ, 3)
    assert is_orbit_closed_full(t).verdict == CLOSED


def test_sl_destabilizer_sums_to_zero():
    t = MatrixTuple.of(QQ, [[0, 1, 0], [0, 0, 0], [0, 0, 0]], det_constraint="SL")
    c = is_orbit_closed_full(t)
    assert c.verdict == NOT_CLOSED and sum(c.destabilizer.weights) == 0
    assert not verify_orbit(c)


def test_lattice_order():
    torus = TorusOfSubgroup.diagonal(QQ, 2)
    lat = torus.lattice(2)
    assert lat[:2] == [(1, -1), (-1, 1)]
    assert all(weight_order_key(a) <= weight_order_key(b) for a, b in zip(lat, lat[1:]))
    sl = TorusOfSubgroup.diagonal(QQ, 3, sl=True)
    assert all(sum(w) == 0 for w in sl.lattice(2))


def test_search_first_hit_gl2():
    x, _ = gl2_pair(2)
    c = destabilizer_search(ActionInstance.conjugation(x), SubgroupSpec.full(QQ, 2), TorusOfSubgroup.diagonal(QQ, 2), 2)
    assert c.verdict == NOT_CLOSED and c.lattice_weights == (1, -1)
    assert c.nonconjugacy["method"] == "ru_affine_system"
    assert not verify_orbit(c)


def test_search_exhausts_on_closed_orbit():
    _, y = gl2_pair(2)
    c = destabilizer_search(ActionInstance.conjugation(y), SubgroupSpec.full(QQ, 2), TorusOfSubgroup.diagonal(QQ, 2), 2)
    assert c.verdict == NO_DESTABILIZER and c.searched > 0
    assert not verify_orbit(c)


def test_search_linear_action():
    F = GF(5)
    v = ActionInstance.linear(Matrix.column(F, [1, 0]))
    c = destabilizer_search(v, SubgroupSpec.full(F, 2), TorusOfSubgroup.diagonal(F, 2), 1)
    assert c.verdict == NOT_CLOSED and c.limit_value.is_zero()


def test_ru_conjugacy_back_finds_unipotent():
    # limit of a conjugate of a lambda-fixed tuple is reached by R_u(P_lambda)
    F = QQ
    lam = Cocharacter.diagonal(F, (1, -1))
    u = Matrix.from_rows(F, [[1, 3], [0, 1]])
    x0 = MatrixTuple.of(F, [[1, 0], [0, 2]])
    x = ActionInstance.conjugation(x0.conjugate(u))
    res = ru_conjugacy_back(x, lam, SubgroupSpec.full(F, 2))
    assert res.witness is not None
    assert x.act(res.witness).point == x0


def test_subgroup_membership():
    F = QQ
    blocks = SubgroupSpec("BlockSubgroup", 3, F, (1, 2))
    assert blocks.contains(Matrix.diag(F, [1, 2, 3]))
    assert not blocks.contains(Matrix.from_rows(F, [[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
    diag = SubgroupSpec("DiagonalTorus", 2, F)
    assert diag.contains_cocharacter(Cocharacter.diagonal(F, (3, -1)))
    assert SubgroupSpec.from_json(blocks.to_json()).blocks == (1, 2)
    with pytest.raises(ValueError):
        SubgroupSpec("BlockSubgroup", 3, F, (1, 1))


def test_centralizer_torus_in_centralizer():
    F = GF(7)
    a = MatrixTuple((Matrix.diag(F, [1, 1, 3]),))
    torus = torus_of_centralizer(a)
    H = SubgroupSpec.centralizer(a)
    assert all(H.contains_cocharacter(l) for l in torus.basis())
    assert torus.rank == 3
    with pytest.raises(PreconditionError):
        torus_of_centralizer(MatrixTuple.of(F, [[1, 1], [0, 1]]))


def test_default_torus_finite_list():
    F = QQ
    H = SubgroupSpec("FiniteList", 2, F, elements=(Matrix.identity(F, 2),))
    x, _ = gl2_pair(2)
    c = destabilizer_search(ActionInstance.conjugation(x), H, default_torus(H), 3)
    assert c.verdict == NO_DESTABILIZER and c.searched == 0


def test_search_rejects_torus_outside_subgroup():
    F = QQ
    x, _ = gl2_pair(2)
    H = SubgroupSpec.full(F, 2, sl=True)
    with pytest.raises(PreconditionError):
        destabilizer_search(ActionInstance.conjugation(x), H, TorusOfSubgroup.diagonal(F, 2), 1)


def test_two_varieties_needs_closed_orbits():
    x, y = gl2_pair(2)
    with pytest.raises(PreconditionError):
        two_varieties_check(x, y, 2)


def test_two_varieties_triangular():
    F = QQ
    x = MatrixTuple((Matrix.diag(F, [1, 2]),))
    g = Matrix.from_rows(F, [[1, 1], [0, 1]])
    r = two_varieties_check(x, x.conjugate(g), 3)
    assert r.consistent and r.both_not_closed
    assert r.joint.verdict == NOT_CLOSED


def test_htog_jordan():
    F = QQ
    s = Matrix.diag(F, [2, 2, 3])
    x = MatrixTuple((s + Matrix.from_rows(F, [[0, 1, 0], [0, 0, 0], [0, 0, 0]]),))
    r = htog_check(x, MatrixTuple((s,)), 3)
    assert r.status == "found"
    assert SubgroupSpec.centralizer(MatrixTuple((s,))).contains_cocharacter(r.search.destabilizer)


def test_htog_preconditions():
    F = QQ
    x, _ = gl2_pair(2)
    with pytest.raises(PreconditionError):
        htog_check(x, MatrixTuple.of(F, [[0, 1], [1, 0]]))


def test_kraft():
    F = GF(2)
    t = MatrixTuple((Matrix.diag(F, [1, 0, 1]),))
    assert kraft_check(t) and brute_force_semisimple(t)
    g = Matrix.from_rows(F, [[1, 1, 0], [0, 1, 0], [1, 0, 1]])
    assert kraft_check(t.conjugate(g), g)
    with pytest.raises(PreconditionError):
        kraft_check(MatrixTuple.of(F, [[1, 1], [0, 1]]))


def test_certificate_json_roundtrip():
    x, _ = gl2_pair(2)
    c = is_orbit_closed_full(x)
    again = Certificate.from_json(c.to_json())
    assert again.to_json() == c.to_json()


@given(seed=st.integers(0, 10**6))
def test_conjugation_invariance(seed):
    rng = random.Random(seed)
    F = GF(3)
    n = rng.randint(1, 3)
    t = random_tuple(F, n, 2, rng)
    g = Matrix.random_invertible(F, n, rng)
    a, b = is_orbit_closed_full(t), is_orbit_closed_full(t.conjugate(g))
    assert a.verdict == b.verdict
    assert (a.verdict == CLOSED) == brute_force_semisimple(t)
    assert not verify_orbit(a)
