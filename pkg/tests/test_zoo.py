import pytest

from orbitlab.cochar import PreconditionError
from orbitlab.fields import GF, QQ
from orbitlab.matrix import Matrix
from orbitlab.tuples import MatrixTuple
from orbitlab.zoo import (
    adjoint_sl2,
    borel_variant,
    char3_adjoint_semisimple,
    load_config,
    load_corpus,
    rho_sl2,
    run_suite,
    suite_lemmas,
    suite_oracle,
    suite_torus,
    zoo_gl2_example,
    zoo_sl3_adjoint,
)
from orbitlab.orbits import is_orbit_closed_full


def test_config_defaults():
    cfg = load_config()
    assert cfg["a"] == 2 and cfg["f4_modulus"] == [1, 1, 1] and cfg["bound"] == 3
    assert GF(2, 2).modulus == tuple(cfg["f4_modulus"])


def test_corpus_sizes():
    assert len(load_corpus("twovarieties")) >= 20
    assert len(load_corpus("htog")) >= 10


@pytest.mark.parametrize("a,F", [(2, QQ), (3, QQ), ("1/2", QQ)])
def test_gl2_variants(a, F):
    assert zoo_gl2_example(a, F).passed


def test_gl2_f4():
    F = GF(2, 2)
    assert zoo_gl2_example(F.element(F.generator), F).passed


def test_gl2_rejects_degenerate_a():
    with pytest.raises(PreconditionError):
        zoo_gl2_example(1, QQ)


def test_rho_formula_in_char_2():
    F = GF(2, 2)
    a = F.element(F.generator)
    g = Matrix(F, [[a.value, 1], [0, F.inv(a.value)]], 2, 2)
    assert rho_sl2(g) == adjoint_sl2(g)
    assert rho_sl2(g).det() == F.one


def test_sl3_f4_and_f16():
    assert zoo_sl3_adjoint(2).passed
    assert zoo_sl3_adjoint(4, brute_force=False).passed
    with pytest.raises(PreconditionError):
        zoo_sl3_adjoint(1)


def test_char3_adjoint_semisimple():
    assert char3_adjoint_semisimple(1)


def test_borel_variant():
    d = borel_variant()
    assert d == {"borel": "NotClosed", "full": "Closed", "joint": "Closed", "borel_dim": "3"}


def test_identity_smoke():
    t = MatrixTuple((Matrix.identity(QQ, 2),))
    assert is_orbit_closed_full(t).verdict == "Closed"
    assert suite_lemmas(seed=1, count=4, block_count=3).passed
    assert suite_oracle(seed=1, count=4).passed
    assert suite_torus(seed=1, count=4).passed


def test_suite_determinism():
    a, b = suite_lemmas(seed=5, count=10, block_count=6), suite_lemmas(seed=5, count=10, block_count=6)
    assert a == b
    assert run_suite("gl2") == run_suite("gl2")


def test_unknown_suite():
    with pytest.raises(PreconditionError):
        run_suite("nope")
