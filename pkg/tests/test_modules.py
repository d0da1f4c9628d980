import random

import pytest
from hypothesis import given, strategies as st

from orbitlab.cochar import PreconditionError
from orbitlab.fields import GF, QQ
from orbitlab.matrix import Matrix
from orbitlab.modules import (
    brute_force_semisimple,
    centralizer_algebra,
    fixed_space,
    generic_determinant,
    generic_tuple,
    intertwiner_basis,
    invariant_complement,
    invariant_subspaces,
    irreducible_summands,
    is_semisimple_module,
    isotypic_decomposition,
    modules_isomorphic,
    radical,
    radical_flag,
    span_algebra,
)
from orbitlab.tuples import MatrixTuple
from orbitlab.zoo import random_tuple


def jordan(F):
    return MatrixTuple.of(F, [[1, 1], [0, 1]])


def test_span_algebra_dimensions():
    assert span_algebra(jordan(QQ)).dimension == 2
    assert span_algebra(MatrixTuple.of(QQ, [[1, 1], [0, 1]], [[1, 0], [1, 1]])).dimension == 4


@pytest.mark.parametrize("F", [QQ, GF(2), GF(3), GF(2, 2), GF(5, 2)], ids=repr)
def test_radical_of_jordan_block(F):
    rad = radical(span_algebra(jordan(F)))
    assert len(rad) == 1 and (rad[0] @ rad[0]).is_zero()


def test_char_p_semisimple_diagonal_vs_unipotent():
    # diag(1, 1) + nilpotent in char 2; diag(1, 2) semisimple in char 3
    assert not is_semisimple_module(MatrixTuple.of(GF(2), [[1, 1], [0, 1]]))
    assert is_semisimple_module(MatrixTuple.of(GF(3), [[1, 0], [0, 2]]))
    # x^2 - 2 irreducible over Q: semisimple and irreducible
    t = MatrixTuple.of(QQ, [[0, 2], [1, 0]])
    assert is_semisimple_module(t) and len(irreducible_summands(t)) == 1


def test_frobenius_twist_p_equals_n():
    # permutation matrix of order p on F_p^p is unipotent and not semisimple
    F = GF(3)
    perm = Matrix.from_rows(F, [[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    t = MatrixTuple((perm,))
    assert not is_semisimple_module(t)
    assert brute_force_semisimple(t) is False


@pytest.mark.parametrize("F", [GF(2), GF(3), GF(2, 2), GF(5)], ids=repr)
def test_oracle_agreement(F):
    rng = random.Random(hash(repr(F)) % 1000)
    limit_n = 3 if F.order <= 3 else 2
    for _ in range(30):
        t = random_tuple(F, rng.randint(1, limit_n), rng.randint(1, 3), rng)
        assert is_semisimple_module(t) == brute_force_semisimple(t)


def test_brute_force_range_guard():
    with pytest.raises(PreconditionError):
        brute_force_semisimple(MatrixTuple.of(QQ, [[1, 0], [0, 1]]))


def test_fixed_space_and_complement():
    F = GF(2)
    t = jordan(F)
    fixed = fixed_space(t)
    assert fixed.cols == 1
    assert invariant_complement(t, fixed) is None
    d = MatrixTuple.of(QQ, [[1, 0], [0, 2]])
    comp = invariant_complement(d, Matrix.column(QQ, [1, 0]))
    assert comp is not None and d.is_invariant(comp)


def test_radical_flag_layers():
    t = MatrixTuple.of(QQ, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    flag = radical_flag(t)
    assert [f.cols for f in flag] == [3, 2, 1, 0]


def test_intertwiners_and_isomorphism():
    F = QQ
    x = MatrixTuple.of(F, [[1, 0], [0, 2]], [[1, 1], [0, 1]])
    lim = MatrixTuple.of(F, [[1, 0], [0, 2]], [[1, 0], [0, 1]])
    res = modules_isomorphic(x, lim)
    assert not res and res.reason == "generic_determinant_zero"
    g = Matrix.from_rows(F, [[2, 1], [1, 1]])
    conj = x.conjugate(g)
    res = modules_isomorphic(x, conj)
    assert res and res.witness is not None
    w = res.witness
    assert all(w @ a == b @ w for a, b in zip(x.entries, conj.entries))


def test_generic_determinant_detects_singular_space():
    F = QQ
    basis = [Matrix.from_rows(F, [[1, 0], [0, 0]]), Matrix.from_rows(F, [[0, 1], [0, 0]])]
    assert not generic_determinant(basis)
    assert generic_determinant([Matrix.identity(F, 2)])


def test_no_intertwiner_reason():
    a = MatrixTuple.of(QQ, [[1]])
    b = MatrixTuple.of(QQ, [[2]])
    assert modules_isomorphic(a, b).reason == "no_intertwiner"
    assert intertwiner_basis(a, b) == []


@pytest.mark.parametrize("F", [QQ, GF(5), GF(2, 2)], ids=repr)
def test_isotypic_decomposition(F):
    t = MatrixTuple((Matrix.diag(F, [1, 1, 3 if F.kind == "Q" or F.p > 3 else F.element(F.generator)]),))
    dec = isotypic_decomposition(t)
    assert sorted((c.irreducible_dim, c.multiplicity) for c in dec.summands) == [(1, 1), (1, 2)]
    assert dec.change_of_basis.rank() == 3


def test_isotypic_rejects_nonsemisimple():
    with pytest.raises(PreconditionError):
        isotypic_decomposition(jordan(QQ))


def test_centralizer_of_irreducible_pair():
    t = MatrixTuple.of(GF(7), [[1, 1], [0, 1]], [[1, 0], [1, 1]])
    assert centralizer_algebra(t).dimension == 1


def test_generic_tuple_spans_group_algebra():
    gens = MatrixTuple.of(QQ, [[1, 1], [0, 1]], [[2, 0], [0, 1]])
    t, words = generic_tuple(gens)
    assert span_algebra(t).dimension == span_algebra(gens).dimension == 3
    assert len(words) == len(t.entries)


@given(seed=st.integers(0, 10**6))
def test_semisimplicity_conjugation_invariant(seed):
    rng = random.Random(seed)
    F = GF(3)
    t = random_tuple(F, 3, 2, rng)
    g = Matrix.random_invertible(F, 3, rng)
    assert is_semisimple_module(t) == is_semisimple_module(t.conjugate(g))


def test_invariant_subspaces_count():
    # F_2^2 under the Jordan block: 0, the fixed line, everything
    assert len(invariant_subspaces(jordan(GF(2)))) == 3
