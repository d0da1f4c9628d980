import itertools
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from orbitlab.cochar import PreconditionError
from orbitlab.lp import simplex_max
from orbitlab.torus import (
    IN_RELINT,
    ON_BOUNDARY,
    OUTSIDE,
    ConvexCertificate,
    WeightSupport,
    kempf_ratio_squared,
    limit_along,
    min_norm_point,
    min_norm_point_by_faces,
    optimal_destabilizer,
    primitive,
    torus_orbit_closed,
    verify_convex,
)
from orbitlab.zoo import enumerated_kind

supports = st.integers(1, 2).flatmap(
    lambda r: st.lists(st.tuples(*[st.integers(-3, 3)] * r), min_size=1, max_size=6).map(lambda ws: WeightSupport(r, tuple(ws)))
)


def test_rank_one_examples():
    assert torus_orbit_closed(WeightSupport.of((1,), (-1,))).kind == IN_RELINT
    c = torus_orbit_closed(WeightSupport.of((1,), (2,)))
    assert c.kind == OUTSIDE and c.normal == (1,)
    assert optimal_destabilizer(WeightSupport.of((1,), (2,))) == (1,)
    assert torus_orbit_closed(WeightSupport.of((0,), (1,))).kind == ON_BOUNDARY


def test_rank_two_examples():
    s = WeightSupport.of((1, 0), (0, 1))
    assert torus_orbit_closed(s).normal == (1, 1)
    assert min_norm_point(s) == (Fraction(1, 2), Fraction(1, 2))
    assert torus_orbit_closed(WeightSupport.of((1, 0), (-1, 0), (0, 1), (0, -1))).kind == IN_RELINT
    b = torus_orbit_closed(WeightSupport.of((1, 0), (-1, 0), (0, 1)))
    assert b.kind == ON_BOUNDARY and b.normal == (0, 1)


def test_empty_support_closed():
    assert torus_orbit_closed(WeightSupport(2, ())).kind == IN_RELINT


def test_zero_weight_fixed_point():
    assert torus_orbit_closed(WeightSupport.of((0, 0))).kind == IN_RELINT


@given(supports)
def test_against_enumeration(s):
    cert = torus_orbit_closed(s)
    assert cert.kind == enumerated_kind(s)
    assert not verify_convex(cert)


@given(supports)
def test_kempf_optimal(s):
    if torus_orbit_closed(s).kind != OUTSIDE:
        with pytest.raises(PreconditionError):
            optimal_destabilizer(s)
        return
    assert min_norm_point(s) == min_norm_point_by_faces(s)
    w = optimal_destabilizer(s)
    best = kempf_ratio_squared(s, w)
    assert best[0] > 0
    for v in itertools.product(range(-6, 7), repeat=s.rank):
        if any(v) and gcd(*v) == 1:
            sv = kempf_ratio_squared(s, v)
            assert sv[0] <= 0 or sv[1] <= best[1]
    assert optimal_destabilizer(s.scaled(3)) == w


def test_limit_along():
    s = WeightSupport.of((1, 0), (0, 1))
    assert limit_along(s, None, (1, 1)).value == (0, 0)
    assert not limit_along(s, None, (1, -1)).exists
    assert limit_along(s, [Fraction(2), Fraction(5)], (1, 0)).value == (0, Fraction(5))


def test_primitive():
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    with pytest.raises(ValueError):
        primitive([0, 0])


def test_mutated_certificates_rejected():
    s = WeightSupport.of((1, 0), (0, 1))
    cert = torus_orbit_closed(s)
    assert verify_convex(ConvexCertificate(OUTSIDE, s, (1, -1)))
    assert verify_convex(ConvexCertificate(IN_RELINT, s, None, (Fraction(1, 2), Fraction(1, 2))))
    assert ConvexCertificate.from_json(cert.to_json()) == cert


def test_simplex():
    # max x + y, x + 2y + s1 = 4, 3x + y + s2 = 6
    res = simplex_max([1, 1, 0, 0], [[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6])
    assert res.status == "optimal" and res.value == Fraction(14, 5)
    assert simplex_max([1], [[1], [1]], [1, 2]).status == "infeasible"
    assert simplex_max([1, 0], [[1, -1]], [0]).status == "unbounded"
