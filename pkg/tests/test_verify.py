import copy

from orbitlab.cochar import ActionInstance
from orbitlab.fields import QQ
from orbitlab.orbits import SubgroupSpec, TorusOfSubgroup, destabilizer_search, is_orbit_closed_full
from orbitlab.torus import WeightSupport, torus_orbit_closed
from orbitlab.verify import verify_json
from orbitlab.zoo import gl2_pair, zoo_sl3_adjoint


def certs():
    x, y = gl2_pair(2)
    full = is_orbit_closed_full(x).to_json()
    search = destabilizer_search(ActionInstance.conjugation(x), SubgroupSpec.full(QQ, 2), TorusOfSubgroup.diagonal(QQ, 2), 2).to_json()
    closed = is_orbit_closed_full(y).to_json()
    return full, search, closed


def test_valid_certificates_verify():
    for c in certs():
        assert verify_json(c) == []
    assert verify_json(torus_orbit_closed(WeightSupport.of((1,), (2,))).to_json()) == []


def test_mutated_limit_rejected():
    full, search, _ = certs()
    for c in (full, search):
        bad = copy.deepcopy(c)
        bad["limit_value"]["entries"][1]["entries"][0][1] = "7"
        assert verify_json(bad)


def test_flipped_verdict_rejected():
    full, _, closed = certs()
    bad = copy.deepcopy(full)
    bad["verdict"] = "Closed"
    assert verify_json(bad)
    bad = copy.deepcopy(closed)
    bad["semisimplicity"]["algebra_dim"] = 3
    assert verify_json(bad)


def test_mutated_witness_row_rejected():
    _, search, _ = certs()
    bad = copy.deepcopy(search)
    bad["nonconjugacy"]["witness_row"] = ["0"] * len(bad["nonconjugacy"]["witness_row"])
    assert verify_json(bad)


def test_mutated_reason_rejected():
    full, _, _ = certs()
    bad = copy.deepcopy(full)
    bad["nonconjugacy"]["reason"] = "no_intertwiner"
    assert verify_json(bad)


def test_exhausted_search_rechecked():
    _, y = gl2_pair(2)
    c = destabilizer_search(ActionInstance.conjugation(y), SubgroupSpec.full(QQ, 2), TorusOfSubgroup.diagonal(QQ, 2), 1).to_json()
    assert verify_json(c) == []
    x, _ = gl2_pair(2)
    bad = copy.deepcopy(c)
    bad["instance"] = is_orbit_closed_full(x).to_json()["instance"]
    assert verify_json(bad)


def test_malformed_input():
    assert verify_json({"type": "orbit"})
    assert verify_json({"type": "nonsense"})


def test_sl3_certificates_verify():
    rep = zoo_sl3_adjoint(2)
    assert rep.certificates and all(verify_json(c) == [] for c in rep.certificates)
