"""Acceptance criteria 1-8. Each test records one summary line."""
import json
import time

import pytest

from orbitlab.cli import main
from orbitlab.cochar import ActionInstance, Cocharacter
from orbitlab.fields import GF, QQ
from orbitlab.matrix import Matrix
from orbitlab.modules import brute_force_semisimple, centralizer_algebra, fixed_space, invariant_complement, is_semisimple_module
from orbitlab.orbits import CLOSED, NOT_CLOSED, is_orbit_closed_full
from orbitlab.tuples import MatrixTuple
from orbitlab.zoo import gl2_pair, run_suite, suite_torus, zoo_sl3_adjoint

SUMMARY: dict[int, str] = {}
CERTIFICATES: dict[int, list[dict]] = {}


def record(k: int, ok: bool, detail: str, certs: list[dict] = ()) -> None:
    SUMMARY[k] = f"criterion {k}: {'PASS' if ok else 'FAIL'} ({detail})"
    CERTIFICATES[k] = list(certs)


def results(rep) -> dict[str, bool]:
    return {r.id: r.passed for r in rep.results}


def test_criterion_1_gl2_example():
    start = time.perf_counter()
    x, y = gl2_pair(2)
    cx = is_orbit_closed_full(x)
    cy = is_orbit_closed_full(y)
    joint = is_orbit_closed_full(x.concat(y))
    limit = MatrixTuple.of(QQ, [[1, 0], [0, 2]], [[1, 0], [0, 1]])
    ok = (
        cx.verdict == NOT_CLOSED
        and cx.destabilizer == Cocharacter.diagonal(QQ, (1, -1))
        and cx.limit_value == limit
        and cy.verdict == CLOSED
        and joint.verdict == CLOSED
        and centralizer_algebra(x).dimension == 1
        and centralizer_algebra(y).dimension == 1
    )
    rep = run_suite("gl2")
    elapsed = time.perf_counter() - start
    ok = ok and rep.passed and elapsed < 1
    record(1, ok, f"x NotClosed via {cx.destabilizer.weights}, y and joint Closed, {elapsed:.2f}s", [c.to_json() for c in (cx, cy, joint)] + rep.certificates)
    assert ok


def test_criterion_2_sl3_adjoint_f4():
    start = time.perf_counter()
    rep = zoo_sl3_adjoint(2, brute_force=True)
    elapsed = time.perf_counter() - start
    res = results(rep)
    needed = [
        "module-not-semisimple",
        "h-spans-fixed-space",
        "h-no-invariant-complement",
        "brute-force-no-complement",
        "centralizer-scalars",
        "destabilizer-sends-h-to-0",
        "non-conjugacy-certified",
    ]
    ok = rep.passed and all(res.get(k) for k in needed) and elapsed < 5
    record(2, ok, f"{len(rep.results)} checks, {elapsed:.2f}s", rep.certificates)
    assert ok, rep.failures


def test_criterion_3_oracle_equivalence():
    start = time.perf_counter()
    rep = run_suite("oracle")
    elapsed = time.perf_counter() - start
    ok = rep.passed and rep.seeds["count"] >= 200 and elapsed < 60
    record(3, ok, f"{rep.results[0].detail}, {elapsed:.2f}s")
    assert ok


def test_criterion_4_lemma_suites():
    rep = run_suite("lemmas")
    ok = rep.passed and rep.seeds["count"] >= 100 and rep.seeds["block_count"] >= 50
    record(4, ok, "; ".join(f"{r.id}: {r.detail}" for r in rep.results))
    assert ok, rep.failures


def test_criterion_5_torus_cross_validation():
    start = time.perf_counter()
    rep = suite_torus()
    elapsed = time.perf_counter() - start
    ok = rep.passed and rep.seeds["count"] >= 500 and elapsed < 120
    record(5, ok, f"{rep.results[0].detail}, {elapsed:.2f}s", rep.certificates)
    assert ok, rep.failures


@pytest.fixture(scope="module")
def theorems():
    return run_suite("theorems")


def test_criterion_6_two_varieties(theorems):
    tv = {r.id: r for r in theorems.results if r.id.startswith("twovarieties")}
    count = tv.pop("twovarieties:both-not-closed-count")
    ok = len(tv) >= 20 and all(r.passed for r in tv.values()) and count.passed
    record(6, ok, f"{len(tv)} instances, both sides NotClosed on {count.detail}")
    assert ok


def test_criterion_7_htog(theorems):
    hg = [r for r in theorems.results if r.id.startswith("htog:htog")]
    other = [r for r in theorems.results if not r.id.startswith(("twovarieties", "htog"))]
    ok = len(hg) >= 10 and all(r.passed for r in hg) and all(r.passed for r in other)
    record(7, ok, f"{sum(r.passed for r in hg)}/{len(hg)} destabilizers found in the centralizer torus", theorems.certificates)
    assert ok, [r for r in hg + other if not r.passed]


def test_criterion_8_round_trip(tmp_path, capsys):
    certs = [c for k in sorted(CERTIFICATES) for c in CERTIFICATES[k]]
    missing = [k for k in range(1, 8) if k not in SUMMARY]
    bad = 0
    path = tmp_path / "cert.json"
    for c in certs:
        path.write_text(json.dumps(c))
        bad += main(["verify", str(path)]) != 0
    capsys.readouterr()
    nc = next(c for c in certs if c.get("verdict") == NOT_CLOSED)
    mutated = json.loads(json.dumps(nc))
    mutated["limit_value"]["entries"][0]["entries"][0][0] = "9"
    path.write_text(json.dumps(mutated))
    rejected = main(["verify", str(path)]) == 3
    capsys.readouterr()
    ok = not missing and len(certs) > 0 and bad == 0 and rejected
    record(8, ok, f"{len(certs) - bad}/{len(certs)} certificates re-verify, mutated certificate rejected: {rejected}")
    assert ok
