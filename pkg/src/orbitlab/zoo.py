"""Curated instances and property suites.

Each suite returns a :class:`SuiteReport`: one pass/fail line per check plus
the JSON of every certificate it produced, so the archive can be re-verified
independently.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Any, Callable

from .cochar import (
    ActionInstance,
    Cocharacter,
    PreconditionError,
    check_conjfixed,
    check_conjlim,
    grade,
    limit,
)
from .fields import GF, QQ, FieldSpec
from .matrix import Matrix, invert, solve_linear
from .modules import (
    brute_force_semisimple,
    centralizer_algebra,
    fixed_space,
    generic_tuple,
    invariant_complement,
    invariant_subspaces,
    is_semisimple_module,
    radical_flag,
    span_algebra,
)
from .orbits import (
    CLOSED,
    NOT_CLOSED,
    SubgroupSpec,
    TorusOfSubgroup,
    _flag_destabilizer,
    destabilizer_search,
    htog_check,
    is_orbit_closed_full,
    kraft_check,
    ru_system,
    torus_of_centralizer,
    two_varieties_check,
)
from .serialize import tuple_from_json
from .torus import (
    IN_RELINT,
    ON_BOUNDARY,
    OUTSIDE,
    WeightSupport,
    kempf_ratio_squared,
    limit_along,
    min_norm_point,
    min_norm_point_by_faces,
    optimal_destabilizer,
    torus_orbit_closed,
)
from .tuples import MatrixTuple
from .verify import verify_json

SUITES = ("gl2", "sl3", "lemmas", "theorems", "oracle", "torus")


@dataclass
class CheckResult:
    id: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    results: list[CheckResult] = field(default_factory=list)
    certificates: list[dict] = field(default_factory=list)
    seeds: dict = field(default_factory=dict)
    timing: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def check(self, id_: str, passed: bool, detail: str = "") -> bool:
        self.results.append(CheckResult(id_, bool(passed), detail))
        return bool(passed)

    def archive(self, cert) -> None:
        self.certificates.append(cert.to_json())

    def to_json(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "results": [{"id": r.id, "passed": r.passed, "detail": r.detail} for r in self.results],
            "certificates": self.certificates,
            "seeds": self.seeds,
            "timing": round(self.timing, 3),
        }


def load_config() -> dict[str, Any]:
    return json.loads(resources.files("orbitlab").joinpath("corpus/v1/config.json").read_text())


def load_corpus(name: str) -> list[dict[str, Any]]:
    return json.loads(resources.files("orbitlab").joinpath(f"corpus/v1/{name}.json").read_text())["instances"]


def _timed(fn: Callable[..., SuiteReport]) -> Callable[..., SuiteReport]:
    def run(*args, **kwargs) -> SuiteReport:
        start = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.timing = time.perf_counter() - start
        return rep

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# --- worked examples --------------------------------------------------------------

def gl2_pair(a, field: FieldSpec = QQ) -> tuple[MatrixTuple, MatrixTuple]:
    """x = (diag(1, a), [[1,1],[0,1]]) and y = ([[1,0],[1,1]], [[1,1],[0,1]])."""
    F = field
    x = MatrixTuple((Matrix.diag(F, [1, a]), Matrix.from_rows(F, [[1, 1], [0, 1]])))
    y = MatrixTuple.of(F, [[1, 0], [1, 1]], [[1, 1], [0, 1]])
    return x, y


@_timed
def zoo_gl2_example(a=2, field: FieldSpec = QQ) -> SuiteReport:
    F = field
    rep = SuiteReport("gl2", seeds={"a": F.format(F.convert(a)), "field": repr(F)})
    x, y = gl2_pair(a, F)
    av = F.convert(a)
    if not av or av == F.one:
        raise PreconditionError("a must avoid 0 and 1")
    cx = is_orbit_closed_full(x)
    rep.archive(cx)
    expected_limit = MatrixTuple((Matrix.diag(F, [1, a]), Matrix.identity(F, 2)))
    rep.check("x-not-closed", cx.verdict == NOT_CLOSED, cx.verdict)
    rep.check("x-destabilizer", cx.destabilizer == Cocharacter.diagonal(F, (1, -1)), repr(cx.destabilizer))
    rep.check("x-limit", cx.limit_value == expected_limit, repr(cx.limit_value))
    search = destabilizer_search(ActionInstance.conjugation(x), SubgroupSpec.full(F, 2), TorusOfSubgroup.diagonal(F, 2), 2)
    rep.archive(search)
    rep.check("x-search-first-hit", search.verdict == NOT_CLOSED and search.lattice_weights == (1, -1), repr(search.lattice_weights))
    cy = is_orbit_closed_full(y)
    rep.archive(cy)
    rep.check("y-closed", cy.verdict == CLOSED, cy.verdict)
    joint = is_orbit_closed_full(x.concat(y))
    rep.archive(joint)
    rep.check("joint-closed", joint.verdict == CLOSED, joint.verdict)
    cen_x, cen_y = centralizer_algebra(x), centralizer_algebra(y)
    rep.check("centralizers-scalar", cen_x.dimension == 1 and cen_y.dimension == 1, f"{cen_x.dimension}, {cen_y.dimension}")
    # H = C_G(y) and K = C_G(x) are scalars, so H.x = {x} and K.y = {y}
    single = all(m.is_diagonal() and m.data[0][0] == m.data[1][1] for m in cen_x.basis + cen_y.basis)
    rep.check("singleton-orbits", single, "stabilizers act trivially by conjugation")
    return rep


def rho_sl2(g: Matrix) -> Matrix:
    """[[a^2,0,b^2],[ac,1,bd],[c^2,0,d^2]] for g = [[a,b],[c,d]] (char 2 adjoint)."""
    F = g.field
    (a, b), (c, d) = g.data
    sq = lambda v: F.mul(v, v)
    return Matrix(F, [[sq(a), F.zero, sq(b)], [F.mul(a, c), F.one, F.mul(b, d)], [sq(c), F.zero, sq(d)]], 3, 3)


def adjoint_sl2(g: Matrix) -> Matrix:
    """Conjugation action of g on X = [[beta, alpha], [gamma, -beta]] in coordinates (alpha, beta, gamma)."""
    F = g.field
    gi = invert(g)
    basis = [
        Matrix.from_rows(F, [[0, 1], [0, 0]]),
        Matrix.from_rows(F, [[1, 0], [0, -1]]),
        Matrix.from_rows(F, [[0, 0], [1, 0]]),
    ]
    cols = []
    for b in basis:
        m = g @ b @ gi
        cols.append([m.data[0][1], m.data[0][0], m.data[1][0]])
    return Matrix(F, [[cols[j][i] for j in range(3)] for i in range(3)], 3, 3)


def sl2_generators(F: FieldSpec) -> list[Matrix]:
    gens = []
    scalars = [F.one] + ([F.generator] if F.k > 1 else [])
    for s in scalars:
        gens.append(Matrix(F, [[F.one, s], [F.zero, F.one]], 2, 2))
        gens.append(Matrix(F, [[F.one, F.zero], [s, F.one]], 2, 2))
    if F.order > 3:
        a = F.generator if F.k > 1 else next(v for v in F.elements() if v and F.mul(v, v) != F.one)
        gens.append(Matrix(F, [[a, F.zero], [F.zero, F.inv(a)]], 2, 2))
    return gens


def _random_sl2(F: FieldSpec, rng: random.Random) -> Matrix:
    while True:
        m = Matrix.random(F, 2, 2, rng)
        if m.det() == F.one:
            return m


@_timed
def zoo_sl3_adjoint(k: int = 2, seed: int = 0, brute_force: bool | None = None) -> SuiteReport:
    if k < 2:
        raise PreconditionError("the example needs F_{2^k} with k >= 2")
    F = GF(2, k)
    rep = SuiteReport("sl3", seeds={"k": k, "seed": seed})
    rng = random.Random(seed)
    hom_ok = True
    for _ in range(20):
        g, h = _random_sl2(F, rng), _random_sl2(F, rng)
        if rho_sl2(g @ h) != rho_sl2(g) @ rho_sl2(h) or rho_sl2(g).det() != F.one:
            hom_ok = False
    rep.check("rho-homomorphism-into-SL3", hom_ok)
    rep.check("rho-is-adjoint", all(rho_sl2(g) == adjoint_sl2(g) for g in sl2_generators(F)))
    t = MatrixTuple(tuple(rho_sl2(g) for g in sl2_generators(F)), "SL")
    full = is_orbit_closed_full(t)
    rep.archive(full)
    rep.check("module-not-semisimple", not is_semisimple_module(t) and full.verdict == NOT_CLOSED, full.verdict)
    fixed = fixed_space(t)
    h_vec = Matrix.column(F, [0, 1, 0])
    rep.check("h-spans-fixed-space", fixed.cols == 1 and fixed.hstack(h_vec).rank() == 1, f"dim {fixed.cols}")
    rep.check("h-no-invariant-complement", invariant_complement(t, h_vec) is None)
    if brute_force is None:
        brute_force = F.order ** 3 <= 64
    if brute_force:
        subs = invariant_subspaces(t)
        comp = [s for s in subs if s.cols == 2 and s.hstack(h_vec).rank() == 3]
        rep.check("brute-force-no-complement", not comp and not brute_force_semisimple(t), f"{len(subs)} invariant subspaces")
    cen = centralizer_algebra(t)
    rep.check("centralizer-scalars", cen.dimension == 1, f"dim {cen.dimension}")
    lam = Cocharacter.diagonal(F, (0, 1, -1))
    x = ActionInstance.linear(h_vec, "SL")
    rep.check("lambda-scales-h", set(grade(x, lam).support()) == {1})
    search = destabilizer_search(x, SubgroupSpec.full(F, 3, sl=True), TorusOfSubgroup.diagonal(F, 3, sl=True), 1)
    rep.archive(search)
    rep.check(
        "destabilizer-sends-h-to-0",
        search.verdict == NOT_CLOSED and search.lattice_weights == (0, 1, -1) and search.limit_value.is_zero() and search.destabilizer == lam,
        repr(search.lattice_weights),
    )
    rep.check("non-conjugacy-certified", search.nonconjugacy is not None and not verify_json(search.to_json()))
    return rep


def char3_adjoint_semisimple(k: int = 1) -> bool:
    """Adjoint module of SL_2 over F_{3^k}: semisimple, unlike characteristic 2."""
    F = GF(3, k)
    t = MatrixTuple(tuple(adjoint_sl2(g) for g in sl2_generators(F)), "SL")
    return is_semisimple_module(t)


def borel_variant(field: FieldSpec = QQ, a=2) -> dict[str, str]:
    """Generic tuples of the Borel subgroup and of GL_2, and their joint verdict."""
    F = field
    borel, _ = generic_tuple(MatrixTuple((Matrix.diag(F, [1, a]), Matrix.from_rows(F, [[1, 1], [0, 1]]))))
    full, _ = generic_tuple(MatrixTuple.of(F, [[1, 1], [0, 1]], [[1, 0], [1, 1]]))
    return {
        "borel": is_orbit_closed_full(borel).verdict,
        "full": is_orbit_closed_full(full).verdict,
        "joint": is_orbit_closed_full(borel.concat(full)).verdict,
        "borel_dim": str(span_algebra(borel).dimension),
    }


# --- random constructions --------------------------------------------------------------

def random_tuple(F: FieldSpec, n: int, length: int, rng: random.Random) -> MatrixTuple:
    """Mix of dense, sparse triangular and block-diagonal tuples."""
    mats = []
    style = rng.random()
    for _ in range(length):
        if style < 0.35:
            m = Matrix.random(F, n, n, rng)
        elif style < 0.7:
            m = Matrix(F, [[F.random(rng) if j >= i and rng.random() < 0.6 else F.zero for j in range(n)] for i in range(n)], n, n)
        else:
            cut = rng.randint(1, max(1, n - 1))
            m = Matrix(F, [[F.random(rng) if (i < cut) == (j < cut) else F.zero for j in range(n)] for i in range(n)], n, n)
        mats.append(m)
    return MatrixTuple(tuple(mats))


def _random_cochar(F: FieldSpec, n: int, rng: random.Random) -> Cocharacter:
    g = Matrix.random_invertible(F, n, rng)
    return Cocharacter(g, tuple(rng.randint(-2, 2) for _ in range(n)))


def _in_eigen(F, lam: Cocharacter, rng, allowed: Callable[[int], bool]) -> Matrix:
    """Random g Y g^-1 with Y supported on entries whose weight passes ``allowed``."""
    n, w = lam.n, lam.weights
    y = Matrix(F, [[F.random(rng) if allowed(w[i] - w[j]) else F.zero for j in range(n)] for i in range(n)], n, n)
    return lam.base_change @ y @ lam.inverse_base


def _random_unipotent(F, lam: Cocharacter, rng) -> Matrix:
    return Matrix.identity(F, lam.n) + _in_eigen(F, lam, rng, lambda d: d > 0)


def _random_instance(F, lam: Cocharacter, rng, allowed) -> ActionInstance:
    n, w = lam.n, lam.weights
    if rng.random() < 0.3:
        c = Matrix(F, [[F.random(rng) if allowed(w[i]) else F.zero] for i in range(n)], n, 1)
        return ActionInstance.linear(lam.base_change @ c)
    length = rng.randint(1, 2)
    return ActionInstance.conjugation(MatrixTuple(tuple(_in_eigen(F, lam, rng, allowed) for _ in range(length))))


@_timed
def suite_lemmas(seed: int | None = None, count: int | None = None, block_count: int | None = None) -> SuiteReport:
    cfg = load_config()
    seed = cfg["seeds"]["lemmas"] if seed is None else seed
    count = cfg["lemma_instances"] if count is None else count
    block_count = cfg["conjcochar_instances"] if block_count is None else block_count
    rep = SuiteReport("lemmas", seeds={"seed": seed, "count": count, "block_count": block_count})
    rng = random.Random(seed)
    fields = [GF(7), QQ]
    lim_fail = fixed_fail = fixed_true = 0
    for i in range(count):
        F = fields[i % 2]
        n = rng.randint(1, 4)
        lam = _random_cochar(F, n, rng)
        x = _random_instance(F, lam, rng, lambda d: d >= 0)
        u = _random_unipotent(F, lam, rng)
        if not check_conjlim(x, lam, u):
            lim_fail += 1
        # half the time x = u^-1 . x0 with x0 fixed, so u . x is the limit
        if i % 2 == 0:
            x0 = _random_instance(F, lam, rng, lambda d: d == 0)
            x = x0.act(invert(u), u)
        lhs, rhs = check_conjfixed(x, lam, u)
        fixed_true += lhs
        if lhs != rhs:
            fixed_fail += 1
    rep.check("conjlim", lim_fail == 0, f"{count} instances, {lim_fail} failures")
    rep.check("conjfixed", fixed_fail == 0 and fixed_true >= count // 2, f"{count} instances, {fixed_true} with u.x the limit, {fixed_fail} failures")
    rep.check("conjcochar", *_conjcochar_suite(rng, block_count))
    return rep


def _conjcochar_suite(rng: random.Random, count: int) -> tuple[bool, str]:
    """mu = u . lambda with u in R_u(P_lambda): mu in Y(H) iff u in H, and then the
    R_u(P_lambda) meet H system recovers u."""
    fails = inside = 0
    for i in range(count):
        F = [GF(5), QQ, GF(7)][i % 3]
        blocks = [rng.randint(1, 2) for _ in range(rng.randint(2, 3))]
        n = sum(blocks)
        H = SubgroupSpec("BlockSubgroup", n, F, tuple(blocks))
        lam = Cocharacter.diagonal(F, tuple(rng.randint(-2, 2) for _ in range(n)))
        u = _random_unipotent(F, lam, rng)
        if i % 2 == 0:
            # project onto the block-diagonal part: still in R_u(P_lambda)
            owner = [b for b, s in enumerate(blocks) for _ in range(s)]
            u = Matrix(F, [[u.data[r][c] if owner[r] == owner[c] else F.zero for c in range(n)] for r in range(n)], n, n)
        mu = Cocharacter(u @ lam.base_change, lam.weights)
        mu_in_h = H.contains_cocharacter(mu)
        u_in_h = H.contains(u)
        projectors = lambda c: MatrixTuple(tuple(p for _, p in sorted(c.projectors().items())))
        src, dst = ActionInstance.conjugation(projectors(lam)), projectors(mu)
        system = ru_system(src, lam, H, dst)
        sol = solve_linear(system.matrix, system.rhs) if system.variables else None
        found = None
        if sol is not None:
            nmat = [[F.zero] * n for _ in range(n)]
            for (r, c), row in zip(system.variables, sol.particular.data):
                nmat[r][c] = row[0]
            found = lam.base_change @ (Matrix.identity(F, n) + Matrix(F, nmat, n, n)) @ lam.inverse_base
        elif not system.variables and mu == lam:
            found = Matrix.identity(F, n)
        ok = mu_in_h == u_in_h
        if mu_in_h:
            inside += 1
            ok = ok and found is not None and found == u
        else:
            ok = ok and found is None
        fails += not ok
    return fails == 0 and inside >= count // 4, f"{count} instances, {inside} with mu in Y(H), {fails} failures"


# --- theorem suites -------------------------------------------------------------------------

def _block_semisimple(a: MatrixTuple, blocks: list[int]) -> bool:
    pos = 0
    for size in blocks:
        idx = list(range(pos, pos + size))
        sub = MatrixTuple(tuple(m.submatrix(idx, idx) for m in a.entries), None, a.field, size)
        if not is_semisimple_module(sub):
            return False
        pos += size
    return True


@_timed
def suite_theorems(bound: int | None = None, seed: int | None = None) -> SuiteReport:
    cfg = load_config()
    bound = cfg["bound"] if bound is None else bound
    seed = cfg["seeds"]["theorems"] if seed is None else seed
    rep = SuiteReport("theorems", seeds={"seed": seed, "bound": bound})
    rng = random.Random(seed)

    # two varieties
    both = 0
    tv = load_corpus("twovarieties")
    for inst in tv:
        x, y = tuple_from_json(inst["x"]), tuple_from_json(inst["y"])
        r = two_varieties_check(x, y, bound)
        for c in (r.hx, r.ky, r.joint):
            rep.archive(c)
        both += r.both_not_closed
        ok = r.consistent
        if inst.get("expect_both_not_closed") is not None:
            ok = ok and r.both_not_closed == inst["expect_both_not_closed"]
        rep.check(f"twovarieties:{inst['id']}", ok, json.dumps(r.to_json()))
    rep.check("twovarieties:both-not-closed-count", len(tv) >= 20 and both >= 5, f"{both} of {len(tv)}")

    # H to G
    hg = load_corpus("htog")
    for inst in hg:
        x, a = tuple_from_json(inst["x"]), tuple_from_json(inst["a"])
        r = htog_check(x, a, bound)
        rep.archive(r.full)
        if r.search is not None:
            rep.archive(r.search)
        rep.check(f"htog:{inst['id']}", r.status == "found", f"{r.status} {r.search.lattice_weights if r.search else ''}")
    rep.check("htog:count", len(hg) >= 10, f"{len(hg)} instances")

    # H containing G_x: centralizers of elements of the algebra of x
    hk_fail = hk_runs = 0
    for inst in tv:
        x = tuple_from_json(inst["x"])
        if is_orbit_closed_full(x).verdict != CLOSED:
            continue
        for m in x.entries:
            t = MatrixTuple((m,))
            if m.rank() < m.rows or not is_semisimple_module(t):
                continue
            res = destabilizer_search(ActionInstance.conjugation(x), SubgroupSpec.centralizer(t), torus_of_centralizer(t), bound)
            hk_runs += 1
            hk_fail += res.verdict == NOT_CLOSED
    rep.check("HKsubgroup", hk_fail == 0 and hk_runs > 0, f"{hk_runs} searches, {hk_fail} certified non-closed")

    # G_x a block subgroup: x = diag(c1 I, c2 I), A inside G_x
    luna_fail = 0
    luna_runs = 0
    for F, blocks in [(QQ, [1, 2]), (GF(5), [2, 1]), (GF(7), [2, 2]), (QQ, [2, 2])]:
        n = sum(blocks)
        vals = [c for c, s in zip((2, 3), blocks) for _ in range(s)]
        x = MatrixTuple((Matrix.diag(F, vals),))
        owner = [b for b, s in enumerate(blocks) for _ in range(s)]
        for trial in range(3):
            a_mats = []
            for _ in range(2):
                m = Matrix.random_invertible(F, n, rng)
                m = Matrix(F, [[m.data[i][j] if owner[i] == owner[j] else F.zero for j in range(n)] for i in range(n)], n, n)
                if m.rank() < n:
                    m = Matrix.identity(F, n)
                a_mats.append(m)
            a = MatrixTuple(tuple(a_mats))
            if not is_semisimple_module(a):
                continue
            luna_runs += 1
            gx_cr = _block_semisimple(a, blocks)
            res = destabilizer_search(ActionInstance.conjugation(x), SubgroupSpec.centralizer(a), torus_of_centralizer(a), bound)
            if not gx_cr or res.verdict == NOT_CLOSED:
                luna_fail += 1
    rep.check("luna-ii-block", luna_fail == 0 and luna_runs > 0, f"{luna_runs} instances, {luna_fail} contradictions")

    # maximal torus in the stabilizer
    kraft_ok = True
    for F in (QQ, GF(2), GF(3)):
        for trial in range(3):
            n = rng.randint(1, 3)
            t = MatrixTuple(tuple(Matrix.diag(F, [F.random(rng) for _ in range(n)]) for _ in range(2)))
            kraft_ok &= kraft_check(t)
            if F.kind == "Fq":
                kraft_ok &= brute_force_semisimple(t)
            g = Matrix.random_invertible(F, n, rng)
            kraft_ok &= kraft_check(t.conjugate(g), g)
    rep.check("kraft", kraft_ok)

    # Borel generic tuple against the full-group one
    bv = borel_variant(QQ, 2)
    rep.check("borel-generic-tuple", bv["borel"] == NOT_CLOSED and bv["full"] == CLOSED and bv["joint"] == CLOSED, json.dumps(bv))

    # full verdict against bounded search on a flag-adapted torus, and conjugation invariance
    agree_fail = 0
    for i in range(40):
        F = GF(2) if i % 2 else GF(3)
        n = rng.randint(1, 3)
        t = random_tuple(F, n, rng.randint(1, 2), rng)
        full = is_orbit_closed_full(t)
        if full.verdict == CLOSED:
            torus = TorusOfSubgroup.diagonal(F, n)
            agree_fail += not brute_force_semisimple(t)
        else:
            lam = _flag_destabilizer(t, radical_flag(t), False)
            torus = TorusOfSubgroup(lam.base_change, tuple((j,) for j in range(n)), False, "flag basis")
        res = destabilizer_search(ActionInstance.conjugation(t), SubgroupSpec.full(F, n), torus, 3)
        if res.verdict == NOT_CLOSED and full.verdict != NOT_CLOSED:
            agree_fail += 1
        if full.verdict == NOT_CLOSED and res.verdict != NOT_CLOSED:
            agree_fail += 1
        g = Matrix.random_invertible(F, n, rng)
        agree_fail += is_orbit_closed_full(t.conjugate(g)).verdict != full.verdict
    rep.check("full-vs-search-agreement", agree_fail == 0, f"{agree_fail} disagreements")
    return rep


# --- oracle and torus cross-validation --------------------------------------------------------

@_timed
def suite_oracle(seed: int | None = None, count: int | None = None) -> SuiteReport:
    cfg = load_config()
    seed = cfg["seeds"]["oracle"] if seed is None else seed
    count = cfg["oracle_instances"] if count is None else count
    rep = SuiteReport("oracle", seeds={"seed": seed, "count": count})
    rng = random.Random(seed)
    bad = closed = 0
    for i in range(count):
        F = GF(2) if i % 2 else GF(3)
        t = random_tuple(F, rng.randint(1, 3), rng.randint(1, 3), rng)
        a, b = is_semisimple_module(t), brute_force_semisimple(t)
        closed += a
        bad += a != b
    rep.check("radical-vs-brute-force", bad == 0, f"{count} tuples, {closed} semisimple, {bad} disagreements")
    return rep


def _pair(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def enumerated_kind(s: WeightSupport, bound: int = 9) -> str:
    """Classify by brute force over primitive w with max|w_i| <= bound."""
    import itertools
    from math import gcd

    kind = IN_RELINT
    for w in itertools.product(range(-bound, bound + 1), repeat=s.rank):
        if gcd(*w) != 1:
            continue
        vals = [_pair(chi, w) for chi in s.weights]
        if vals and all(v > 0 for v in vals):
            return OUTSIDE
        if vals and all(v >= 0 for v in vals) and any(v > 0 for v in vals):
            kind = ON_BOUNDARY
    return kind


def cone_ray_height(s: WeightSupport) -> int:
    """Largest entry of the primitive rays perpendicular to support weights (rank <= 2)."""
    from math import gcd

    best = 0
    for chi in s.weights:
        if s.rank == 1 or not any(chi):
            best = max(best, 1)
            continue
        a, b = chi
        g = gcd(a, b)
        best = max(best, abs(a) // g, abs(b) // g)
    return best


@_timed
def suite_torus(seed: int | None = None, count: int | None = None) -> SuiteReport:
    import itertools
    from math import gcd

    cfg = load_config()
    seed = cfg["seeds"]["torus"] if seed is None else seed
    count = cfg["torus_instances"] if count is None else count
    rep = SuiteReport("torus", seeds={"seed": seed, "count": count})
    rng = random.Random(seed)
    cands = {r: [w for w in itertools.product(range(-9, 10), repeat=r) if gcd(*w) == 1] for r in (1, 2)}
    disagree = kempf_fail = height_fail = cert_fail = scale_fail = limit_fail = 0
    for i in range(count):
        r = 1 + (i % 2)
        k = rng.randint(1, 6)
        s = WeightSupport(r, tuple(tuple(rng.randint(-3, 3) for _ in range(r)) for _ in range(k)))
        cert = torus_orbit_closed(s)
        rep.certificates.append(cert.to_json())
        cert_fail += bool(verify_json(cert.to_json()))
        height_fail += cone_ray_height(s) > 9
        if cert.kind != enumerated_kind(s):
            disagree += 1
        if cert.kind == OUTSIDE:
            w = optimal_destabilizer(s)
            if min_norm_point(s) != min_norm_point_by_faces(s):
                kempf_fail += 1
            best = kempf_ratio_squared(s, w)
            for v in cands[r]:
                sv = kempf_ratio_squared(s, v)
                if sv[0] > 0 and (best[0] <= 0 or sv[1] > best[1]):
                    kempf_fail += 1
                    break
            lim = limit_along(s, None, w)
            limit_fail += not (lim.exists and all(c == 0 for c in lim.value))
            scale_fail += optimal_destabilizer(s.scaled(2)) != w
    rep.check("closedness-vs-enumeration", disagree == 0, f"{count} supports, {disagree} disagreements")
    rep.check("kempf-optimality", kempf_fail == 0, f"{kempf_fail} failures")
    rep.check("enumeration-bound-covers-cone-rays", height_fail == 0)
    rep.check("certificates-verify", cert_fail == 0)
    rep.check("scaling-invariance", scale_fail == 0)
    rep.check("optimal-limit-is-zero", limit_fail == 0)
    rep.check("limit-matches-cochar", *_torus_vs_cochar(rng, 50))
    return rep


def _torus_vs_cochar(rng: random.Random, count: int) -> tuple[bool, str]:
    """Diagonal torus on k^n: limit_along and the cocharacter limit agree."""
    fails = 0
    for _ in range(count):
        n = rng.randint(1, 4)
        w = tuple(rng.randint(-2, 2) for _ in range(n))
        coords = [Fraction(rng.randint(-2, 2)) for _ in range(n)]
        weights = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        nz = [i for i in range(n) if coords[i]]
        s = WeightSupport(n, tuple(weights[i] for i in nz))
        lt = limit_along(s, [coords[i] for i in nz], w)
        lc = limit(ActionInstance.linear(Matrix.column(QQ, coords)), Cocharacter.diagonal(QQ, w))
        if lt.exists != lc.exists:
            fails += 1
            continue
        if lt.exists:
            full = [Fraction(0)] * n
            for i, c in zip(nz, lt.value):
                full[i] = c
            fails += [r[0] for r in lc.value.data] != full
    return fails == 0, f"{count} instances, {fails} failures"


def merge_reports(suite: str, parts: list[tuple[str, SuiteReport]]) -> SuiteReport:
    out = SuiteReport(suite)
    for tag, rep in parts:
        out.results += [CheckResult(f"{tag}:{r.id}", r.passed, r.detail) for r in rep.results]
        out.certificates += rep.certificates
        out.seeds[tag] = rep.seeds
        out.timing += rep.timing
    return out


def run_suite(name: str) -> SuiteReport:
    cfg = load_config()
    if name == "gl2":
        f4 = GF(2, 2)
        return merge_reports("gl2", [("a2", zoo_gl2_example(cfg["a"], QQ)), ("a3", zoo_gl2_example(3, QQ)), ("f4", zoo_gl2_example(f4.element(f4.generator), f4))])
    if name == "sl3":
        rep = merge_reports("sl3", [("f4", zoo_sl3_adjoint(2, cfg["seeds"]["sl3"])), ("f16", zoo_sl3_adjoint(4, cfg["seeds"]["sl3"], brute_force=False))])
        rep.check("char3:adjoint-semisimple", char3_adjoint_semisimple(1) and char3_adjoint_semisimple(2))
        return rep
    if name == "lemmas":
        return suite_lemmas()
    if name == "theorems":
        return suite_theorems()
    if name == "oracle":
        return suite_oracle()
    if name == "torus":
        return suite_torus()
    raise PreconditionError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


def list_instances() -> list[dict[str, str]]:
    out = [
        {"id": "gl2-a2", "suite": "gl2", "provenance": "WorkedExample", "description": "GL_2 pair x, y with a = 2"},
        {"id": "sl3-f4", "suite": "sl3", "provenance": "WorkedExample", "description": "char 2 adjoint of SL_2 over F_4"},
    ]
    for name, suite in (("twovarieties", "theorems"), ("htog", "theorems")):
        for inst in load_corpus(name):
            out.append({"id": inst["id"], "suite": suite, "provenance": inst["provenance"], "description": inst["description"]})
    return out
