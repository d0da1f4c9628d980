"""Closed-orbit decisions with certificates.

Full-group conjugation actions are decided exactly (closed iff the module is
semisimple).  Subgroup and linear actions get a bounded search over the
cocharacters of a torus: for each lambda whose limit exists, the limit must be
conjugate back to x by R_u(P_lambda) meet H, and a failure of that affine
system is a certified proof that the orbit is not closed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Iterator, Sequence

from .cochar import (
    ActionInstance,
    Cocharacter,
    PreconditionError,
    act_on_cocharacter,
    is_fixed,
    limit,
    points_equal,
    ru_p_lambda_contains,
)
from .fields import FieldSpec
from .matrix import Matrix, inconsistency_witness, invert, rref, solve_linear
from .modules import (
    intertwiner_basis,
    invariant_complement,
    irreducible_summands,
    is_semisimple_module,
    modules_isomorphic,
    radical_flag,
    span_algebra,
)
from .serialize import (
    cochar_from_json,
    cochar_to_json,
    instance_from_json,
    instance_to_json,
    matrix_from_json,
    matrix_to_json,
    point_from_json,
    point_to_json,
    tuple_from_json,
    tuple_to_json,
)
from .tuples import MatrixTuple

DEFAULT_BOUND = 3

CLOSED = "Closed"
NOT_CLOSED = "NotClosed"
NO_DESTABILIZER = "NoDestabilizerUpToBound"


class InconsistencyError(RuntimeError):
    """An internal invariant failed (a computed result contradicts a check)."""


# --- subgroups ---------------------------------------------------------------

SUBGROUP_KINDS = ("FullGL", "FullSL", "DiagonalTorus", "BlockSubgroup", "CentralizerUnits", "FiniteList")


@dataclass(frozen=True, eq=False)
class SubgroupSpec:
    """A subgroup H of GL_n: the units of a unital subalgebra, optionally meet SL_n.

    FiniteList is the exception: an explicit list of elements with no linear
    description.
    """

    kind: str
    n: int
    field: FieldSpec
    blocks: tuple[int, ...] = ()
    centralizes: MatrixTuple | None = None
    elements: tuple[Matrix, ...] = ()
    det_one: bool = False

    def __post_init__(self):
        if self.kind not in SUBGROUP_KINDS:
            raise ValueError(f"unknown subgroup kind {self.kind!r}")
        if self.kind == "FullSL":
            object.__setattr__(self, "det_one", True)
        if self.kind == "BlockSubgroup" and sum(self.blocks) != self.n:
            raise ValueError("block sizes must sum to n")
        if self.kind == "CentralizerUnits" and (self.centralizes is None or self.centralizes.n != self.n):
            raise ValueError("CentralizerUnits needs a tuple of matching size")

    @classmethod
    def full(cls, field: FieldSpec, n: int, sl: bool = False) -> "SubgroupSpec":
        return cls("FullSL" if sl else "FullGL", n, field)

    @classmethod
    def centralizer(cls, t: MatrixTuple, sl: bool = False) -> "SubgroupSpec":
        return cls("CentralizerUnits", t.n, t.field, centralizes=t, det_one=sl)

    def condition_rows(self) -> list[list]:
        """Linear functionals on row-major vec(g) cutting out the linear span of H."""
        F, n = self.field, self.n
        rows: list[list] = []
        if self.kind == "DiagonalTorus":
            for i in range(n):
                for j in range(n):
                    if i != j:
                        r = [F.zero] * (n * n)
                        r[i * n + j] = F.one
                        rows.append(r)
        elif self.kind == "BlockSubgroup":
            owner = [b for b, size in enumerate(self.blocks) for _ in range(size)]
            for i in range(n):
                for j in range(n):
                    if owner[i] != owner[j]:
                        r = [F.zero] * (n * n)
                        r[i * n + j] = F.one
                        rows.append(r)
        elif self.kind == "CentralizerUnits":
            for m in self.centralizes.entries:
                for r_ in range(n):
                    for c in range(n):
                        r = [F.zero] * (n * n)
                        for k in range(n):
                            if m.data[k][c]:
                                r[r_ * n + k] = F.add(r[r_ * n + k], m.data[k][c])
                            if m.data[r_][k]:
                                r[k * n + c] = F.sub(r[k * n + c], m.data[r_][k])
                        if any(r):
                            rows.append(r)
            if rows:
                red = rref(Matrix(F, rows, len(rows), n * n))
                rows = [list(red.matrix.data[i]) for i in range(red.rank)]
        return rows

    def satisfies_conditions(self, m: Matrix) -> bool:
        F = self.field
        vec = m.flatten()
        for r in self.condition_rows():
            acc = F.zero
            for a, b in zip(r, vec):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            if acc:
                return False
        return True

    def contains(self, g: Matrix) -> bool:
        if g.shape != (self.n, self.n) or g.field != self.field or g.rank() < self.n:
            return False
        if self.kind == "FiniteList":
            return any(g == e for e in self.elements)
        if self.det_one and g.det() != self.field.one:
            return False
        return self.satisfies_conditions(g)

    def contains_cocharacter(self, lam: Cocharacter) -> bool:
        if lam.n != self.n or lam.field != self.field:
            return False
        if self.kind == "FiniteList":
            return lam.is_trivial()
        if self.det_one and sum(lam.weights) != 0:
            return False
        return all(self.satisfies_conditions(p) for p in lam.projectors().values())

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind, "n": self.n, "field": self.field.to_json(), "det_one": self.det_one}
        if self.kind == "BlockSubgroup":
            out["blocks"] = list(self.blocks)
        if self.kind == "CentralizerUnits":
            out["tuple"] = tuple_to_json(self.centralizes)
        if self.kind == "FiniteList":
            out["elements"] = [matrix_to_json(e) for e in self.elements]
        return out

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> "SubgroupSpec":
        F = FieldSpec.from_json(d["field"])
        kind = d["kind"]
        cent = tuple_from_json(d["tuple"]) if kind == "CentralizerUnits" else None
        elems = tuple(matrix_from_json(e) for e in d.get("elements", ()))
        return cls(kind, int(d["n"]), F, tuple(d.get("blocks", ())), cent, elems, bool(d.get("det_one", False)))


# --- tori -----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TorusOfSubgroup:
    """Split torus g * {diag constant on each block} * g^-1, optionally meet SL_n.

    ``blocks`` partitions range(n) into consecutive index lists; the lattice
    of cocharacters is {w constant on blocks} (with sum(w) = 0 if det_one).
    """

    base_change: Matrix
    blocks: tuple[tuple[int, ...], ...]
    det_one: bool = False
    description: str = ""

    @classmethod
    def diagonal(cls, field: FieldSpec, n: int, sl: bool = False) -> "TorusOfSubgroup":
        return cls(Matrix.identity(field, n), tuple((i,) for i in range(n)), sl, "diagonal")

    @property
    def n(self) -> int:
        return self.base_change.rows

    @property
    def field(self) -> FieldSpec:
        return self.base_change.field

    @property
    def rank(self) -> int:
        return len(self.blocks) - (1 if self.det_one else 0)

    def weights_from_coeffs(self, c: Sequence[int]) -> tuple[int, ...]:
        w = [0] * self.n
        for coeff, blk in zip(c, self.blocks):
            for i in blk:
                w[i] = coeff
        return tuple(w)

    def cocharacter(self, w: Sequence[int]) -> Cocharacter:
        return Cocharacter(self.base_change, tuple(w))

    def basis(self) -> list[Cocharacter]:
        """Lattice basis: block indicators, or consecutive differences under SL."""
        r = len(self.blocks)
        out = []
        if not self.det_one:
            for k in range(r):
                out.append(self.cocharacter(self.weights_from_coeffs([1 if j == k else 0 for j in range(r)])))
        else:
            sizes = [len(b) for b in self.blocks]
            for k in range(r - 1):
                c = [0] * r
                g = gcd(sizes[k], sizes[k + 1])
                c[k], c[k + 1] = sizes[k + 1] // g, -sizes[k] // g
                out.append(self.cocharacter(self.weights_from_coeffs(c)))
        return out

    def lattice(self, bound: int) -> list[tuple[int, ...]]:
        """Primitive lattice vectors with max|w_i| <= bound, in canonical order."""
        sizes = [len(b) for b in self.blocks]
        seen = set()
        for c in itertools.product(range(-bound, bound + 1), repeat=len(self.blocks)):
            g = 0
            for x in c:
                g = gcd(g, x)
            if g != 1:
                continue
            if self.det_one and sum(x * s for x, s in zip(c, sizes)) != 0:
                continue
            seen.add(self.weights_from_coeffs(c))
        return sorted(seen, key=weight_order_key)

    def to_json(self) -> dict[str, Any]:
        return {
            "base_change": matrix_to_json(self.base_change),
            "blocks": [list(b) for b in self.blocks],
            "det_one": self.det_one,
            "description": self.description,
        }

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> "TorusOfSubgroup":
        return cls(matrix_from_json(d["base_change"]), tuple(tuple(b) for b in d["blocks"]), bool(d.get("det_one", False)), d.get("description", ""))


def weight_order_key(w: Sequence[int]):
    """Canonical order: small |sum|, then small height, then descending lex."""
    return (abs(sum(w)), max((abs(x) for x in w), default=0), tuple(-x for x in w))


def _complements_along_flag(t: MatrixTuple, flag: Sequence[Matrix]) -> list[Matrix]:
    """Invariant pieces M_s with L_s = M_s + L_{s+1}, in the coordinates of k^n."""
    pieces = []
    for s in range(len(flag) - 1):
        cur, nxt = flag[s], flag[s + 1]
        if cur.cols == nxt.cols:
            continue
        local = t.restrict(cur)
        if nxt.cols:
            sol = solve_linear(cur, nxt)
            if sol is None:
                raise PreconditionError("flag is not nested")
            sub = sol.particular
        else:
            sub = Matrix(t.field, [[] for _ in range(cur.cols)], cur.cols, 0)
        comp = invariant_complement(local, sub)
        if comp is None:
            raise PreconditionError("flag layer has no invariant complement")
        pieces.append(cur @ comp)
    return pieces


def torus_of_centralizer(t: MatrixTuple, flag: Sequence[Matrix] | None = None, seed: int = 0, sl: bool = False) -> TorusOfSubgroup:
    """A split torus of the centralizer: one scaling per irreducible summand.

    With ``flag`` (a chain of t-invariant subspaces from k^n down to 0) the
    summands are chosen inside invariant complements of consecutive layers, so
    the torus contains cocharacters adapted to the flag.
    """
    if not is_semisimple_module(t):
        raise PreconditionError("centralizer torus needs a semisimple tuple")
    F, n = t.field, t.n
    if flag is None:
        flag = [Matrix.identity(F, n), Matrix(F, [[] for _ in range(n)], n, 0)]
    cols: list[Matrix] = []
    blocks = []
    pos = 0
    for piece in _complements_along_flag(t, flag):
        for sub in irreducible_summands(t.restrict(piece), seed):
            b = piece @ sub
            cols.append(b)
            blocks.append(tuple(range(pos, pos + b.cols)))
            pos += b.cols
    g = Matrix.from_columns(F, cols, n)
    if invert(g) is None:
        raise InconsistencyError("summands do not span")
    return TorusOfSubgroup(g, tuple(blocks), sl, "centralizer" if len(flag) == 2 else "centralizer, flag-adapted")


def default_torus(H: SubgroupSpec, x: ActionInstance | None = None, seed: int = 0) -> TorusOfSubgroup:
    """The torus searched when none is supplied.

    Diagonal for the full, diagonal and block subgroups, the centralizer torus
    (adapted to the radical flag of a conjugation instance) for
    CentralizerUnits, and the rank-0 torus for a finite list.
    """
    F, n = H.field, H.n
    if H.kind in ("FullGL", "FullSL", "DiagonalTorus", "BlockSubgroup"):
        return TorusOfSubgroup.diagonal(F, n, H.det_one)
    if H.kind == "CentralizerUnits":
        t = H.centralizes
        if x is not None and x.kind == "conjugation":
            flag = radical_flag(x.point)
            if all(t.is_invariant(layer) for layer in flag if layer.cols):
                return torus_of_centralizer(t, flag, seed, H.det_one)
        return torus_of_centralizer(t, None, seed, H.det_one)
    return TorusOfSubgroup(Matrix.identity(F, n), (tuple(range(n)),), True, "trivial")


# --- certificates ---------------------------------------------------------------

@dataclass
class Certificate:
    verdict: str
    instance: ActionInstance
    subgroup: SubgroupSpec | None = None
    destabilizer: Cocharacter | None = None
    limit_value: Any = None
    nonconjugacy: dict | None = None
    semisimplicity: dict | None = None
    search_bound: int | None = None
    torus_used: TorusOfSubgroup | None = None
    seed: int = 0
    searched: int | None = None
    lattice_weights: tuple[int, ...] | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "type": "orbit",
            "verdict": self.verdict,
            "instance": instance_to_json(self.instance),
            "subgroup": self.subgroup.to_json() if self.subgroup else None,
            "destabilizer": cochar_to_json(self.destabilizer) if self.destabilizer else None,
            "limit_value": point_to_json(self.instance.kind, self.limit_value) if self.limit_value is not None else None,
            "nonconjugacy": self.nonconjugacy,
            "semisimplicity": self.semisimplicity,
            "search_bound": self.search_bound,
            "torus_used": self.torus_used.to_json() if self.torus_used else None,
            "searched": self.searched,
            "lattice_weights": list(self.lattice_weights) if self.lattice_weights is not None else None,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> "Certificate":
        x = instance_from_json(d["instance"])
        return cls(
            verdict=d["verdict"],
            instance=x,
            subgroup=SubgroupSpec.from_json(d["subgroup"]) if d.get("subgroup") else None,
            destabilizer=cochar_from_json(d["destabilizer"]) if d.get("destabilizer") else None,
            limit_value=point_from_json(x.kind, d["limit_value"]) if d.get("limit_value") is not None else None,
            nonconjugacy=d.get("nonconjugacy"),
            semisimplicity=d.get("semisimplicity"),
            search_bound=d.get("search_bound"),
            torus_used=TorusOfSubgroup.from_json(d["torus_used"]) if d.get("torus_used") else None,
            seed=int(d.get("seed", 0)),
            searched=d.get("searched"),
            lattice_weights=tuple(d["lattice_weights"]) if d.get("lattice_weights") is not None else None,
        )


# --- full group -------------------------------------------------------------------

def _flag_destabilizer(t: MatrixTuple, flag: list[Matrix], sl: bool) -> Cocharacter:
    """Cocharacter scaling layer s of the flag by t^(2s - (m-1)), deepest layer first."""
    F, n = t.field, t.n
    m = len(flag) - 1
    cols: list[Matrix] = []
    weights: list[int] = []
    current = Matrix(F, [[] for _ in range(n)], n, 0)
    for s in range(m - 1, -1, -1):
        layer = flag[s]
        for j in range(layer.cols):
            v = layer.col(j)
            cand = current.hstack(v)
            if cand.rank() > current.cols:
                current = cand
                weights.append(2 * s - (m - 1))
    if sl:
        total = sum(weights)
        weights = [n * w - total for w in weights]
    g = 0
    for w in weights:
        g = gcd(g, w)
    if g > 1:
        weights = [w // g for w in weights]
    return Cocharacter(current, tuple(weights))


def _semisimplicity_data(t: MatrixTuple) -> dict[str, Any]:
    alg = span_algebra(t)
    return {"algebra_dim": alg.dimension, "radical_dim": len(alg.radical_basis)}


def is_orbit_closed_full(t: MatrixTuple, seed: int = 0) -> Certificate:
    """Exact verdict for GL_n (or SL_n when det_constraint is 'SL') acting by conjugation."""
    sl = t.det_constraint == "SL"
    x = ActionInstance.conjugation(t)
    H = SubgroupSpec.full(t.field, t.n, sl)
    data = _semisimplicity_data(t)
    if data["radical_dim"] == 0:
        return Certificate(CLOSED, x, H, semisimplicity=data, seed=seed)
    flag = radical_flag(t)
    lam = _flag_destabilizer(t, flag, sl)
    lim = limit(x, lam)
    if not lim.exists:
        raise InconsistencyError("flag cocharacter has no limit")
    iso = modules_isomorphic(t, lim.value, seed)
    if iso.isomorphic:
        raise InconsistencyError("limit of a non-semisimple tuple is conjugate to it")
    lim_data = _semisimplicity_data(lim.value)
    if lim_data["radical_dim"] != 0:
        raise InconsistencyError("flag limit is not semisimple")
    nonconj = {
        "method": "module_nonisomorphism",
        "reason": iso.reason,
        "hom_dims": list(iso.hom_dims),
        "limit_semisimple": True,
        "instance_semisimple": False,
    }
    data["flag_dims"] = [f.cols for f in flag]
    return Certificate(NOT_CLOSED, x, H, lam, lim.value, nonconj, data, seed=seed)


# --- R_u(P_lambda) conjugacy ---------------------------------------------------------

@dataclass
class RuSystem:
    variables: list[tuple[int, int]]
    matrix: Matrix
    rhs: Matrix


@dataclass
class RuConjugacy:
    witness: Matrix | None
    system: RuSystem | None = None
    inconsistency: Matrix | None = None
    method: str = "ru_affine_system"


def _flat_instances(x: ActionInstance) -> list[ActionInstance]:
    if x.kind == "product":
        return [f for part in x.point for f in _flat_instances(part)]
    return [x]


def ru_system(x: ActionInstance, lam: Cocharacter, H: SubgroupSpec, target) -> RuSystem:
    """Affine system in N for u = g (I + N) g^-1 with u . x = target, u in H."""
    F, n = lam.field, lam.n
    g, gi, w = lam.base_change, lam.inverse_base, lam.weights
    variables = [(i, j) for i in range(n) for j in range(n) if w[i] > w[j]]
    index = {v: k for k, v in enumerate(variables)}
    nv = len(variables)
    rows: list[list] = []
    rhs: list = []
    tgt = x.with_point(target)
    for src, dst in zip(_flat_instances(x), _flat_instances(tgt)):
        if src.kind == "linear":
            v, vp = gi @ src.point, gi @ dst.point
            for r in range(n):
                row = [F.zero] * nv
                for k in range(n):
                    if (r, k) in index and v.data[k][0]:
                        row[index[(r, k)]] = v.data[k][0]
                rows.append(row)
                rhs.append(F.sub(vp.data[r][0], v.data[r][0]))
        else:
            for X, Xp in zip(src.point.entries, dst.point.entries):
                Y, Yp = gi @ X @ g, gi @ Xp @ g
                for r in range(n):
                    for c in range(n):
                        row = [F.zero] * nv
                        for k in range(n):
                            if (r, k) in index and Y.data[k][c]:
                                idx = index[(r, k)]
                                row[idx] = F.add(row[idx], Y.data[k][c])
                            if (k, c) in index and Yp.data[r][k]:
                                idx = index[(k, c)]
                                row[idx] = F.sub(row[idx], Yp.data[r][k])
                        rows.append(row)
                        rhs.append(F.sub(Yp.data[r][c], Y.data[r][c]))
    if H.kind != "FiniteList":
        ident = Matrix.identity(F, n).flatten()
        for cond in H.condition_rows():
            row = [F.zero] * nv
            for (i, j), idx in index.items():
                acc = F.zero
                for a in range(n):
                    if not g.data[a][i]:
                        continue
                    for b in range(n):
                        c = cond[a * n + b]
                        if c and gi.data[j][b]:
                            acc = F.add(acc, F.mul(c, F.mul(g.data[a][i], gi.data[j][b])))
                row[idx] = acc
            at_identity = F.zero
            for c, e in zip(cond, ident):
                if c and e:
                    at_identity = F.add(at_identity, F.mul(c, e))
            rows.append(row)
            rhs.append(F.neg(at_identity))
    return RuSystem(variables, Matrix(F, rows, len(rows), nv), Matrix(F, [[b] for b in rhs], len(rhs), 1))


def _no_var_witness(system: RuSystem) -> Matrix | None:
    F = system.rhs.field
    for k, r in enumerate(system.rhs.data):
        if r[0]:
            return Matrix(F, [[F.one if i == k else F.zero for i in range(system.rhs.rows)]], 1, system.rhs.rows)
    return None


def ru_conjugacy_back(x: ActionInstance, lam: Cocharacter, H: SubgroupSpec) -> RuConjugacy:
    """u in R_u(P_lambda) meet H with u . x = lim lambda(t) . x, or a certified refusal."""
    lim = limit(x, lam)
    if not lim.exists:
        raise PreconditionError("limit does not exist")
    F, n = lam.field, lam.n
    if points_equal(x.kind, lim.value, x.point):
        return RuConjugacy(Matrix.identity(F, n), method="fixed")
    if H.kind == "FiniteList":
        for u in H.elements:
            if ru_p_lambda_contains(u, lam) and points_equal(x.kind, x.act(u).point, lim.value):
                return RuConjugacy(u, method="finite_list")
        return RuConjugacy(None, method="finite_list")
    system = ru_system(x, lam, H, lim.value)
    if not system.variables:
        return RuConjugacy(None, system, _no_var_witness(system))
    sol = solve_linear(system.matrix, system.rhs)
    if sol is None:
        return RuConjugacy(None, system, inconsistency_witness(system.matrix, system.rhs))
    nmat = [[F.zero] * n for _ in range(n)]
    for (i, j), row in zip(system.variables, sol.particular.data):
        nmat[i][j] = row[0]
    u = lam.base_change @ (Matrix.identity(F, n) + Matrix(F, nmat, n, n)) @ lam.inverse_base
    if not (ru_p_lambda_contains(u, lam) and H.contains(u) and points_equal(x.kind, x.act(u).point, lim.value)):
        raise InconsistencyError("unipotent witness fails substitution")
    # u.x is the limit iff u^-1 . lambda fixes x
    if not is_fixed(x, act_on_cocharacter(invert(u), lam)):
        raise InconsistencyError("witness contradicts the fixed-cocharacter criterion")
    return RuConjugacy(u, system)


# --- bounded search ---------------------------------------------------------------

def _support_pattern(x: ActionInstance, torus: TorusOfSubgroup) -> tuple[set, set]:
    """Nonzero (i, j) conjugation entries and nonzero linear coordinates in the torus basis."""
    g = torus.base_change
    gi = invert(g)
    pairs, coords = set(), set()
    for f in _flat_instances(x):
        if f.kind == "linear":
            v = gi @ f.point
            coords |= {i for i in range(v.rows) if v.data[i][0]}
        else:
            for m in f.point.entries:
                y = gi @ m @ g
                pairs |= {(i, j) for i in range(y.rows) for j in range(y.cols) if y.data[i][j]}
    return pairs, coords


def destabilizer_search(x: ActionInstance, H: SubgroupSpec, torus: TorusOfSubgroup, bound: int = DEFAULT_BOUND, seed: int = 0) -> Certificate:
    """Hilbert-Mumford search over the torus lattice up to ``bound``."""
    if bound < 1:
        raise PreconditionError("bound must be >= 1")
    if torus.n != x.ambient_dim or torus.field != x.field or H.n != x.ambient_dim:
        raise PreconditionError("torus, subgroup and instance disagree on dimension or field")
    for lam in torus.basis():
        if not H.contains_cocharacter(lam):
            raise PreconditionError("torus does not lie in the subgroup")
    pairs, coords = _support_pattern(x, torus)
    searched = 0
    for w in torus.lattice(bound):
        searched += 1
        if any(w[i] < w[j] for i, j in pairs) or any(w[i] < 0 for i in coords):
            continue
        lam = torus.cocharacter(w)
        res = ru_conjugacy_back(x, lam, H)
        if res.witness is not None:
            continue
        lim = limit(x, lam)
        nonconj: dict[str, Any] = {"method": res.method}
        if res.inconsistency is not None:
            nonconj["witness_row"] = [lam.field.format(v) for v in res.inconsistency.data[0]]
        return Certificate(NOT_CLOSED, x, H, lam, lim.value, nonconj, search_bound=bound, torus_used=torus, seed=seed, searched=searched, lattice_weights=w)
    return Certificate(NO_DESTABILIZER, x, H, search_bound=bound, torus_used=torus, seed=seed, searched=searched)


# --- theorem-level checks ------------------------------------------------------------

@dataclass
class TwoVarietiesReport:
    hx: Certificate
    ky: Certificate
    joint: Certificate
    consistent: bool
    both_not_closed: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "hx": self.hx.verdict,
            "ky": self.ky.verdict,
            "joint": self.joint.verdict,
            "consistent": self.consistent,
            "both_not_closed": self.both_not_closed,
        }


def two_varieties_check(x: MatrixTuple, y: MatrixTuple, bound: int = DEFAULT_BOUND, seed: int = 0) -> TwoVarietiesReport:
    """Compare H.x, K.y and G.(x, y) with H = C_G(y), K = C_G(x)."""
    if x.field != y.field or x.n != y.n:
        raise PreconditionError("x and y must live in the same GL_n")
    if is_orbit_closed_full(x, seed).verdict != CLOSED or is_orbit_closed_full(y, seed).verdict != CLOSED:
        raise PreconditionError("G.x and G.y must be closed")
    joint_tuple = MatrixTuple(x.entries + y.entries, None, x.field, x.n)
    joint = is_orbit_closed_full(joint_tuple, seed)
    flag = radical_flag(joint_tuple) if joint.verdict == NOT_CLOSED else None
    H, K = SubgroupSpec.centralizer(y), SubgroupSpec.centralizer(x)
    hx = destabilizer_search(ActionInstance.conjugation(x), H, torus_of_centralizer(y, flag, seed), bound, seed)
    ky = destabilizer_search(ActionInstance.conjugation(y), K, torus_of_centralizer(x, flag, seed), bound, seed)
    sides = (hx.verdict, ky.verdict)
    consistent = not (joint.verdict == CLOSED and NOT_CLOSED in sides)
    both = joint.verdict == NOT_CLOSED and sides == (NOT_CLOSED, NOT_CLOSED)
    return TwoVarietiesReport(hx, ky, joint, consistent, both)


@dataclass
class HtoGReport:
    full: Certificate
    search: Certificate | None
    found: bool | None

    @property
    def status(self) -> str:
        if self.search is None:
            return "closed"
        return "found" if self.found else "inconclusive"


def htog_check(x: MatrixTuple, a: MatrixTuple, bound: int = DEFAULT_BOUND, seed: int = 0) -> HtoGReport:
    """Look for a destabilizer of x inside a torus of C_G(A) when G.x is not closed."""
    if a.n != x.n or a.field != x.field:
        raise PreconditionError("a and x must live in the same GL_n")
    for m in a.entries:
        if m.rank() < m.rows:
            raise PreconditionError("entries of a must be invertible")
        if not all((m @ e) == (e @ m) for e in x.entries):
            raise PreconditionError("a must fix x under conjugation")
    if not is_semisimple_module(a):
        raise PreconditionError("a must generate a semisimple algebra")
    full = is_orbit_closed_full(x, seed)
    if full.verdict == CLOSED:
        return HtoGReport(full, None, None)
    torus = torus_of_centralizer(a, radical_flag(x), seed)
    H = SubgroupSpec.full(x.field, x.n)
    search = destabilizer_search(ActionInstance.conjugation(x), H, torus, bound, seed)
    if search.verdict == NOT_CLOSED:
        cent = SubgroupSpec.centralizer(a)
        if not cent.contains_cocharacter(search.destabilizer):
            raise InconsistencyError("destabilizer escaped the centralizer")
    return HtoGReport(full, search, search.verdict == NOT_CLOSED)


def kraft_check(t: MatrixTuple, conjugator: Matrix | None = None) -> bool:
    """G_x contains a maximal torus, so G.x must be closed."""
    if conjugator is not None:
        gi = invert(conjugator)
        if gi is None:
            raise PreconditionError("conjugator is singular")
        diag = [gi @ m @ conjugator for m in t.entries]
    else:
        diag = list(t.entries)
    if not all(m.is_diagonal() for m in diag):
        raise PreconditionError("tuple does not commute with the (conjugated) diagonal torus")
    verdict = is_orbit_closed_full(t).verdict
    if verdict != CLOSED:
        raise InconsistencyError("a tuple centralized by a maximal torus has a non-closed orbit")
    return True
