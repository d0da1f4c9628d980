"""Modules given by matrix tuples: spanned algebras, radicals, isomorphism, decomposition.

A tuple ``t = (t_1, ..., t_m)`` of n x n matrices makes k^n a module over the
unital algebra it generates.  Over GL_n the conjugation orbit of ``t`` is
closed exactly when this module is semisimple, i.e. when the Jacobson radical
of the spanned algebra is zero.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from math import log
from typing import Iterable, Sequence

import numpy as np

from .cochar import PreconditionError
from .fields import GF, FieldSpec
from .matrix import Matrix, column_space, invert, nullspace, rref, solve_linear
from .tuples import MatrixTuple

__all__ = [
    "MatrixTuple",
    "AlgebraHandle",
    "IsotypicComponent",
    "IsotypicDecomposition",
    "IsomorphismResult",
    "span_algebra",
    "generic_tuple",
    "radical",
    "is_semisimple_module",
    "brute_force_semisimple",
    "invariant_subspaces",
    "modules_isomorphic",
    "isotypic_decomposition",
    "irreducible_summands",
    "centralizer_algebra",
    "intertwiner_basis",
    "invariant_complement",
    "radical_flag",
    "fixed_space",
]

BRUTE_FORCE_MAX_VECTORS = 4096


class _Echelon:
    """Incremental echelon basis for independence tests on flat vectors."""

    def __init__(self, field: FieldSpec):
        self.F = field
        self.rows: list[list] = []
        self.pivots: list[int] = []

    def reduce(self, v: Sequence) -> list:
        F = self.F
        v = list(v)
        for pc, row in zip(self.pivots, self.rows):
            c = v[pc]
            if c:
                v = [F.sub(a, F.mul(c, b)) if b else a for a, b in zip(v, row)]
        return v

    def add(self, v: Sequence) -> bool:
        v = self.reduce(v)
        pc = next((i for i, a in enumerate(v) if a), None)
        if pc is None:
            return False
        inv = self.F.inv(v[pc])
        self.rows.append([self.F.mul(inv, a) for a in v])
        self.pivots.append(pc)
        return True

    def __len__(self):
        return len(self.rows)


def _stack_columns(mats: Sequence[Matrix], field: FieldSpec, size: int) -> Matrix:
    """Matrix whose j-th column is the flattening of mats[j]."""
    flat = [m.flatten() for m in mats]
    return Matrix(field, [[f[i] for f in flat] for i in range(size)], size, len(mats))


@dataclass
class AlgebraHandle:
    """Basis of a unital matrix algebra with the words that produced it."""

    generators: MatrixTuple
    basis: list[Matrix]
    words: list[tuple[int, ...]] | None = None
    seed: int = 0
    _coords: Matrix | None = field(default=None, repr=False)

    @property
    def field(self) -> FieldSpec:
        return self.generators.field

    @property
    def n(self) -> int:
        return self.generators.n

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @cached_property
    def basis_matrix(self) -> Matrix:
        return _stack_columns(self.basis, self.field, self.n * self.n)

    def coordinates(self, z: Matrix) -> list | None:
        sol = solve_linear(self.basis_matrix, Matrix(self.field, [[v] for v in z.flatten()], self.n * self.n, 1))
        if sol is None:
            return None
        return [r[0] for r in sol.particular.data]

    def contains(self, z: Matrix) -> bool:
        return self.coordinates(z) is not None

    def combine(self, coeffs: Sequence) -> Matrix:
        F = self.field
        acc = Matrix.zeros(F, self.n)
        for c, b in zip(coeffs, self.basis):
            if c:
                acc = acc + b.scale(F.element(c))
        return acc

    def is_commutative(self) -> bool:
        return all((a @ b) == (b @ a) for a, b in itertools.combinations(self.basis, 2))

    @cached_property
    def radical_basis(self) -> list[Matrix]:
        return _radical(self)


def span_algebra(t: MatrixTuple) -> AlgebraHandle:
    """Breadth-first closure of {I} under right multiplication by the generators."""
    F, n = t.field, t.n
    ident = Matrix.identity(F, n)
    ech = _Echelon(F)
    ech.add(ident.flatten())
    basis, words = [ident], [()]
    frontier = 0
    while frontier < len(basis):
        b, w = basis[frontier], words[frontier]
        frontier += 1
        for i, g in enumerate(t.entries):
            prod = b @ g
            if ech.add(prod.flatten()):
                basis.append(prod)
                words.append(w + (i,))
    return AlgebraHandle(t, basis, words)


def generic_tuple(generators: MatrixTuple) -> tuple[MatrixTuple, list[tuple[int, ...]]]:
    """Words in the generators whose linear span is the spanned algebra.

    The words are the breadth-first basis of :func:`span_algebra`, so the tuple
    has the minimal possible length (the algebra dimension).
    """
    alg = span_algebra(generators)
    return MatrixTuple(tuple(alg.basis), generators.det_constraint, generators.field, generators.n), list(alg.words)


# --- radical ------------------------------------------------------------------

def radical(a: AlgebraHandle) -> list[Matrix]:
    return a.radical_basis


def _left_kernel_combos(F: FieldSpec, vals: list[list], basis: Sequence[Matrix], n: int) -> list[Matrix]:
    """Combinations sum_j c_j basis[j] with sum_j c_j vals[j][m] = 0 for every m."""
    if not basis:
        return []
    m = Matrix(F, [list(col) for col in zip(*vals)], len(vals[0]), len(vals)) if vals[0] else Matrix.zeros(F, 0, len(vals))
    out = []
    for v in nullspace(m):
        coeffs = [r[0] for r in v.data]
        acc = Matrix.zeros(F, n)
        for c, b in zip(coeffs, basis):
            if c:
                acc = acc + b.scale(F.element(c))
        out.append(acc)
    return out


def _radical(a: AlgebraHandle) -> list[Matrix]:
    F = a.field
    if F.kind == "Q":
        return _radical_char0(a)
    if F.k == 1:
        return _radical_prime_field(F, a.basis, a.n)
    return _radical_extension(a)


def _radical_char0(a: AlgebraHandle) -> list[Matrix]:
    # kernel of the trace form (tr(x b_j))_j
    F, basis = a.field, a.basis
    gram = [[(x @ y).trace() for y in basis] for x in basis]
    return _echelon_basis(F, _left_kernel_combos(F, gram, basis, a.n), a.n)


def _trace_powers(xs: np.ndarray, ys: np.ndarray, e: int, mod: int) -> np.ndarray:
    """tr((x y)^e) mod ``mod`` for all pairs of integer lifts, as an array."""
    n = xs.shape[-1]
    dtype = np.int64 if n * mod * mod < 1 << 62 else object
    z = np.einsum("aij,bjk->abik", xs.astype(dtype), ys.astype(dtype)) % mod
    result = np.broadcast_to(np.eye(n, dtype=dtype), z.shape).copy()
    while e:
        if e & 1:
            result = (result @ z) % mod
        z = (z @ z) % mod
        e >>= 1
    return np.trace(result, axis1=-2, axis2=-1) % mod


def _radical_prime_field(F: FieldSpec, basis: list[Matrix], n: int) -> list[Matrix]:
    """Layered trace-form method over F_p (valid for every p, including p <= n).

    I_{-1} = A and I_i = {a in I_{i-1} : g_i(a b) = 0 for all b in A}, where
    g_i(z) = Tr(z~^(p^i)) / p^i mod p for an integer lift z~; I_l with
    l = floor(log_p n) is the radical.
    """
    p = F.p
    layers = int(log(n, p) + 1e-9) if n > 1 else 0
    while p ** (layers + 1) <= n:
        layers += 1
    current = list(basis)
    for i in range(layers + 1):
        if not current:
            break
        pi, mod = p ** i, p ** (i + 1)
        lift = lambda ms: np.array([[[int(v) for v in r] for r in m.data] for m in ms], dtype=object)
        ys = lift(basis)
        traces = np.concatenate([_trace_powers(lift(current[c:c + 16]), ys, pi, mod) for c in range(0, len(current), 16)])
        if any(int(tr) % pi for tr in traces.flat):
            raise ArithmeticError("trace not divisible by p^i on the previous layer")
        vals = [[F.from_int(int(tr) // pi) for tr in row] for row in traces]
        current = _echelon_basis(F, _left_kernel_combos(F, vals, current, n), n)
    return current


def _mult_matrix(F: FieldSpec, c) -> list[list[int]]:
    """Matrix over F_p of multiplication by c on F_{p^k} (basis 1, x, ..., x^(k-1))."""
    cols = []
    xj = F.one
    for _ in range(F.k):
        cols.append(F.to_coeffs(F.mul(c, xj)))
        xj = F.mul(xj, F.p)  # the code p encodes x
    return [[cols[j][i] for j in range(F.k)] for i in range(F.k)]


def _restrict_scalars(m: Matrix) -> Matrix:
    F, k = m.field, m.field.k
    Fp = GF(F.p)
    n = m.rows
    out = [[0] * (n * k) for _ in range(n * k)]
    for i in range(n):
        for j in range(m.cols):
            blk = _mult_matrix(F, m.data[i][j])
            for a in range(k):
                for b in range(k):
                    out[i * k + a][j * k + b] = blk[a][b]
    return Matrix(Fp, out, n * k, m.cols * k)


def _extend_scalars(m: Matrix, F: FieldSpec) -> Matrix:
    k = F.k
    n = m.rows // k
    cols = m.cols // k
    data = [[F.from_coeffs([m.data[i * k + a][j * k] for a in range(k)]) for j in range(cols)] for i in range(n)]
    return Matrix(F, data, n, cols)


def _radical_extension(a: AlgebraHandle) -> list[Matrix]:
    # same ring, viewed as an algebra over the prime field
    F = a.field
    scalars = [F.pow(F.p, j) for j in range(F.k)]  # 1, x, ..., x^(k-1)
    big = [_restrict_scalars(b.scale(F.element(s))) for b in a.basis for s in scalars]
    rad_p = _radical_prime_field(GF(F.p), big, a.n * F.k)
    return _echelon_basis(F, [_extend_scalars(r, F) for r in rad_p], a.n)


def _echelon_basis(F: FieldSpec, mats: Iterable[Matrix], n: int) -> list[Matrix]:
    """Canonical basis (reduced echelon rows of the flattenings) of the span."""
    mats = list(mats)
    if not mats:
        return []
    r = rref(Matrix(F, [m.flatten() for m in mats], len(mats), n * n))
    return [Matrix.unflatten(F, r.matrix.data[i], n, n) for i in range(r.rank)]


def is_semisimple_module(t: MatrixTuple) -> bool:
    return not radical(span_algebra(t))


# --- brute force ----------------------------------------------------------------

def _all_subspaces(F: FieldSpec, n: int) -> list[tuple[Matrix, frozenset]]:
    """Every subspace of F^n as (basis columns, set of member vectors)."""
    q = F.order
    elems = list(F.elements())
    out = []
    for d in range(n + 1):
        for piv in itertools.combinations(range(n), d):
            free = [(r, c) for r in range(d) for c in range(n) if c > piv[r] and c not in piv]
            for vals in itertools.product(elems, repeat=len(free)):
                rows = [[F.zero] * n for _ in range(d)]
                for r, c in enumerate(piv):
                    rows[r][c] = F.one
                for (r, c), v in zip(free, vals):
                    rows[r][c] = v
                members = set()
                for coeffs in itertools.product(elems, repeat=d):
                    vec = [F.zero] * n
                    for c, row in zip(coeffs, rows):
                        if c:
                            vec = [F.add(x, F.mul(c, y)) for x, y in zip(vec, row)]
                    members.add(tuple(vec))
                basis = Matrix(F, rows, d, n).transpose() if d else Matrix(F, [[] for _ in range(n)], n, 0)
                out.append((basis, frozenset(members)))
    assert len(out) >= 2 and q
    return out


def _check_brute_force_range(t: MatrixTuple):
    F = t.field
    if F.kind == "Q" or t.n > 4 or F.order ** t.n > BRUTE_FORCE_MAX_VECTORS:
        raise PreconditionError(f"brute force needs a finite field with q^n <= {BRUTE_FORCE_MAX_VECTORS} and n <= 4")


def invariant_subspaces(t: MatrixTuple) -> list[Matrix]:
    """Every t-invariant subspace (as basis columns), by enumeration."""
    _check_brute_force_range(t)
    out = []
    for basis, members in _all_subspaces(t.field, t.n):
        ok = True
        for m in t.entries:
            img = m @ basis
            for j in range(basis.cols):
                if tuple(r[j] for r in img.data) not in members:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(basis)
    return out


def brute_force_semisimple(t: MatrixTuple) -> bool:
    """Every invariant subspace has an invariant complement (exhaustive)."""
    subs = invariant_subspaces(t)
    n = t.n
    by_dim: dict[int, list[Matrix]] = {}
    for s in subs:
        by_dim.setdefault(s.cols, []).append(s)
    for s in subs:
        if s.cols in (0, n):
            continue
        if not any(s.hstack(c).rank() == n for c in by_dim.get(n - s.cols, [])):
            return False
    return True


# --- linear-algebra helpers -------------------------------------------------------

def intertwiner_basis(s: MatrixTuple, t: MatrixTuple) -> list[Matrix]:
    """Basis of {P : P s_i = t_i P for all i} (P is t.n x s.n)."""
    if len(s) != len(t) or s.field != t.field:
        raise PreconditionError("tuples must have equal length and field")
    F = s.field
    a, b = t.n, s.n
    nvars = a * b
    rows = []
    for si, ti in zip(s.entries, t.entries):
        for r in range(a):
            for c in range(b):
                row = [F.zero] * nvars
                # (P s)_{rc} = sum_k P_{rk} s_{kc}
                for k in range(b):
                    v = si.data[k][c]
                    if v:
                        row[r * b + k] = F.add(row[r * b + k], v)
                # (t P)_{rc} = sum_k t_{rk} P_{kc}
                for k in range(a):
                    v = ti.data[r][k]
                    if v:
                        row[k * b + c] = F.sub(row[k * b + c], v)
                rows.append(row)
    if not rows:
        return [Matrix.unflatten(F, [F.one if i == j else F.zero for i in range(nvars)], a, b) for j in range(nvars)]
    sol = nullspace(Matrix(F, rows, len(rows), nvars))
    return [Matrix.unflatten(F, [r[0] for r in v.data], a, b) for v in sol]


def centralizer_algebra(t: MatrixTuple) -> AlgebraHandle:
    basis = intertwiner_basis(t, t)
    gens = MatrixTuple(tuple(basis), None, t.field, t.n)
    return AlgebraHandle(gens, basis, [(i,) for i in range(len(basis))])


def fixed_space(t: MatrixTuple) -> Matrix:
    """Common fixed vectors {v : t_i v = v}, as basis columns."""
    F, n = t.field, t.n
    ident = Matrix.identity(F, n)
    stacked = Matrix(F, [r for m in t.entries for r in (m - ident).data], n * len(t), n) if len(t) else Matrix.zeros(F, 0, n)
    vecs = nullspace(stacked)
    return Matrix.from_columns(F, vecs, n) if vecs else Matrix(F, [[] for _ in range(n)], n, 0)


def invariant_complement(t: MatrixTuple, sub: Matrix) -> Matrix | None:
    """An invariant complement of the invariant subspace ``sub``, or None if none exists.

    Solves for an equivariant projection pi with pi|sub = id; the complement is
    ker(pi).  Existence of such pi is equivalent to existence of a complement.
    """
    F, n, u = t.field, t.n, sub.cols
    if u == 0:
        return Matrix.identity(F, n)
    if u == n:
        return Matrix(F, [[] for _ in range(n)], n, 0)
    restricted = t.restrict(sub)
    nvars = u * n
    rows, rhs = [], []
    # pi @ sub = I_u
    for r in range(u):
        for c in range(u):
            row = [F.zero] * nvars
            for k in range(n):
                v = sub.data[k][c]
                if v:
                    row[r * n + k] = v
            rows.append(row)
            rhs.append([F.one if r == c else F.zero])
    # pi t_i = (t_i|sub) pi
    for ti, ri in zip(t.entries, restricted.entries):
        for r in range(u):
            for c in range(n):
                row = [F.zero] * nvars
                for k in range(n):
                    v = ti.data[k][c]
                    if v:
                        row[r * n + k] = F.add(row[r * n + k], v)
                for k in range(u):
                    v = ri.data[r][k]
                    if v:
                        row[k * n + c] = F.sub(row[k * n + c], v)
                rows.append(row)
                rhs.append([F.zero])
    sol = solve_linear(Matrix(F, rows, len(rows), nvars), Matrix(F, rhs, len(rhs), 1))
    if sol is None:
        return None
    pi = Matrix.unflatten(F, [r[0] for r in sol.particular.data], u, n)
    return Matrix.from_columns(F, nullspace(pi), n)


def _span_columns(F: FieldSpec, n: int, cols: list[Matrix]) -> Matrix:
    if not cols:
        return Matrix(F, [[] for _ in range(n)], n, 0)
    return column_space(Matrix.from_columns(F, cols, n))


def radical_flag(t: MatrixTuple) -> list[Matrix]:
    """V = J^0 V > J V > J^2 V > ... > 0 for J the radical of the spanned algebra."""
    F, n = t.field, t.n
    rad = radical(span_algebra(t))
    layers = [Matrix.identity(F, n)]
    while layers[-1].cols:
        cur = layers[-1]
        imgs = [r @ cur.col(j) for r in rad for j in range(cur.cols)]
        nxt = _span_columns(F, n, imgs)
        if nxt.cols == cur.cols:
            raise ArithmeticError("radical layer did not shrink")
        layers.append(nxt)
    return layers


# --- isomorphism ---------------------------------------------------------------------

@dataclass
class IsomorphismResult:
    witness: Matrix | None
    reason: str
    hom_dims: tuple[int, int] = (0, 0)
    field_used: FieldSpec | None = None

    @property
    def isomorphic(self) -> bool:
        return self.witness is not None

    def __bool__(self):
        return self.isomorphic


def _poly_mul(F, a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(sorted(ma + mb))
            v = F.add(out.get(m, F.zero), F.mul(ca, cb))
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _poly_add(F, a: dict, b: dict, sign: bool) -> dict:
    out = dict(a)
    for m, c in b.items():
        v = F.add(out.get(m, F.zero), F.neg(c) if sign else c)
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def generic_determinant(basis: Sequence[Matrix]) -> dict:
    """det(sum_k x_k B_k) as a sparse polynomial {sorted variable tuple: coeff}."""
    F, n = basis[0].field, basis[0].rows
    forms = [[{(k,): b.data[i][j] for k, b in enumerate(basis) if b.data[i][j]} for j in range(n)] for i in range(n)]
    memo: dict = {}

    def det(row: int, cols: tuple[int, ...]) -> dict:
        if row == n:
            return {(): F.one}
        key = cols
        if key in memo:
            return memo[key]
        acc: dict = {}
        for pos, c in enumerate(cols):
            if not forms[row][c]:
                continue
            minor = det(row + 1, cols[:pos] + cols[pos + 1:])
            if minor:
                acc = _poly_add(F, acc, _poly_mul(F, forms[row][c], minor), pos % 2 == 1)
        memo[key] = acc
        return acc

    return det(0, tuple(range(n)))


def _random_combo(F: FieldSpec, basis: Sequence[Matrix], rng: random.Random, height: int) -> Matrix:
    acc = Matrix.zeros(F, basis[0].rows, basis[0].cols)
    for b in basis:
        c = F.random(rng, height) if F.kind != "Q" else rng.randint(-height, height)
        if c:
            acc = acc + b.scale(F.element(F.convert(c)) if F.kind == "Q" else F.element(c))
    return acc


def _extension_for(F: FieldSpec, n: int) -> FieldSpec:
    e = 1
    while F.p ** (F.k * e) <= 2 * n:
        e += 1
    return F if e == 1 else GF(F.p, F.k * e)


def modules_isomorphic(s: MatrixTuple, t: MatrixTuple, seed: int = 0) -> IsomorphismResult:
    """An invertible P with P s_i P^-1 = t_i, or a certified refusal.

    Non-isomorphism is certified by a Hom-dimension mismatch or by the generic
    intertwiner determinant vanishing identically (no invertible intertwiner over
    any extension).  When a witness only shows up after enlarging a small
    finite field, it is returned over that extension.
    """
    if len(s) != len(t) or s.n != t.n or s.field != t.field:
        raise PreconditionError("tuples must share length, dimension and field")
    F, n = s.field, s.n
    hom = intertwiner_basis(s, t)
    end_dim = len(intertwiner_basis(s, s))
    dims = (end_dim, len(hom))
    if not hom:
        return IsomorphismResult(None, "no_intertwiner", dims)
    if end_dim != len(hom):
        return IsomorphismResult(None, "hom_dimension_mismatch", dims)
    for b in hom:
        if b.rank() == n:
            return IsomorphismResult(b, "witness", dims, F)
    rng = random.Random(seed)
    height = 10 * n
    if F.kind == "Fq" and F.order ** len(hom) <= 4096:
        elems = list(F.elements())
        for coeffs in itertools.product(elems, repeat=len(hom)):
            cand = Matrix.zeros(F, n)
            for c, b in zip(coeffs, hom):
                if c:
                    cand = cand + b.scale(F.element(c))
            if cand.rank() == n:
                return IsomorphismResult(cand, "witness", dims, F)
    else:
        for _ in range(64):
            cand = _random_combo(F, hom, rng, height)
            if cand.rank() == n:
                return IsomorphismResult(cand, "witness", dims, F)
    if not generic_determinant(hom):
        return IsomorphismResult(None, "generic_determinant_zero", dims)
    target = F if F.kind == "Q" else _extension_for(F, n)
    hom_t = [b.change_field(target) for b in hom]
    for _ in range(5000):
        cand = _random_combo(target, hom_t, rng, height)
        if cand.rank() == n:
            return IsomorphismResult(cand, "witness", dims, target)
    raise ArithmeticError("generic determinant is nonzero but no invertible intertwiner was sampled")


# --- decomposition ---------------------------------------------------------------------

def _frobenius_fixed(F: FieldSpec, basis: list[Matrix], n: int) -> list[Matrix]:
    """{z in span(basis) : z^q = z} for a commutative algebra over F_q."""
    q = F.order
    bm = _stack_columns(basis, F, n * n)
    vals = []
    for b in basis:
        img = (b ** q) - b
        sol = solve_linear(bm, Matrix(F, [[v] for v in img.flatten()], n * n, 1))
        if sol is None:
            raise ArithmeticError("algebra not closed under Frobenius")
        vals.append([r[0] for r in sol.particular.data])
    return _left_kernel_combos(F, vals, basis, n)


def _powers_basis(c: Matrix) -> list[Matrix]:
    F, n = c.field, c.rows
    ech = _Echelon(F)
    out = []
    cur = Matrix.identity(F, n)
    while ech.add(cur.flatten()):
        out.append(cur)
        cur = cur @ c
    return out


def _eigen_split(b: Matrix) -> list[Matrix] | None:
    F, n = b.field, b.rows
    if F.order > 1 << 16:
        raise NotImplementedError("eigenvalue search limited to fields of order <= 65536")
    ident = Matrix.identity(F, n)
    pieces, total = [], 0
    for c in F.elements():
        ker = nullspace(b - ident.scale(F.element(c)))
        if ker:
            pieces.append(Matrix.from_columns(F, ker, n))
            total += len(ker)
        if total == n:
            break
    return pieces if len(pieces) > 1 else None


def _is_scalar(m: Matrix) -> bool:
    return m.is_diagonal() and len({m.data[i][i] for i in range(m.rows)}) <= 1


def _split_finite(cent: list[Matrix], n: int, rng: random.Random) -> list[Matrix] | None:
    F = cent[0].field
    commutative = all((a @ b) == (b @ a) for a, b in itertools.combinations(cent, 2))
    if commutative:
        fixed = _frobenius_fixed(F, cent, n)
        if len(fixed) <= 1:
            return None
        b = next(m for m in fixed if not _is_scalar(m))
        return _eigen_split(b)
    candidates = [m for m in cent if not _is_scalar(m)]
    for attempt in range(400):
        c = candidates[attempt] if attempt < len(candidates) else _random_combo(F, cent, rng, 5)
        powers = _powers_basis(c)
        fixed = _frobenius_fixed(F, powers, n)
        if len(fixed) > 1:
            b = next(m for m in fixed if not _is_scalar(m))
            return _eigen_split(b)
    raise ArithmeticError("failed to split a non-commutative endomorphism algebra")


def _minpoly_coeffs(c: Matrix) -> list:
    """Monic minimal polynomial of c, coefficients lowest degree first."""
    F, n = c.field, c.rows
    powers = _powers_basis(c)
    d = len(powers)
    top = powers[-1] @ c
    sol = solve_linear(_stack_columns(powers, F, n * n), Matrix(F, [[v] for v in top.flatten()], n * n, 1))
    coeffs = [F.neg(r[0]) for r in sol.particular.data]
    assert len(coeffs) == d
    return coeffs + [F.one]


def _poly_at_matrix(coeffs: Sequence, c: Matrix) -> Matrix:
    F, n = c.field, c.rows
    acc = Matrix.zeros(F, n)
    for a in reversed(coeffs):
        acc = acc @ c + Matrix.identity(F, n).scale(F.element(a))
    return acc


def _split_rational(cent: list[Matrix], n: int, rng: random.Random) -> list[Matrix] | None:
    import sympy

    F = cent[0].field
    x = sympy.Symbol("x")
    commutative = all((a @ b) == (b @ a) for a, b in itertools.combinations(cent, 2))
    candidates = [m for m in cent if not _is_scalar(m)]
    for attempt in range(400):
        c = candidates[attempt] if attempt < len(candidates) else _random_combo(F, cent, rng, 3 + attempt // 20)
        coeffs = _minpoly_coeffs(c)
        poly = sympy.Poly(list(reversed([sympy.Rational(v.numerator, v.denominator) for v in coeffs])), x, domain="QQ")
        _, factors = poly.factor_list()
        if len(factors) > 1:
            pieces = []
            for f, _mult in factors:
                fc = [F.convert(str(v)) for v in reversed(f.all_coeffs())]
                ker = nullspace(_poly_at_matrix(fc, c))
                pieces.append(Matrix.from_columns(F, ker, n))
            return pieces
        if commutative and len(coeffs) - 1 == len(cent):
            return None  # the endomorphism algebra is a field
    raise ArithmeticError("failed to split the endomorphism algebra over QQ")


def irreducible_summands(t: MatrixTuple, seed: int = 0) -> list[Matrix]:
    """Bases of irreducible summands whose direct sum is k^n (semisimple input)."""
    rng = random.Random(seed)
    return _split(t, rng)


def _split(t: MatrixTuple, rng: random.Random) -> list[Matrix]:
    F, n = t.field, t.n
    ident = Matrix.identity(F, n)
    if n == 1:
        return [ident]
    cent = intertwiner_basis(t, t)
    if len(cent) == 1:
        return [ident]
    pieces = _split_rational(cent, n, rng) if F.kind == "Q" else _split_finite(cent, n, rng)
    if pieces is None:
        return [ident]
    out = []
    for basis in pieces:
        for sub in _split(t.restrict(basis), rng):
            out.append(basis @ sub)
    return out


@dataclass
class IsotypicComponent:
    irreducible_dim: int
    multiplicity: int
    basis: Matrix
    pieces: list[Matrix]


@dataclass
class IsotypicDecomposition:
    summands: list[IsotypicComponent]
    change_of_basis: Matrix
    seed: int = 0

    def dimensions(self) -> list[int]:
        return [c.basis.cols for c in self.summands]


def isotypic_decomposition(t: MatrixTuple, seed: int = 0) -> IsotypicDecomposition:
    if not is_semisimple_module(t):
        raise PreconditionError("isotypic decomposition needs a semisimple module")
    F, n = t.field, t.n
    pieces = irreducible_summands(t, seed)
    groups: list[list[tuple[Matrix, MatrixTuple]]] = []
    for basis in pieces:
        sub = t.restrict(basis)
        for g in groups:
            rep = g[0][1]
            if rep.n == sub.n and modules_isomorphic(rep, sub, seed).isomorphic:
                g.append((basis, sub))
                break
        else:
            groups.append([(basis, sub)])
    comps = []
    for g in groups:
        bases = [b for b, _ in g]
        comps.append(IsotypicComponent(g[0][1].n, len(g), Matrix.from_columns(F, bases, n), bases))
    change = Matrix.from_columns(F, [c.basis for c in comps], n)
    assert invert(change) is not None
    return IsotypicDecomposition(comps, change, seed)
