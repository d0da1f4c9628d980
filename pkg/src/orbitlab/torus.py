"""Torus actions on vector spaces: closedness and optimal destabilizers by exact convex geometry.

A point in a torus eigenbasis is described by the characters (integer vectors
in Z^r) of its nonzero coordinates.  The orbit is closed iff 0 lies in the
relative interior of the convex hull of these weights; it is unstable iff 0 is
outside the hull.  A cocharacter w acts on a weight-chi coordinate by
t^<chi, w>, so the limit along w exists iff <chi, w> >= 0 on the support.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Sequence

from .cochar import LimitOutcome, PreconditionError
from .lp import simplex_max

IN_RELINT = "InRelativeInterior"
ON_BOUNDARY = "OnBoundary"
OUTSIDE = "Outside"


@dataclass(frozen=True)
class WeightSupport:
    rank: int
    weights: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = []
        for w in self.weights:
            w = tuple(int(x) for x in w)
            if len(w) != self.rank:
                raise ValueError("weight of the wrong rank")
            if w not in seen:
                seen.append(w)
        object.__setattr__(self, "weights", tuple(seen))

    @classmethod
    def of(cls, *weights: Sequence[int]) -> "WeightSupport":
        if not weights:
            raise ValueError("use WeightSupport(rank, ()) for an empty support")
        return cls(len(weights[0]), tuple(tuple(w) for w in weights))

    @classmethod
    def from_point(cls, rank: int, coordinate_weights: Sequence[Sequence[int]], coords: Sequence) -> "WeightSupport":
        return cls(rank, tuple(tuple(w) for w, c in zip(coordinate_weights, coords) if c))

    def scaled(self, k: int) -> "WeightSupport":
        return WeightSupport(self.rank, tuple(tuple(k * x for x in w) for w in self.weights))

    def to_json(self) -> dict[str, Any]:
        return {"rank": self.rank, "weights": [list(w) for w in self.weights]}

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> "WeightSupport":
        return cls(int(d["rank"]), tuple(tuple(w) for w in d["weights"]))


@dataclass(frozen=True)
class ConvexCertificate:
    kind: str
    support: WeightSupport
    normal: tuple[int, ...] | None = None
    witness: tuple[Fraction, ...] | None = None

    @property
    def closed(self) -> bool:
        return self.kind == IN_RELINT

    def to_json(self) -> dict[str, Any]:
        return {
            "type": "torus_convex",
            "kind": self.kind,
            "support": self.support.to_json(),
            "normal": list(self.normal) if self.normal is not None else None,
            "witness": [str(c) for c in self.witness] if self.witness is not None else None,
        }

    @classmethod
    def from_json(cls, d: dict[str, Any]) -> "ConvexCertificate":
        return cls(
            d["kind"],
            WeightSupport.from_json(d["support"]),
            tuple(int(v) for v in d["normal"]) if d.get("normal") is not None else None,
            tuple(Fraction(c) for c in d["witness"]) if d.get("witness") is not None else None,
        )


def _dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    """The primitive integer vector on the ray through v (v nonzero)."""
    v = [Fraction(x) for x in v]
    den = lcm(*[x.denominator for x in v]) if v else 1
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no direction")
    return tuple(x // g for x in ints)


def _relint_lp(s: WeightSupport):
    m, r = len(s.weights), s.rank
    # variables: c_1..c_m, eps, slack_1..slack_m
    nv = 2 * m + 1
    rows, rhs = [], []
    for k in range(r):
        rows.append([s.weights[i][k] for i in range(m)] + [0] * (m + 1))
        rhs.append(0)
    rows.append([1] * m + [0] * (m + 1))
    rhs.append(1)
    for i in range(m):
        row = [0] * nv
        row[i], row[m], row[m + 1 + i] = 1, -1, -1
        rows.append(row)
        rhs.append(0)
    cost = [0] * m + [1] + [0] * m
    return simplex_max(cost, rows, rhs)


def _max_along(s: WeightSupport, i: int):
    """max <w_i, v> over the box |v_k| <= 1 with <w_j, v> >= 0 for all j."""
    m, r = len(s.weights), s.rank
    # variables: p (r), q (r), slack t (m), box slacks (2r); v = p - q
    nv = 2 * r + m + 2 * r
    rows, rhs = [], []
    for j, w in enumerate(s.weights):
        row = [0] * nv
        for k in range(r):
            row[k], row[r + k] = w[k], -w[k]
        row[2 * r + j] = -1
        rows.append(row)
        rhs.append(0)
    for k in range(r):
        row = [0] * nv
        row[k], row[2 * r + m + k] = 1, 1
        rows.append(row)
        rhs.append(1)
        row = [0] * nv
        row[r + k], row[2 * r + m + r + k] = 1, 1
        rows.append(row)
        rhs.append(1)
    w = s.weights[i]
    cost = [w[k] for k in range(r)] + [-w[k] for k in range(r)] + [0] * (m + 2 * r)
    res = simplex_max(cost, rows, rhs)
    v = [res.x[k] - res.x[r + k] for k in range(r)]
    return res.value, v


def torus_orbit_closed(s: WeightSupport) -> ConvexCertificate:
    if not s.weights:
        return ConvexCertificate(IN_RELINT, s, None, ())
    m = len(s.weights)
    res = _relint_lp(s)
    if res.status == "infeasible":
        point = min_norm_point(s)
        return ConvexCertificate(OUTSIDE, s, primitive(point), None)
    witness = tuple(res.x[:m])
    if res.value > 0:
        return ConvexCertificate(IN_RELINT, s, None, witness)
    total = [Fraction(0)] * s.rank
    for i in range(m):
        val, v = _max_along(s, i)
        if val > 0:
            total = [a + b / val for a, b in zip(total, v)]
    return ConvexCertificate(ON_BOUNDARY, s, primitive(total), witness)


# --- min-norm point ------------------------------------------------------------------

def _affine_min_norm(points: list[tuple[Fraction, ...]]) -> list[Fraction] | None:
    """Coefficients alpha (sum 1) of the min-norm point of the affine hull, or None if degenerate."""
    k = len(points)
    size = k + 1
    mat = [[_dot(points[i], points[j]) for j in range(k)] + [Fraction(1)] for i in range(k)]
    mat.append([Fraction(1)] * k + [Fraction(0)])
    rhs = [Fraction(0)] * k + [Fraction(1)]
    aug = [row + [b] for row, b in zip(mat, rhs)]
    for c in range(size):
        piv = next((r for r in range(c, size) if aug[r][c] != 0), None)
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [v / p for v in aug[c]]
        for r in range(size):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    return [aug[i][size] for i in range(k)]


def _combine(points, coeffs) -> list[Fraction]:
    dim = len(points[0])
    return [sum((c * p[d] for c, p in zip(coeffs, points)), Fraction(0)) for d in range(dim)]


def min_norm_point(s: WeightSupport) -> tuple[Fraction, ...]:
    """Exact min-norm point of conv(support) by Wolfe's method (smallest-index ties)."""
    if not s.weights:
        raise PreconditionError("empty support has no hull")
    pts = [tuple(Fraction(x) for x in w) for w in s.weights]
    start = min(range(len(pts)), key=lambda i: (_dot(pts[i], pts[i]), i))
    active = [start]
    lam = [Fraction(1)]
    x = list(pts[start])
    for _ in range(10000):
        xx = _dot(x, x)
        j = min(range(len(pts)), key=lambda i: (_dot(x, pts[i]), i))
        if _dot(x, pts[j]) >= xx or j in active:
            return tuple(x)
        active.append(j)
        lam.append(Fraction(0))
        while True:
            alpha = _affine_min_norm([pts[i] for i in active])
            if alpha is None:
                raise ArithmeticError("affinely dependent active set")
            if all(a > 0 for a in alpha):
                lam = alpha
                x = _combine([pts[i] for i in active], lam)
                break
            theta = min(l / (l - a) for l, a in zip(lam, alpha) if a <= 0)
            lam = [theta * a + (1 - theta) * l for l, a in zip(lam, alpha)]
            keep = [k for k, l in enumerate(lam) if l > 0]
            active = [active[k] for k in keep]
            lam = [lam[k] for k in keep]
            x = _combine([pts[i] for i in active], lam)
    raise ArithmeticError("min-norm iteration did not terminate")


def min_norm_point_by_faces(s: WeightSupport) -> tuple[Fraction, ...]:
    """Slow reference: best affine min-norm point over affinely independent subsets."""
    pts = [tuple(Fraction(x) for x in w) for w in s.weights]
    best = None
    for size in range(1, min(len(pts), s.rank + 1) + 1):
        for idx in itertools.combinations(range(len(pts)), size):
            sub = [pts[i] for i in idx]
            alpha = _affine_min_norm(sub)
            if alpha is None or any(a < 0 for a in alpha):
                continue
            y = _combine(sub, alpha)
            if best is None or _dot(y, y) < _dot(best, best):
                best = y
    return tuple(best)


def optimal_destabilizer(s: WeightSupport) -> tuple[int, ...]:
    """Primitive direction of the min-norm point: it maximizes min <chi, w> / |w|."""
    if torus_orbit_closed(s).kind != OUTSIDE:
        raise PreconditionError("optimal destabilizer needs an unstable point (0 outside the hull)")
    return primitive(min_norm_point(s))


def kempf_ratio_squared(s: WeightSupport, w: Sequence[int]) -> tuple[int, Fraction]:
    """(sign, value) with min <chi, w> / |w| = sign * sqrt(value)."""
    lo = min(_dot(chi, w) for chi in s.weights)
    norm2 = _dot(w, w)
    sign = (lo > 0) - (lo < 0)
    return sign, Fraction(lo * lo) / norm2


def limit_along(s: WeightSupport, coords: Sequence | None, w: Sequence[int]) -> LimitOutcome:
    """Limit of w(t) . x in torus coordinates (one coordinate per support weight)."""
    if len(w) != s.rank:
        raise PreconditionError("cocharacter of the wrong rank")
    if coords is None:
        coords = [Fraction(1)] * len(s.weights)
    pairings = [_dot(chi, w) for chi in s.weights]
    neg = tuple(i for i, p in enumerate(pairings) if p < 0)
    if neg:
        return LimitOutcome(False, None, neg)
    zero = coords[0] * 0 if coords else Fraction(0)
    return LimitOutcome(True, tuple(c if p == 0 else zero for c, p in zip(coords, pairings)), ())


def verify_convex(cert: ConvexCertificate) -> list[str]:
    """Problems found when re-checking a convex certificate (empty list = valid)."""
    s = cert.support
    errs = []
    if cert.kind == IN_RELINT:
        if not s.weights:
            return [] if not cert.witness else ["empty support takes an empty witness"]
        c = cert.witness
        if c is None or len(c) != len(s.weights):
            return ["missing barycentric witness"]
        if any(v <= 0 for v in c):
            errs.append("witness coefficients must be positive")
        if sum(c) != 1:
            errs.append("witness coefficients must sum to 1")
        if any(v != 0 for v in _combine([tuple(map(Fraction, w)) for w in s.weights], c)):
            errs.append("weighted sum of the support is not zero")
    elif cert.kind == OUTSIDE:
        if cert.normal is None or any(_dot(w, cert.normal) <= 0 for w in s.weights):
            errs.append("normal does not strictly separate the support from 0")
    elif cert.kind == ON_BOUNDARY:
        v, c = cert.normal, cert.witness
        if v is None or any(_dot(w, v) < 0 for w in s.weights) or all(_dot(w, v) == 0 for w in s.weights):
            errs.append("face normal must be nonnegative on the support and positive somewhere")
        if c is None or len(c) != len(s.weights) or any(x < 0 for x in c) or sum(c) != 1:
            errs.append("missing convex witness that 0 lies in the hull")
        elif any(x != 0 for x in _combine([tuple(map(Fraction, w)) for w in s.weights], c)):
            errs.append("witness does not place 0 in the hull")
    else:
        errs.append(f"unknown certificate kind {cert.kind!r}")
    return errs
