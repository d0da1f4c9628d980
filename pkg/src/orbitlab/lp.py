"""Exact two-phase simplex over the rationals (Bland's rule)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list[Fraction] | None = None
    value: Fraction | None = None


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, c: int):
        piv = self.rows[r][c]
        self.rows[r] = [v / piv for v in self.rows[r]]
        self.rhs[r] /= piv
        for i in range(len(self.rows)):
            if i != r and self.rows[i][c]:
                f = self.rows[i][c]
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], self.rows[r])]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def optimize(self, cost: Sequence[Fraction], allowed: Sequence[int]) -> str:
        while True:
            entering = None
            for j in allowed:
                if j in self.basis:
                    continue
                reduced = sum((cost[b] * row[j] for b, row in zip(self.basis, self.rows)), Fraction(0)) - cost[j]
                if reduced < 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], entering)


def simplex_max(c: Sequence, a_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """Maximize c.x subject to a_eq x = b_eq, x >= 0, exactly."""
    n = len(c)
    rows = [[Fraction(v) for v in r] for r in a_eq]
    rhs = [Fraction(v) for v in b_eq]
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
    m = len(rows)
    for i in range(m):
        rows[i] = rows[i] + [Fraction(1) if k == i else Fraction(0) for k in range(m)]
    tab = _Tableau(rows, rhs, [n + i for i in range(m)])
    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    tab.optimize(phase1, range(n + m))
    if sum(tab.rhs[i] for i, b in enumerate(tab.basis) if b >= n) > 0:
        return LPResult("infeasible")
    # drive artificial variables out of the basis
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= n:
            col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if col is None:
                del tab.rows[i], tab.rhs[i], tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1
    cost = [Fraction(v) for v in c] + [Fraction(0)] * m
    status = tab.optimize(cost, range(n))
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for b, v in zip(tab.basis, tab.rhs):
        if b < n:
            x[b] = v
    return LPResult("optimal", x, sum((ci * xi for ci, xi in zip(cost, x)), Fraction(0)))
