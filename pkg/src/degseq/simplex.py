"""Exact two-phase revised simplex over the rationals.

Solves ``min c.x  s.t.  A x = b, x >= 0`` with ``A`` given column by column.
Only the basis inverse (rows x rows) is kept, so problems with few rows and
many columns, such as convex-hull membership, stay cheap.  Pricing uses
Dantzig's rule and falls back to Bland's rule after a run of degenerate
pivots, which guarantees termination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

_BLAND_AFTER = 30


def _exact(a):
    a = Fraction(a)
    return a.numerator if a.denominator == 1 else a


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list[Fraction]
    value: Fraction | None


class _Revised:
    def __init__(self, columns, b):
        self.r = len(b)
        self.n = len(columns)
        flip = [bi < 0 for bi in b]
        self.cols = [
            tuple(_exact(-a if flip[i] else a) for i, a in enumerate(col))
            for col in columns
        ]
        self.xb = [abs(Fraction(bi)) for bi in b]
        self.basis = [self.n + i for i in range(self.r)]
        self.binv = [[Fraction(int(i == j)) for j in range(self.r)] for i in range(self.r)]
        self.bland = False
        self.stall = 0

    def column(self, j):
        if j >= self.n:
            return tuple(int(i == j - self.n) for i in range(self.r))
        return self.cols[j]

    def duals(self, cost):
        cb = [cost(j) for j in self.basis]
        return [sum(cb[i] * self.binv[i][c] for i in range(self.r)) for c in range(self.r)]

    def entering(self, cost, allow_artificial):
        y = self.duals(cost)
        scale = 1
        for v in y:
            scale = math.lcm(scale, v.denominator)
        yi = [int(v * scale) for v in y]
        in_basis = set(self.basis)
        best, best_rc = None, 0
        limit = self.n + (self.r if allow_artificial else 0)
        for j in range(limit):
            if j in in_basis:
                continue
            col = self.column(j)
            rc = cost(j) * scale - sum(a * c for a, c in zip(yi, col) if c)
            if rc < 0:
                if self.bland:
                    return j
                if rc < best_rc:
                    best, best_rc = j, rc
        return best

    def pivot_on(self, e):
        col = self.column(e)
        d = [sum(self.binv[i][c] * col[c] for c in range(self.r) if col[c]) for i in range(self.r)]
        row, ratio = None, None
        for i in range(self.r):
            if d[i] > 0:
                q = self.xb[i] / d[i]
                if ratio is None or q < ratio or (q == ratio and self.basis[i] < self.basis[row]):
                    row, ratio = i, q
        if row is None:
            return False
        self._pivot(row, e, d)
        if ratio == 0:
            self.stall += 1
            if self.stall > _BLAND_AFTER:
                self.bland = True
        else:
            self.stall = 0
        return True

    def _pivot(self, row, e, d):
        piv = d[row]
        top = [v / piv for v in self.binv[row]]
        xr = self.xb[row] / piv
        for i in range(self.r):
            if i != row and d[i]:
                f = d[i]
                self.binv[i] = [a - f * t for a, t in zip(self.binv[i], top)]
                self.xb[i] -= f * xr
        self.binv[row] = top
        self.xb[row] = xr
        self.basis[row] = e

    def run(self, cost, allow_artificial):
        while True:
            e = self.entering(cost, allow_artificial)
            if e is None:
                return "optimal"
            if not self.pivot_on(e):
                return "unbounded"

    def evict_artificials(self):
        for row in range(self.r):
            if self.basis[row] < self.n:
                continue
            in_basis = set(self.basis)
            for j in range(self.n):
                if j in in_basis:
                    continue
                col = self.cols[j]
                dj = sum(self.binv[row][c] * col[c] for c in range(self.r) if col[c])
                if dj:
                    d = [sum(self.binv[i][c] * col[c] for c in range(self.r) if col[c])
                         for i in range(self.r)]
                    self._pivot(row, j, d)
                    break

    def solution(self):
        x = [Fraction(0)] * self.n
        for i, j in enumerate(self.basis):
            if j < self.n:
                x[j] = self.xb[i]
        return x


def solve(
    columns: Sequence[Sequence],
    b: Sequence,
    cost: Sequence | None = None,
) -> LPResult:
    """Minimize ``cost . x`` over ``{x >= 0 : A x = b}``.

    With ``cost=None`` only feasibility is decided (phase one).
    """
    lp = _Revised(columns, b)
    n = lp.n
    lp.run(lambda j: int(j >= n), allow_artificial=True)
    infeas = sum(lp.xb[i] for i, j in enumerate(lp.basis) if j >= n)
    if infeas > 0:
        return LPResult("infeasible", [], None)
    if cost is None:
        return LPResult("optimal", lp.solution(), Fraction(0))
    lp.evict_artificials()
    lp.bland, lp.stall = False, 0
    c = [_exact(v) for v in cost]
    status = lp.run(lambda j: c[j] if j < n else 0, allow_artificial=False)
    if status == "unbounded":
        return LPResult("unbounded", [], None)
    x = lp.solution()
    return LPResult("optimal", x, sum(ci * xi for ci, xi in zip(c, x)))
