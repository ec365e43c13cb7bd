"""Degree sequence polytopes at desk scale.

Lattice points are enumerated exhaustively and every vertex question is
settled by exact rational LPs (see :mod:`degseq.simplex`).  Points stay
labelled; the polytopes are invariant under permuting coordinates, which
:func:`polytope_vertices` uses to test one point per orbit.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from degseq import simplex
from degseq.core import DEFAULT_CAPS, Caps, canonicalize, parse_rational
from degseq.errors import DimensionError, EnumerationCapExceeded
from degseq.oracle import all_edges
from degseq.realize import DOMINATING, ISOLATING, threshold_degrees


@dataclass(frozen=True)
class PointSet:
    dimension: int
    points: frozenset

    def __post_init__(self):
        pts = frozenset(tuple(p) for p in self.points)
        if any(len(p) != self.dimension for p in pts):
            raise DimensionError(f"all points must have dimension {self.dimension}")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))

    def __contains__(self, p):
        return tuple(p) in self.points

    def without(self, p) -> PointSet:
        return PointSet(self.dimension, self.points - {tuple(p)})

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in sorted(self.points)]


def enumerate_degree_points(n: int, k: int, m: int, caps: Caps = DEFAULT_CAPS) -> PointSet:
    """Labelled degree vectors of all simple k-hypergraphs with m edges on [n]."""
    e = math.comb(n, k)
    if e > caps.max_edge_choices:
        raise EnumerationCapExceeded(f"C({n},{k})={e} exceeds {caps.max_edge_choices}")
    if math.comb(e, m) > caps.max_enum:
        raise EnumerationCapExceeded(f"C({e},{m}) hypergraphs exceed {caps.max_enum}")
    edges = all_edges(n, k)
    points = set()
    for combo in itertools.combinations(edges, m):
        deg = [0] * n
        for edge in combo:
            for v in edge:
                deg[v] += 1
        points.add(tuple(deg))
    return PointSet(n, frozenset(points))


def hull_membership(p: Sequence, points: PointSet | Iterable[Sequence[int]]) -> bool:
    """Whether ``p`` is a convex combination of ``points`` (exact LP)."""
    p = [parse_rational(x) if not isinstance(x, int) else x for x in p]
    pts = sorted(points.points if isinstance(points, PointSet) else {tuple(q) for q in points})
    if not pts:
        return False
    if any(len(q) != len(p) for q in pts):
        raise DimensionError("point dimensions differ")
    for i in range(len(p)):
        lo = min(q[i] for q in pts)
        hi = max(q[i] for q in pts)
        if p[i] < lo or p[i] > hi:
            return False
    columns = [tuple(q) + (1,) for q in pts]
    return simplex.solve(columns, list(p) + [1]).status == "optimal"


def polytope_vertices(
    n: int, k: int, m: int, caps: Caps = DEFAULT_CAPS, symmetric: bool = True
) -> PointSet:
    """Points of :func:`enumerate_degree_points` outside the hull of the others.

    With ``symmetric`` only the sorted representative of each orbit is
    tested and the verdict is shared by all its relabellings.
    """
    pts = enumerate_degree_points(n, k, m, caps)
    if not symmetric:
        return PointSet(n, frozenset(p for p in pts.points if not hull_membership(p, pts.without(p))))
    verdict = {}
    vertices = set()
    for p in pts.points:
        rep, _ = canonicalize(p)
        if rep not in verdict:
            verdict[rep] = not hull_membership(rep, pts.without(rep))
        if verdict[rep]:
            vertices.add(p)
    return PointSet(n, frozenset(vertices))


def separating_weight(p: Sequence[int], points: PointSet) -> list[Fraction] | None:
    """A weight vector ``w`` with ``w.p > w.q`` for every other point ``q``.

    Maximizes the margin ``t`` over the box ``-1 <= w <= 1`` by adding
    violated constraints one at a time; returns ``None`` when the best margin
    is not positive.  This is an LP in weight space, independent of the
    convex-multiplier test in :func:`hull_membership`.
    """
    p = tuple(p)
    others = sorted(points.points - {p})
    if not others:
        return [Fraction(0)] * len(p)
    n = len(p)
    active = [others[0]]
    while True:
        w, t = _margin_lp(p, active)
        worst = min(others, key=lambda q: sum(wi * (a - b) for wi, a, b in zip(w, p, q)))
        slack = sum(wi * (a - b) for wi, a, b in zip(w, p, worst))
        if slack < t and worst not in active:
            active.append(worst)
            continue
        break
    if t <= 0:
        return None
    return w


def _margin_lp(p, active):
    # variables: u_0..u_{n-1} (w = u - 1), v_0..v_{n-1} (u + v = 2), t+, t-, slacks
    n, r = len(p), len(active)
    nvar = 2 * n + 2 + r
    cols = [[0] * (r + n) for _ in range(nvar)]
    b = []
    for row, q in enumerate(active):
        diff = [a - c for a, c in zip(p, q)]
        for i in range(n):
            cols[i][row] = diff[i]
        cols[2 * n][row] = -1
        cols[2 * n + 1][row] = 1
        cols[2 * n + 2 + row][row] = -1
        b.append(sum(diff))
    for i in range(n):
        cols[i][r + i] = 1
        cols[n + i][r + i] = 1
        b.append(2)
    cost = [0] * nvar
    cost[2 * n], cost[2 * n + 1] = -1, 1
    res = simplex.solve(cols, b, cost)
    x = res.x
    w = [x[i] - 1 for i in range(n)]
    return w, x[2 * n] - x[2 * n + 1]


def threshold_point_set(n: int, m: int) -> PointSet:
    """Labelled degree vectors of threshold graphs with m edges on [n].

    Built from every label sequence and every vertex ordering, without
    looking at the polytope.
    """
    points = set()
    for labels in itertools.product((DOMINATING, ISOLATING), repeat=n):
        edges = sum(n - 1 - t for t, lab in enumerate(labels) if lab == DOMINATING)
        if edges == m:
            points.update(itertools.permutations(threshold_degrees(labels)))
    return PointSet(n, frozenset(points))


def verify_threshold_vertex_theorem(n: int, m: int, caps: Caps = DEFAULT_CAPS) -> dict:
    """Compare the vertices of the m-edge graph polytope with threshold sequences."""
    vertices = polytope_vertices(n, 2, m, caps)
    threshold = threshold_point_set(n, m)
    return {
        "n": n,
        "m": m,
        "result": "equal" if vertices.points == threshold.points else "unequal",
        "vertices": vertices.to_json(),
        "threshold": threshold.to_json(),
        "only_vertices": sorted(list(p) for p in vertices.points - threshold.points),
        "only_threshold": sorted(list(p) for p in threshold.points - vertices.points),
    }


def dn2_membership(d: Sequence, caps: Caps = DEFAULT_CAPS) -> bool:
    """Check every inequality ``sum_S d - sum_T d <= |S|(n-1-|T|)`` over disjoint S, T."""
    d = [parse_rational(x) if not isinstance(x, int) else x for x in d]
    n = len(d)
    if n > caps.max_dn2_n:
        raise EnumerationCapExceeded(f"n={n} exceeds {caps.max_dn2_n}")
    for side in itertools.product((0, 1, -1), repeat=n):
        s = side.count(1)
        t = side.count(-1)
        if sum(x * c for x, c in zip(d, side)) > s * (n - 1 - t):
            return False
    return True


def graph_points(n: int, caps: Caps = DEFAULT_CAPS) -> PointSet:
    """Degree vectors of all graphs on [n], any number of edges."""
    pts = set()
    for m in range(math.comb(n, 2) + 1):
        pts |= enumerate_degree_points(n, 2, m, caps).points
    return PointSet(n, frozenset(pts))
