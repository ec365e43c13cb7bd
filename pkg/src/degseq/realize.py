"""Feasibility tests and constructive realizations of degree sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from degseq.core import (
    DegreeSequence,
    Hypergraph,
    Multihypergraph,
    as_degrees,
    canonicalize,
)
from degseq.errors import Infeasible, NotThresholdSequence

DOMINATING = "dominating"
ISOLATING = "isolating"


def eg_check(d: Sequence[int]) -> bool:
    """Erdos-Gallai test in the min-form, O(n^2) after sorting."""
    try:
        s, _ = canonicalize(d)
    except ValueError:
        return False
    if sum(s) % 2:
        return False
    n = len(s)
    prefix = 0
    for j in range(1, n + 1):
        prefix += s[j - 1]
        if prefix - j * (j - 1) > sum(min(j, x) for x in s[j:]):
            return False
    return True


def eg_check_sorted_form(d: Sequence[int]) -> bool:
    """Erdos-Gallai test via ``sum_{i<=j} d_i - sum_{i>l} d_i <= j(l-1)``, j <= l.

    Cross-check for :func:`eg_check`; cubic, so not used by the solvers.
    """
    try:
        s, _ = canonicalize(d)
    except ValueError:
        return False
    if sum(s) % 2:
        return False
    n = len(s)
    prefix = [0]
    for x in s:
        prefix.append(prefix[-1] + x)
    for j in range(1, n + 1):
        for l in range(j, n + 1):
            if prefix[j] - (prefix[n] - prefix[l]) > j * (l - 1):
                return False
    return True


def havel_hakimi_realize(d: Sequence[int]) -> Hypergraph:
    """Build a simple graph with degree sequence ``d`` (original labelling).

    Repeatedly joins the vertex of largest residual degree to the next
    largest ones.  Raises :class:`Infeasible` when ``d`` is not graphical.
    """
    d = as_degrees(d)
    n = len(d)
    if not eg_check(d):
        raise Infeasible(f"{d} is not graphical")
    residual = list(d)
    alive = list(range(n))
    edges = []
    while alive:
        alive.sort(key=lambda v: (-residual[v], v))
        v = alive.pop(0)
        need = residual[v]
        if need > len(alive):
            raise Infeasible(f"{d} is not graphical")
        for u in alive[:need]:
            if residual[u] == 0:
                raise Infeasible(f"{d} is not graphical")
            residual[u] -= 1
            edges.append((v, u))
        residual[v] = 0
    return Hypergraph(n, 2, tuple(edges))


def multi_feasible(d: Sequence[int], k: int, m: int) -> bool:
    d = as_degrees(d)
    if k < 1 or m < 0:
        return False
    if m >= 1 and k > len(d):
        return False
    return sum(d) == k * m and all(x <= m for x in d)


def multi_realize(d: Sequence[int], k: int, m: int) -> Multihypergraph:
    """Greedy realization: each edge takes the k largest residual degrees.

    Ties go to the lowest vertex index.
    """
    d = as_degrees(d)
    if not multi_feasible(d, k, m):
        raise Infeasible(f"{d} is not a degree sequence of a {k}-multihypergraph with {m} edges")
    n = len(d)
    residual = list(d)
    columns = []
    for _ in range(m):
        top = sorted(range(n), key=lambda v: (-residual[v], v))[:k]
        for v in top:
            residual[v] -= 1
        columns.append(top)
    return Multihypergraph.from_columns(n, k, columns)


@dataclass(frozen=True)
class ThresholdGraph:
    """A threshold graph given by labels along a construction order.

    ``order[t]`` is the vertex placed at position ``t`` and ``labels[t]`` its
    label: a dominating vertex is adjacent to every later vertex, an
    isolating one to none of them.  The default order is the identity.
    """

    n: int
    labels: tuple[str, ...]
    order: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.order:
            object.__setattr__(self, "order", tuple(range(self.n)))
        if len(self.labels) != self.n or sorted(self.order) != list(range(self.n)):
            raise ValueError("labels and order must cover all n vertices")
        if any(lab not in (DOMINATING, ISOLATING) for lab in self.labels):
            raise ValueError(f"bad labels {self.labels}")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for t, lab in enumerate(self.labels):
            if lab == DOMINATING:
                u = self.order[t]
                out.extend(tuple(sorted((u, w))) for w in self.order[t + 1:])
        return tuple(sorted(out))

    @property
    def m(self) -> int:
        return sum(self.n - 1 - t for t, lab in enumerate(self.labels) if lab == DOMINATING)

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, 2, self.edges)

    def to_json(self) -> dict:
        return {
            "type": "threshold",
            "n": self.n,
            "labels": list(self.labels),
            "order": [v + 1 for v in self.order],
            "edges": [[u + 1, w + 1] for u, w in self.edges],
        }


def threshold_realize(d: Sequence[int]) -> ThresholdGraph:
    """Peel isolated (preferred) or dominating vertices off ``d``."""
    d = as_degrees(d)
    residual = list(d)
    alive = list(range(len(d)))
    order, labels = [], []
    while alive:
        top = len(alive) - 1
        v = next((u for u in alive if residual[u] == 0), None)
        if v is not None:
            labels.append(ISOLATING)
        else:
            v = next((u for u in alive if residual[u] == top), None)
            if v is None:
                raise NotThresholdSequence(f"{d} is not a threshold degree sequence")
            labels.append(DOMINATING)
            for u in alive:
                if u != v:
                    residual[u] -= 1
        alive.remove(v)
        order.append(v)
    return ThresholdGraph(len(d), tuple(labels), tuple(order))


def neighborhoods(g: Hypergraph) -> list[set[int]]:
    nbrs = [set() for _ in range(g.n)]
    for u, w in g.edges:
        nbrs[u].add(w)
        nbrs[w].add(u)
    return nbrs


def is_threshold(g: Hypergraph) -> bool:
    """``N(i)`` must lie inside ``N[j]`` whenever ``deg(i) <= deg(j)``."""
    nbrs = neighborhoods(g)
    for i in range(g.n):
        for j in range(g.n):
            if i != j and len(nbrs[i]) <= len(nbrs[j]):
                if not nbrs[i] <= nbrs[j] | {j}:
                    return False
    return True


def threshold_degrees(labels: Sequence[str]) -> DegreeSequence:
    """Position-order degrees of the threshold graph with identity order."""
    n = len(labels)
    out, dominating = [], 0
    for t, lab in enumerate(labels):
        if lab == DOMINATING:
            out.append(dominating + n - 1 - t)
            dominating += 1
        else:
            out.append(dominating)
    return tuple(out)
