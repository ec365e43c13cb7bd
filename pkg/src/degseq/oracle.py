"""Exponential brute-force references used as ground truth in the tests."""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterator, Sequence

from degseq.core import (
    DEFAULT_CAPS,
    Caps,
    Hypergraph,
    Multihypergraph,
    ObjectiveSpec,
    as_degrees,
    evaluate,
)
from degseq.errors import DomainError, EnumerationCapExceeded
from degseq.optimize import DpSolution


def all_edges(n: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), k))


def count_hypergraphs(n: int, k: int, m: int) -> int:
    return math.comb(math.comb(n, k), m)


def count_multihypergraphs(n: int, k: int, m: int) -> int:
    e = math.comb(n, k)
    if e == 0:
        return 1 if m == 0 else 0
    return math.comb(e + m - 1, m)


def _guard(count: int, caps: Caps) -> None:
    if count > caps.max_enum:
        raise EnumerationCapExceeded(f"{count} structures exceed the cap {caps.max_enum}")


def enumerate_hypergraphs(n: int, k: int, m: int, caps: Caps = DEFAULT_CAPS) -> Iterator[Hypergraph]:
    _guard(count_hypergraphs(n, k, m), caps)
    for combo in itertools.combinations(all_edges(n, k), m):
        yield Hypergraph(n, k, combo)


def enumerate_multihypergraphs(
    n: int, k: int, m: int, caps: Caps = DEFAULT_CAPS
) -> Iterator[Multihypergraph]:
    _guard(count_multihypergraphs(n, k, m), caps)
    for combo in itertools.combinations_with_replacement(all_edges(n, k), m):
        yield Multihypergraph.from_columns(n, k, combo)


def _degree_points(n, k, m, mode, first):
    """Map each reachable labelled degree vector to one edge combination.

    ``first`` restricts to combinations starting with that edge index
    (a shard); ``None`` means all.
    """
    edges = all_edges(n, k)
    e = len(edges)
    if m == 0:
        return {(0,) * n: ()}
    pick = itertools.combinations if mode == "hyper" else itertools.combinations_with_replacement
    shards = range(e) if first is None else [first]
    points = {}
    for j in shards:
        rest = range(j + 1, e) if mode == "hyper" else range(j, e)
        for tail in pick(rest, m - 1):
            deg = [0] * n
            for v in edges[j]:
                deg[v] += 1
            for t in tail:
                for v in edges[t]:
                    deg[v] += 1
            key = tuple(deg)
            if key not in points:
                points[key] = (j,) + tail
    return points


def _best_of(f, points):
    best = None
    for d, combo in points.items():
        key = (evaluate(f, d), d)
        if best is None or key > best[0]:
            best = (key, combo)
    return best


def _shard(args):
    f, n, k, m, mode, j = args
    return _best_of(f, _degree_points(n, k, m, mode, j))


def brute_opt(
    f: ObjectiveSpec,
    n: int,
    k: int,
    m: int,
    mode: str = "hyper",
    caps: Caps = DEFAULT_CAPS,
    jobs: int = 1,
) -> DpSolution | None:
    """Exact maximum of ``sum f_i(d_i)`` by exhaustive enumeration.

    Returns ``None`` when no structure exists.  Ties resolve to the
    lexicographically largest degree vector, so sharding over ``jobs``
    processes gives the same answer.
    """
    if mode not in ("hyper", "multi"):
        raise DomainError(f"unknown mode {mode!r}")
    f.check_vertices(n)
    count = count_hypergraphs(n, k, m) if mode == "hyper" else count_multihypergraphs(n, k, m)
    _guard(count, caps)
    if count == 0:
        return None
    edges = all_edges(n, k)
    if m == 0 or jobs <= 1:
        best = _best_of(f, _degree_points(n, k, m, mode, None))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_shard, [(f, n, k, m, mode, j) for j in range(len(edges))])
            best = max((p for p in parts if p is not None), key=lambda p: p[0])
    (value, degrees), combo = best
    cols = [edges[j] for j in combo]
    if mode == "hyper":
        witness = Hypergraph(n, k, tuple(cols))
    else:
        witness = Multihypergraph.from_columns(n, k, cols)
    return DpSolution(Fraction(value), degrees, witness, f"brute-{mode}")


def decide_degree_sequence(
    d: Sequence[int], k: int, caps: Caps = DEFAULT_CAPS
) -> Hypergraph | None:
    """Find a simple k-hypergraph with degree sequence ``d`` or return ``None``.

    Backtracking: the vertex with the largest residual degree receives all of
    its remaining edges at once, chosen among the still-active vertices, and
    is then retired, so no edge can repeat.  Branches are cut by the
    multihypergraph conditions (residual sum ``k m'``, each residual at most
    ``m'``) and by the number of edges a vertex can still join.  The number
    of search nodes is bounded by ``caps.max_enum``.
    """
    d = as_degrees(d)
    n = len(d)
    if k < 1:
        raise DomainError(f"edge size k={k} must be positive")
    total = sum(d)
    if total % k:
        return None
    m = total // k
    if m == 0:
        return Hypergraph(n, k)
    if k > n or max(d) > m:
        return None

    residual = list(d)
    chosen_edges: list[tuple[int, ...]] = []
    nodes = 0

    def prunable(m_left):
        alive = [u for u in range(n) if residual[u] > 0]
        if m_left == 0:
            return bool(alive)
        if len(alive) < k:
            return True
        room = math.comb(len(alive) - 1, k - 1)
        return any(residual[u] > m_left or residual[u] > room for u in alive)

    def search(m_left):
        nonlocal nodes
        if m_left == 0:
            return True
        nodes += 1
        if nodes > caps.max_enum:
            raise EnumerationCapExceeded(f"search exceeded {caps.max_enum} nodes")
        alive = [u for u in range(n) if residual[u] > 0]
        v = min(alive, key=lambda u: (-residual[u], u))
        others = sorted((u for u in alive if u != v), key=lambda u: (-residual[u], u))
        r = residual[v]
        options = list(itertools.combinations(others, k - 1))
        if r > len(options):
            return False
        for pick in itertools.combinations(options, r):
            use = Counter(u for t in pick for u in t)
            if any(c > residual[u] for u, c in use.items()):
                continue
            residual[v] = 0
            for u, c in use.items():
                residual[u] -= c
            if not prunable(m_left - r) and search(m_left - r):
                chosen_edges.extend((v,) + t for t in pick)
                return True
            residual[v] = r
            for u, c in use.items():
                residual[u] += c
        return False

    if prunable(m) or not search(m):
        return None
    return Hypergraph(n, k, tuple(chosen_edges))
