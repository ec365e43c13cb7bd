"""Polynomial-time optimizers over degree sequences.

All degree vectors in a :class:`DpSolution` are aligned with the vertex
labels of its witness.  When objectives tie, every solver returns the
lexicographically largest degree vector (for identical objectives this is
the lexicographically largest canonical sequence).
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

import numpy as np

from degseq.core import (
    DEFAULT_CAPS,
    Caps,
    DegreeSequence,
    Hypergraph,
    Multihypergraph,
    ObjectiveSpec,
    RationalLike,
    degree_sequence,
    evaluate,
    is_convex,
    parse_rational,
)
from degseq.errors import (
    DomainError,
    EnumerationCapExceeded,
    InfeasibleCount,
    NotConvex,
)
from degseq.realize import (
    DOMINATING,
    ISOLATING,
    ThresholdGraph,
    havel_hakimi_realize,
    multi_realize,
    threshold_degrees,
)

Witness = Union[Hypergraph, Multihypergraph, ThresholdGraph]


@dataclass(frozen=True)
class DpSolution:
    value: Fraction
    degrees: DegreeSequence
    witness: Witness
    algorithm: str = ""

    def witness_degrees(self) -> DegreeSequence:
        if isinstance(self.witness, ThresholdGraph):
            return degree_sequence(self.witness.to_hypergraph())
        return degree_sequence(self.witness)


def linear_objective(w: Sequence[RationalLike], m: int) -> ObjectiveSpec:
    """Tables ``f_i(t) = w_i t`` on ``{0..m}``."""
    w = [parse_rational(x) for x in w]
    return ObjectiveSpec.per_vertex([[wi * t for t in range(m + 1)] for wi in w])


def _check_k(k: int, n: int, m: int) -> None:
    if k < 1:
        raise DomainError(f"edge size k={k} must be positive")
    if k > n and m >= 1:
        raise InfeasibleCount(f"no {k}-edges on {n} vertices")


def _top_k(keys: Sequence[Fraction], k: int) -> tuple[int, ...]:
    order = sorted(range(len(keys)), key=lambda i: -keys[i])
    return tuple(sorted(order[:k]))


def linear_opt_multi(w: Sequence[RationalLike], k: int, m: int) -> DpSolution:
    """m copies of the k heaviest vertices (ties go to lower indices)."""
    w = [parse_rational(x) for x in w]
    n = len(w)
    _check_k(k, n, m)
    if m == 0:
        return DpSolution(Fraction(0), (0,) * n, Multihypergraph(n, k), "linear-multi")
    x = _top_k(w, k)
    h = Multihypergraph(n, k, ((x, m),))
    return DpSolution(m * sum(w[i] for i in x), degree_sequence(h), h, "linear-multi")


def top_weight_subsets(
    w: Sequence[RationalLike], k: int, count: int
) -> list[tuple[Fraction, tuple[int, ...]]]:
    """The ``count`` best k-subsets by total weight, best first.

    Lawler-style partitioning: a subproblem fixes a forced prefix and an
    excluded set, its champion is the forced part topped up greedily, and
    popping a champion splits the rest of its subproblem into children.
    Equal totals come out in lexicographic order of the rank tuples.
    """
    w = [parse_rational(x) for x in w]
    n = len(w)
    ranked = sorted(range(n), key=lambda i: -w[i])
    rw = [w[i] for i in ranked]

    def champion(forced, excluded):
        picked = list(forced)
        for p in range(n):
            if len(picked) == k:
                break
            if p not in excluded and p not in forced:
                picked.append(p)
        if len(picked) < k:
            return None
        picked.sort()
        return sum(rw[p] for p in picked), tuple(picked)

    out = []
    if count <= 0 or k > n or k < 0:
        return out
    first = champion((), frozenset())
    heap = [(-first[0], first[1], (), frozenset())]
    while heap and len(out) < count:
        neg, picked, forced, excluded = heapq.heappop(heap)
        out.append((-neg, tuple(sorted(ranked[p] for p in picked))))
        free = [p for p in picked if p not in forced]
        for t, p in enumerate(free):
            child_forced = tuple(forced) + tuple(free[:t])
            child_excluded = excluded | {p}
            best = champion(child_forced, child_excluded)
            if best is not None:
                heapq.heappush(heap, (-best[0], best[1], child_forced, child_excluded))
    return out


def _top_subsets_enumerate(w, k, count):
    w = [parse_rational(x) for x in w]
    ranked = sorted(range(len(w)), key=lambda i: -w[i])
    scored = []
    for picked in itertools.combinations(range(len(w)), k):
        scored.append((-sum(w[ranked[p]] for p in picked), picked))
    scored.sort()
    return [(-neg, tuple(sorted(ranked[p] for p in picked))) for neg, picked in scored[:count]]


def linear_opt_hyper(
    w: Sequence[RationalLike], k: int, m: int, method: str = "lawler"
) -> DpSolution:
    """m distinct k-edges with the largest weights (``method``: lawler | enumerate)."""
    w = [parse_rational(x) for x in w]
    n = len(w)
    if k < 1:
        raise DomainError(f"edge size k={k} must be positive")
    if m > math.comb(n, k):
        raise InfeasibleCount(f"{m} edges exceed C({n},{k})")
    if method == "lawler":
        best = top_weight_subsets(w, k, m)
    elif method == "enumerate":
        best = _top_subsets_enumerate(w, k, m)
    else:
        raise DomainError(f"unknown method {method!r}")
    h = Hypergraph(n, k, tuple(e for _, e in best))
    return DpSolution(sum((v for v, _ in best), Fraction(0)), degree_sequence(h), h,
                      "linear-hyper")


def opt_multi_dp(f: ObjectiveSpec, k: int, n: int, m: int) -> DpSolution:
    """Best degree vector with sum km and entries at most m, then realize it.

    Runs the stage-wise recursion backwards so the forward reconstruction
    can take the largest optimal degree at each vertex.
    """
    _check_k(k, n, m)
    f.check_domain(m)
    rows, scale = f.integer_rows(n)
    total = k * m
    # best[i][s]: optimum over vertices i..n-1 whose degrees sum to s
    best = [[None] * (total + 1) for _ in range(n + 1)]
    best[n][0] = 0
    for i in range(n - 1, -1, -1):
        nxt, cur, row = best[i + 1], best[i], rows[i]
        for s in range(total + 1):
            top = None
            for di in range(min(m, s) + 1):
                tail = nxt[s - di]
                if tail is not None and (top is None or row[di] + tail > top):
                    top = row[di] + tail
            cur[s] = top
    if best[0][total] is None:
        raise InfeasibleCount(f"no degree vector with sum {total} and entries <= {m}")
    degrees, s = [], total
    for i in range(n):
        target = best[i][s]
        for di in range(min(m, s), -1, -1):
            tail = best[i + 1][s - di]
            if tail is not None and rows[i][di] + tail == target:
                degrees.append(di)
                s -= di
                break
    degrees = tuple(degrees)
    witness = multi_realize(degrees, k, m)
    return DpSolution(Fraction(best[0][total], scale), degrees, witness, "multi-dp")


def _require_identical(f: ObjectiveSpec) -> None:
    if f.kind != "identical":
        raise DomainError("this algorithm needs identical vertex functions")


def opt_graph_dp(f: ObjectiveSpec, n: int, m: int) -> DpSolution:
    """Best graphical sequence with sum 2m for an identical objective.

    States are ``(i, p, d_i, beta, s)``: vertices ``1..i`` form a prefix with
    degree sum ``p`` and smallest degree ``d_i``; vertices ``beta+1..n`` have
    degree at most ``i`` and sum ``s``.  A move fixes ``d_{i+1}`` and places
    ``beta - beta'`` vertices of degree ``i+1`` at ``beta'+1..beta``.  A first
    move from the initial state places the degree-0 vertices at the end.

    The second score component is the degree vector read as base-``B``
    digits, which makes equal-value ties resolve to the lexicographically
    largest sequence.
    """
    _require_identical(f)
    if m > math.comb(n, 2):
        raise InfeasibleCount(f"{m} edges exceed C({n},2)")
    if n == 0:
        return DpSolution(Fraction(0), (), Hypergraph(0, 2), "graph-dp")
    if f.m_max < min(m, n - 1):
        raise DomainError(f"objective tabulated up to {f.m_max}, need {min(m, n - 1)}")
    rows, scale = f.integer_rows(n)
    row = rows[0]
    top = min(f.m_max, n - 1)
    two_m = 2 * m

    base = n + 2
    weight = [base ** (n - q) for q in range(n + 1)]  # weight[q]: position q (1-indexed)
    run = [0] * (n + 2)  # run[q] = sum of weight[1..q]
    for q in range(1, n + 1):
        run[q] = run[q - 1] + weight[q]

    # layer[state] = (value, lexkey, parent_state, move)
    layer = {}
    for alpha in range(n + 1):
        state = (0, n, n - alpha, 0)
        layer[state] = (alpha * row[0], 0, None, ("zeros", alpha))
    layers = [layer]
    finals = []

    for i in range(n):
        nxt = {}
        for state, (val, key, _, _) in layer.items():
            p, d, beta, s = state
            if beta == i:
                if p + s == two_m:
                    finals.append((val, key, i, state))
                continue
            for beta2 in range(i + 1, beta + 1):
                alpha = beta - beta2
                if alpha and i + 1 > top:
                    continue
                s2 = s + (i + 1) * alpha
                ub = min(d, top, two_m - p - s2,
                         s2 + (beta2 - i - 1) * (i + 1) + (i + 1) * i - p)
                if ub < i + 1:
                    continue
                block_val = alpha * row[i + 1] if alpha else 0
                block_key = (i + 1) * (run[beta] - run[beta2])
                for d2 in range(i + 1, ub + 1):
                    v2 = val + row[d2] + block_val
                    k2 = key + d2 * weight[i + 1] + block_key
                    new = (p + d2, d2, beta2, s2)
                    old = nxt.get(new)
                    if old is None or (v2, k2) > (old[0], old[1]):
                        nxt[new] = (v2, k2, state, (d2, beta2))
        layer = nxt
        layers.append(layer)
    for state, (val, key, _, _) in layer.items():
        p, d, beta, s = state
        if beta == n and p + s == two_m:
            finals.append((val, key, n, state))

    if not finals:
        raise InfeasibleCount(f"no graph on {n} vertices with {m} edges")
    val, key, i, state = max(finals, key=lambda t: (t[0], t[1]))
    degrees = [0] * n
    while i > 0:
        _, _, parent, (d2, beta2) = layers[i][state]
        beta = parent[2]
        degrees[i - 1] = d2
        for q in range(beta2, beta):
            degrees[q] = i
        state = parent
        i -= 1
    degrees = tuple(degrees)
    witness = havel_hakimi_realize(degrees)
    return DpSolution(Fraction(val, scale), degrees, witness, "graph-dp")


_INT64_SAFE = 2 ** 62


def opt_threshold_dp(f: ObjectiveSpec, n: int, m: int) -> DpSolution:
    """Best threshold graph with m edges for a convex identical objective.

    Stage i decides whether vertex i dominates (joins all later vertices) or
    isolates.  State ``(i, e, delta)``: e edges touch the first i vertices,
    delta of which dominate.  The value-to-go tables are filled backwards
    with numpy over all ``(delta, e)`` at once; ties prefer dominating.
    """
    _require_identical(f)
    if not is_convex(f):
        raise NotConvex("threshold DP needs a convex objective")
    if m > math.comb(n, 2):
        raise InfeasibleCount(f"{m} edges exceed C({n},2)")
    if n == 0:
        return DpSolution(Fraction(0), (), ThresholdGraph(0, ()), "threshold-dp")
    if f.m_max < min(m, n - 1):
        raise DomainError(f"objective tabulated up to {f.m_max}, need {min(m, n - 1)}")
    rows, scale = f.integer_rows(n)
    row = rows[0][: n]
    row = row + [0] * (n - len(row))
    usable = np.arange(n) <= f.m_max
    bound = max((abs(v) for v in row), default=0) * n
    dtype = np.int64 if bound < _INT64_SAFE else object
    r = np.array(row, dtype=dtype)

    value = np.zeros((n + 1, m + 1), dtype=dtype)
    valid = np.zeros((n + 1, m + 1), dtype=bool)
    valid[:, m] = True
    choices = [None] * n
    for i in range(n - 1, -1, -1):
        c = n - i - 1
        nv, nval = valid[: i + 2], value[: i + 2]
        deltas = np.arange(i + 1)
        iso_ok = nv[: i + 1] & usable[deltas][:, None]
        iso = nval[: i + 1] + r[deltas][:, None]
        dom_ok = np.zeros((i + 1, m + 1), dtype=bool)
        dom = np.zeros((i + 1, m + 1), dtype=dtype)
        if c <= m:
            deg = np.minimum(deltas + c, n - 1)
            ok = usable[deg] & (deltas + c <= n - 1)
            dom_ok[:, : m + 1 - c] = nv[1: i + 2, c:] & ok[:, None]
            dom[:, : m + 1 - c] = nval[1: i + 2, c:] + r[deg][:, None]
        if c > 0:
            take = dom_ok & (~iso_ok | (dom >= iso))
        else:
            take = dom_ok & (~iso_ok | (dom > iso))
        new_val = np.where(take, dom, iso)
        new_ok = take | iso_ok
        choices[i] = take
        value = np.zeros((n + 1, m + 1), dtype=dtype)
        valid = np.zeros((n + 1, m + 1), dtype=bool)
        value[: i + 1] = new_val
        valid[: i + 1] = new_ok
    if not valid[0, 0]:
        raise InfeasibleCount(f"no threshold graph on {n} vertices with {m} edges")
    total = value[0, 0]
    labels, delta, e = [], 0, 0
    for i in range(n):
        if choices[i][delta, e]:
            labels.append(DOMINATING)
            e += n - i - 1
            delta += 1
        else:
            labels.append(ISOLATING)
    pos_deg = threshold_degrees(labels)
    ranked = sorted(range(n), key=lambda t: -pos_deg[t])
    order = [0] * n
    for rank, t in enumerate(ranked):
        order[t] = rank
    witness = ThresholdGraph(n, tuple(labels), tuple(order))
    degrees = tuple(pos_deg[t] for t in ranked)
    return DpSolution(Fraction(int(total), scale), degrees, witness, "threshold-dp")


def opt_convex_multi(
    f: ObjectiveSpec | Callable[[DegreeSequence], RationalLike],
    k: int,
    n: int,
    m: int,
    mode: str = "separable-convex",
    caps: Caps = DEFAULT_CAPS,
) -> DpSolution:
    """m copies of one edge x, optimal for convex objectives.

    ``separable-convex`` takes the k largest ``f_i(m) - f_i(0)``.
    ``enumerate`` scans every k-subset for the best ``f(m x)``; there ``f``
    may also be a callable on whole degree vectors.  Convexity is what makes
    the answer optimal over all multihypergraphs; enumerate mode does not
    check it.
    """
    _check_k(k, n, m)
    if isinstance(f, ObjectiveSpec):
        f.check_vertices(n)
        f.check_domain(m)

        def score(d):
            return evaluate(f, d)
    else:

        def score(d):
            return parse_rational(f(d))
    if m == 0:
        d = (0,) * n
        return DpSolution(Fraction(score(d)), d, Multihypergraph(n, k), "convex-multi")
    if mode == "separable-convex":
        if not isinstance(f, ObjectiveSpec):
            raise DomainError("separable-convex mode needs a tabulated objective")
        if not is_convex(f):
            raise NotConvex("objective is not convex")
        x = _top_k([f.value(i, m) - f.value(i, 0) for i in range(n)], k)
    elif mode == "enumerate":
        if math.comb(n, k) > caps.max_enum:
            raise EnumerationCapExceeded(f"C({n},{k}) exceeds {caps.max_enum}")
        x, best = None, None
        for cand in itertools.combinations(range(n), k):
            d = tuple(m if i in cand else 0 for i in range(n))
            v = score(d)
            if best is None or v > best:
                x, best = cand, v
    else:
        raise DomainError(f"unknown mode {mode!r}")
    h = Multihypergraph(n, k, ((x, m),))
    d = degree_sequence(h)
    return DpSolution(Fraction(score(d)), d, h, "convex-multi")
