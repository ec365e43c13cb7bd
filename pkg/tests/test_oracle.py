import itertools
import math
import random

import pytest

from degseq.core import Caps, ObjectiveSpec, degree_sequence, evaluate
from degseq.errors import EnumerationCapExceeded
from degseq.oracle import (
    brute_opt,
    count_hypergraphs,
    count_multihypergraphs,
    decide_degree_sequence,
    enumerate_hypergraphs,
    enumerate_multihypergraphs,
)
from degseq.realize import eg_check


@pytest.mark.parametrize("n, k, m", [(4, 2, 3), (5, 3, 2), (3, 3, 1), (4, 2, 0), (3, 2, 4)])
def test_stream_cardinalities(n, k, m):
    hs = list(enumerate_hypergraphs(n, k, m))
    assert len(hs) == count_hypergraphs(n, k, m) == math.comb(math.comb(n, k), m)
    assert len(set(hs)) == len(hs)
    ms = list(enumerate_multihypergraphs(n, k, m))
    assert len(ms) == count_multihypergraphs(n, k, m)
    assert count_multihypergraphs(n, k, m) == math.comb(math.comb(n, k) + m - 1, m)
    assert all(h.m == m for h in ms)


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded):
        next(iter(enumerate_hypergraphs(8, 2, 10, Caps(max_enum=1000))))


def test_decide_examples():
    assert decide_degree_sequence((1, 1, 1), 3) is not None
    assert decide_degree_sequence((3, 1, 1, 1), 3) is None
    assert decide_degree_sequence((3, 3, 3, 3), 3) is not None
    assert decide_degree_sequence((2, 2, 2, 2), 3) is None
    assert decide_degree_sequence((0, 0, 0), 3) is not None


def decide_by_enumeration(n, k):
    out = set()
    edges = list(itertools.combinations(range(n), k))
    for mask in range(1 << len(edges)):
        d = [0] * n
        for b, e in enumerate(edges):
            if mask >> b & 1:
                for v in e:
                    d[v] += 1
        out.add(tuple(d))
    return out


def test_decide_equals_full_enumeration_up_to_5():
    for n in range(1, 6):
        for k in range(1, n + 1):
            real = decide_by_enumeration(n, k)
            top = math.comb(n - 1, k - 1)
            for d in itertools.product(range(top + 1), repeat=n):
                h = decide_degree_sequence(d, k)
                assert (h is not None) == (d in real), (d, k)
                if h is not None:
                    assert degree_sequence(h) == d


def test_decide_matches_eg_on_graphs():
    for n in range(1, 8):
        for d in itertools.combinations_with_replacement(range(n), n):
            assert (decide_degree_sequence(d, 2) is not None) == eg_check(d)


def test_brute_opt_none_when_empty():
    f = ObjectiveSpec.identical([0, 1, 2, 3, 4])
    assert brute_opt(f, 3, 2, 4) is None


def test_brute_opt_witness():
    f = ObjectiveSpec.identical([0, 1, 4, 9])
    sol = brute_opt(f, 4, 2, 3)
    assert sol.value == 12 and sol.degrees == (3, 1, 1, 1)
    assert degree_sequence(sol.witness) == sol.degrees
    sol = brute_opt(f, 3, 2, 3, mode="multi")
    assert sol.value == 18 and sol.degrees == (3, 3, 0)


def test_brute_opt_parallel_matches_serial():
    rng = random.Random(3)
    f = ObjectiveSpec.identical([rng.randint(-5, 5) for _ in range(6)])
    a = brute_opt(f, 5, 2, 5)
    b = brute_opt(f, 5, 2, 5, jobs=2)
    assert (a.value, a.degrees) == (b.value, b.degrees)
    assert evaluate(f, b.degrees) == b.value
