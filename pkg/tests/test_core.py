from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from degseq.core import (
    Hypergraph,
    Multihypergraph,
    ObjectiveSpec,
    canonicalize,
    degree_sequence,
    evaluate,
    format_rational,
    is_convex,
    parse_rational,
    uncanonicalize,
)
from degseq.errors import DomainError

degrees = st.lists(st.integers(0, 9), max_size=8)


@pytest.mark.parametrize(
    "d, expected",
    [((1, 3, 2), (3, 2, 1)), ((0, 0, 0), (0, 0, 0)), ((2, 2, 5), (5, 2, 2))],
)
def test_canonicalize_examples(d, expected):
    s, perm = canonicalize(d)
    assert s == expected
    assert uncanonicalize(s, perm) == d


def test_canonicalize_is_stable():
    _, perm = canonicalize((0, 0, 0))
    assert perm == (0, 1, 2)
    _, perm = canonicalize((2, 2, 5))
    assert perm == (2, 0, 1)


@given(degrees)
def test_canonicalize_idempotent_and_invertible(d):
    s, perm = canonicalize(d)
    assert canonicalize(s)[0] == s
    assert list(s) == sorted(d, reverse=True)
    assert uncanonicalize(s, perm) == tuple(d)


def test_degree_sequence_examples():
    assert degree_sequence(Hypergraph(3, 2, ((0, 1), (0, 2)))) == (2, 1, 1)
    assert degree_sequence(Multihypergraph(3, 3, (((0, 1, 2), 2),))) == (2, 2, 2)
    assert degree_sequence(Hypergraph(4, 2)) == (0, 0, 0, 0)


@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.integers(1, n).flatmap(
            lambda k: st.tuples(st.just(k), st.lists(
                st.lists(st.integers(0, n - 1), min_size=k, max_size=k, unique=True),
                max_size=6)))
    )))
def test_degree_sum_identity(args):
    n, (k, cols) = args
    h = Multihypergraph.from_columns(n, k, cols)
    assert sum(degree_sequence(h)) == k * h.m == k * len(cols)
    simple = Hypergraph(n, k, tuple({tuple(sorted(c)) for c in cols}))
    assert sum(degree_sequence(simple)) == k * simple.m


def test_hypergraph_rejects_bad_edges():
    with pytest.raises(DomainError):
        Hypergraph(3, 2, ((0, 1), (1, 0)))
    with pytest.raises(DomainError):
        Hypergraph(3, 2, ((0, 3),))
    with pytest.raises(DomainError):
        Hypergraph(3, 2, ((0, 1, 2),))
    with pytest.raises(DomainError):
        Multihypergraph(3, 2, (((0, 1), 0),))


def test_evaluate_examples():
    sq = ObjectiveSpec.identical([0, 1, 4, 9])
    assert evaluate(sq, (2, 1, 1)) == 6
    f = ObjectiveSpec.per_vertex([[3, 5], [-1, 7]])
    assert evaluate(f, (0, 0)) == 2
    assert evaluate(ObjectiveSpec.per_vertex([[0, 5], [0, 7]]), (1, 0)) == 5


def test_evaluate_errors():
    sq = ObjectiveSpec.identical([0, 1, 4, 9])
    with pytest.raises(DomainError):
        evaluate(sq, (4, 0))
    with pytest.raises(DomainError):
        evaluate(ObjectiveSpec.per_vertex([[0, 1], [0, 1]]), (1, 0, 0))
    with pytest.raises(DomainError):
        evaluate(sq, (-1, 0))


@given(degrees, st.lists(st.integers(-20, 20), min_size=10, max_size=10))
def test_evaluate_invariant_under_canonicalize(d, row):
    f = ObjectiveSpec.identical(row)
    assert evaluate(f, canonicalize(d)[0]) == evaluate(f, d)


def test_is_convex_examples():
    assert is_convex(ObjectiveSpec.identical([0, 1, 4, 9]))
    assert not is_convex(ObjectiveSpec.identical([0, 0, 1, 0, 0]))
    assert is_convex(ObjectiveSpec.identical([0, 3, 6, 9]))
    assert not is_convex(ObjectiveSpec.per_vertex([[0, 1, 4], [0, 2, 3]]))


def test_objective_shape_checks():
    with pytest.raises(DomainError):
        ObjectiveSpec(2, "identical", ((0, 1),))
    with pytest.raises(DomainError):
        ObjectiveSpec(1, "identical", ((0, 1), (0, 1)))
    with pytest.raises(DomainError):
        ObjectiveSpec(1, "sideways", ((0, 1),))


def test_integer_rows_scale():
    f = ObjectiveSpec.identical(["1/2", "-1/3", 2])
    rows, scale = f.integer_rows(2)
    assert scale == 6
    assert rows == [[3, -2, 12], [3, -2, 12]]


@pytest.mark.parametrize("text, q", [("-3/2", Fraction(-3, 2)), ("7", Fraction(7)),
                                     (" +4/6 ", Fraction(2, 3)), ("0/5", Fraction(0))])
def test_parse_rational(text, q):
    assert parse_rational(text) == q


@pytest.mark.parametrize("bad", ["1.5", "1/0", "x", "", "1/-2", True, 1.5])
def test_parse_rational_rejects(bad):
    with pytest.raises(DomainError):
        parse_rational(bad)


@given(st.fractions())
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q
