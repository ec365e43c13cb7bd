import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from degseq.core import Multihypergraph, ObjectiveSpec, evaluate
from degseq.errors import DimensionError, DomainError
from degseq.shifted import (
    check_column_matrix,
    column_matrix,
    cost_matrix,
    distinct_columns,
    row_sums,
    shift,
    shifted_value,
)

matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 1), min_size=4, max_size=4), min_size=n, max_size=n))


def test_shift_example():
    x = ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    assert shift(x) == ((1, 1, 0), (1, 1, 0), (1, 1, 0))
    assert row_sums(x) == row_sums(shift(x)) == (2, 2, 2)


@given(matrices)
def test_shift_idempotent(x):
    assert shift(shift(x)) == shift(x)
    assert row_sums(shift(x)) == row_sums(x)


def test_column_matrix_and_distinct():
    h = Multihypergraph(3, 2, (((0, 1), 2), ((1, 2), 1)))
    x = column_matrix(h)
    assert x == ((1, 1, 0), (1, 1, 1), (0, 0, 1))
    check_column_matrix(x, 2)
    assert not distinct_columns(x)
    assert distinct_columns(((1, 0), (0, 1)))
    with pytest.raises(DomainError):
        check_column_matrix(((1, 1), (1, 0)), 2)


def test_cost_matrix_example():
    c = cost_matrix(ObjectiveSpec.identical([0, 1, 4, 9]), 3, n=2)
    assert c == ((1, 3, 5), (1, 3, 5))
    assert len(cost_matrix(ObjectiveSpec.identical([0, 1]), 1)) == 1


def test_shifted_value_example():
    f = ObjectiveSpec.identical([0, 1, 4, 9])
    x = ((1, 1, 0), (1, 1, 1), (0, 0, 1))
    c = cost_matrix(f, 3, n=3)
    assert shifted_value(c, x) == evaluate(f, (2, 3, 1)) == 14


def test_shifted_value_shape_mismatch():
    c = cost_matrix(ObjectiveSpec.identical([0, 1, 4]), 2, n=2)
    with pytest.raises(DimensionError):
        shifted_value(c, ((1,), (1,)))


def test_identity_with_rational_per_vertex():
    rng = random.Random(8)
    for _ in range(100):
        n, m = rng.randint(1, 5), rng.randint(1, 4)
        k = rng.randint(1, n)
        f = ObjectiveSpec.per_vertex(
            [[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(m + 1)] for _ in range(n)])
        cols = [rng.sample(range(n), k) for _ in range(m)]
        x = column_matrix(Multihypergraph.from_columns(n, k, cols))
        base = sum(f.value(i, 0) for i in range(n))
        assert shifted_value(cost_matrix(f, m), x) == evaluate(f, row_sums(x)) - base
