"""Degree sequence optimization written as shifted combinatorial optimization.

A multihypergraph is an n x m 0/1 matrix whose columns each have k ones.
Its shift sorts every row in nonincreasing order.  With the cost matrix
``c[i][j] = f_i(j+1) - f_i(j)`` (0-indexed columns) the shifted value
telescopes to ``sum_i f_i(d_i) - sum_i f_i(0)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from degseq.core import Multihypergraph, ObjectiveSpec, check_dims
from degseq.errors import DimensionError, DomainError

Matrix = tuple[tuple[int, ...], ...]


def column_matrix(h: Multihypergraph) -> Matrix:
    cols = h.columns()
    return tuple(tuple(int(i in c) for c in cols) for i in range(h.n))


def check_column_matrix(x: Sequence[Sequence[int]], k: int) -> None:
    if not x:
        return
    m = len(x[0])
    check_dims(x, len(x), m)
    for j in range(m):
        col = [row[j] for row in x]
        if any(v not in (0, 1) for v in col) or sum(col) != k:
            raise DomainError(f"column {j} is not a 0/1 vector with {k} ones")


def shift(x: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(sorted(row, reverse=True)) for row in x)


def row_sums(x: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(sum(row) for row in x)


def distinct_columns(x: Sequence[Sequence[int]]) -> bool:
    """True when no column repeats, i.e. ``x`` is a simple hypergraph."""
    if not x:
        return True
    cols = list(zip(*x))
    return len(set(cols)) == len(cols)


def cost_matrix(f: ObjectiveSpec, m: int, n: int | None = None) -> tuple[tuple[Fraction, ...], ...]:
    if f.m_max < m:
        raise DomainError(f"objective tabulated up to {f.m_max}, need {m}")
    if n is None:
        n = f.rows
    f.check_vertices(n)
    return tuple(
        tuple(f.value(i, j) - f.value(i, j - 1) for j in range(1, m + 1)) for i in range(n)
    )


def shifted_value(c: Sequence[Sequence], x: Sequence[Sequence[int]]) -> Fraction:
    n = len(c)
    m = len(c[0]) if n else 0
    try:
        check_dims(x, n, m)
        check_dims(c, n, m)
    except DimensionError:
        raise DimensionError("cost and column matrices differ in shape") from None
    xs = shift(x)
    return sum((Fraction(cij) * xij for cr, xr in zip(c, xs) for cij, xij in zip(cr, xr)), Fraction(0))
