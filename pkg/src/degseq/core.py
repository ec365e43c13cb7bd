"""Domain types shared by every solver.

Vertices are 0-indexed inside the library and 1-indexed in every external
format (JSON, CLI flags).  Objective values are exact ``Fraction``s.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from degseq.errors import DimensionError, DomainError

Rational = Fraction
RationalLike = Union[int, str, Fraction]
DegreeSequence = tuple[int, ...]
Edge = tuple[int, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: RationalLike) -> Fraction:
    """Parse ``"-3/2"``, ``"7"`` or an int/Fraction into an exact Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise DomainError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise DomainError(f"not a rational: {text!r}")
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise DomainError(f"not a rational: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise DomainError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_degrees(d: Iterable[int]) -> DegreeSequence:
    """Validate and freeze a degree vector."""
    out = tuple(int(x) for x in d)
    if any(x < 0 for x in out):
        raise DomainError(f"degree sequence has a negative entry: {out}")
    return out


def canonicalize(d: Sequence[int]) -> tuple[DegreeSequence, tuple[int, ...]]:
    """Sort ``d`` into nonincreasing order.

    Returns ``(sorted_d, perm)`` where ``sorted_d[t] == d[perm[t]]``.  The sort
    is stable, so equal degrees keep their input order.
    """
    d = as_degrees(d)
    perm = tuple(sorted(range(len(d)), key=lambda i: -d[i]))
    return tuple(d[i] for i in perm), perm


def uncanonicalize(sorted_d: Sequence[int], perm: Sequence[int]) -> DegreeSequence:
    """Inverse of :func:`canonicalize`."""
    out = [0] * len(perm)
    for t, i in enumerate(perm):
        out[i] = sorted_d[t]
    return tuple(out)


def _check_edge(edge: Iterable[int], n: int, k: int) -> Edge:
    e = tuple(sorted(int(v) for v in edge))
    if len(e) != k or len(set(e)) != k:
        raise DomainError(f"edge {e} does not have {k} distinct vertices")
    if e and (e[0] < 0 or e[-1] >= n):
        raise DomainError(f"edge {e} has a vertex outside [0, {n})")
    return e


@dataclass(frozen=True)
class Hypergraph:
    """A simple k-uniform hypergraph; edges are sorted tuples of vertices."""

    n: int
    k: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        edges = sorted({_check_edge(e, self.n, self.k) for e in self.edges})
        if len(edges) != len(self.edges):
            raise DomainError("hypergraph has duplicate edges")
        object.__setattr__(self, "edges", tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def to_json(self) -> dict:
        return {
            "type": "hypergraph",
            "n": self.n,
            "k": self.k,
            "edges": [[v + 1 for v in e] for e in self.edges],
        }


@dataclass(frozen=True)
class Multihypergraph:
    """A k-uniform multihypergraph stored as ``(edge, multiplicity)`` pairs."""

    n: int
    k: int
    edges: tuple[tuple[Edge, int], ...] = ()

    def __post_init__(self):
        merged: dict[Edge, int] = {}
        for e, mult in self.edges:
            e = _check_edge(e, self.n, self.k)
            if mult < 1:
                raise DomainError(f"multiplicity {mult} of edge {e} is not positive")
            if e in merged:
                raise DomainError(f"edge {e} listed twice")
            merged[e] = int(mult)
        object.__setattr__(self, "edges", tuple(sorted(merged.items())))

    @classmethod
    def from_columns(cls, n: int, k: int, columns: Iterable[Iterable[int]]):
        counts = Counter(tuple(sorted(c)) for c in columns)
        return cls(n, k, tuple(counts.items()))

    @property
    def m(self) -> int:
        return sum(mult for _, mult in self.edges)

    def columns(self) -> list[Edge]:
        return [e for e, mult in self.edges for _ in range(mult)]

    def to_json(self) -> dict:
        return {
            "type": "multihypergraph",
            "n": self.n,
            "k": self.k,
            "edges": [
                {"edge": [v + 1 for v in e], "multiplicity": mult}
                for e, mult in self.edges
            ],
        }


def degree_sequence(h: Hypergraph | Multihypergraph) -> DegreeSequence:
    d = [0] * h.n
    if isinstance(h, Multihypergraph):
        for e, mult in h.edges:
            for v in e:
                d[v] += mult
    else:
        for e in h.edges:
            for v in e:
                d[v] += 1
    return tuple(d)


@dataclass(frozen=True)
class ObjectiveSpec:
    """Tabulated univariate functions ``f_i : {0..m_max} -> Q``.

    ``kind`` is ``"identical"`` (one shared row) or ``"per-vertex"`` (one
    row per vertex).
    """

    m_max: int
    kind: str
    tables: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    def __post_init__(self):
        if self.kind not in ("identical", "per-vertex"):
            raise DomainError(f"unknown objective kind {self.kind!r}")
        if self.m_max < 0:
            raise DomainError("m_max must be nonnegative")
        tables = tuple(tuple(parse_rational(v) for v in row) for row in self.tables)
        if self.kind == "identical" and len(tables) != 1:
            raise DomainError("identical objective needs exactly one row")
        for row in tables:
            if len(row) != self.m_max + 1:
                raise DomainError(
                    f"objective row has {len(row)} entries, expected {self.m_max + 1}"
                )
        object.__setattr__(self, "tables", tables)

    @classmethod
    def identical(cls, row: Sequence[RationalLike]) -> ObjectiveSpec:
        return cls(len(row) - 1, "identical", (tuple(row),))

    @classmethod
    def per_vertex(cls, rows: Sequence[Sequence[RationalLike]]) -> ObjectiveSpec:
        if not rows:
            raise DomainError("per-vertex objective needs at least one row")
        return cls(len(rows[0]) - 1, "per-vertex", tuple(tuple(r) for r in rows))

    @classmethod
    def from_function(
        cls, f: Callable[..., RationalLike], m_max: int, n: int | None = None
    ) -> ObjectiveSpec:
        """Tabulate ``f(t)`` (identical) or ``f(i, t)`` (per-vertex when ``n`` is given)."""
        if n is None:
            return cls.identical([Fraction(f(t)) for t in range(m_max + 1)])
        return cls.per_vertex(
            [[Fraction(f(i, t)) for t in range(m_max + 1)] for i in range(n)]
        )

    @property
    def rows(self) -> int:
        return len(self.tables)

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.tables[0] if self.kind == "identical" else self.tables[i]

    def value(self, i: int, t: int) -> Fraction:
        return self.row(i)[t]

    def check_vertices(self, n: int) -> None:
        if self.kind == "per-vertex" and self.rows != n:
            raise DomainError(f"objective has {self.rows} rows for {n} vertices")

    def check_domain(self, top: int) -> None:
        if self.m_max < top:
            raise DomainError(f"objective tabulated up to {self.m_max}, need {top}")

    def shifted(self, c: RationalLike) -> ObjectiveSpec:
        c = parse_rational(c)
        return ObjectiveSpec(
            self.m_max, self.kind, tuple(tuple(v + c for v in row) for row in self.tables)
        )

    def integer_rows(self, n: int) -> tuple[list[list[int]], int]:
        """Rows scaled to integers by the lcm of all denominators.

        The DPs run on these so that inner loops avoid Fraction arithmetic.
        Returns ``(rows, scale)`` with one row per vertex.
        """
        self.check_vertices(n)
        scale = 1
        for row in self.tables:
            for v in row:
                scale = math.lcm(scale, v.denominator)
        scaled = [[int(v * scale) for v in row] for row in self.tables]
        if self.kind == "identical":
            return [scaled[0]] * n, scale
        return scaled, scale

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "tables": [[format_rational(v) for v in row] for row in self.tables],
        }


def evaluate(f: ObjectiveSpec, d: Sequence[int]) -> Fraction:
    """Exact value of ``sum_i f_i(d_i)``."""
    d = as_degrees(d)
    f.check_vertices(len(d))
    total = Fraction(0)
    for i, di in enumerate(d):
        if di > f.m_max:
            raise DomainError(f"degree {di} exceeds objective domain {f.m_max}")
        total += f.value(i, di)
    return total


def is_convex(f: ObjectiveSpec) -> bool:
    for row in f.tables:
        for t in range(1, len(row) - 1):
            if row[t + 1] - row[t] < row[t] - row[t - 1]:
                return False
    return True


@dataclass(frozen=True)
class Caps:
    """Limits for exponential routines; raise instead of hanging."""

    max_edge_choices: int = 28
    max_enum: int = 2_000_000
    max_partition_n: int = 12
    max_dn2_n: int = 12


DEFAULT_CAPS = Caps()


def check_dims(rows: Sequence[Sequence], n: int, m: int) -> None:
    if len(rows) != n or any(len(r) != m for r in rows):
        raise DimensionError(f"expected a {n}x{m} matrix")
