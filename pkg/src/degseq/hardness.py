"""3-partition to 3-hypergraph degree sequence reduction, and its lift to k >= 4."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from degseq.core import DEFAULT_CAPS, Caps, DegreeSequence, Hypergraph, as_degrees, degree_sequence
from degseq.errors import DomainError, EnumerationCapExceeded, NotDivisible


@dataclass(frozen=True)
class ThreePartitionInstance:
    a: tuple[int, ...]
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if not self.a:
            raise DomainError("3-partition instance needs at least one item")
        if any(x < 0 for x in self.a) or self.b < 0:
            raise DomainError("3-partition entries must be nonnegative")


@dataclass(frozen=True)
class ReductionOutput:
    w: tuple[int, ...]
    s_plus: Hypergraph
    d: DegreeSequence
    degenerate: bool

    def to_json(self) -> dict:
        return {
            "w": list(self.w),
            "s_plus_size": self.s_plus.m,
            "s_plus": [[v + 1 for v in e] for e in self.s_plus.edges],
            "d": list(self.d),
            "degenerate": self.degenerate,
        }


def reduce_3partition(inst: ThreePartitionInstance) -> ReductionOutput:
    """Degree sequence that is 3-graphic iff ``inst`` has a 3-partition.

    With ``w_i = 3a_i - b`` a triple sums to ``b`` iff its ``w``-weight is
    zero.  The output is ``1 + (degrees of all positive-weight triples)``;
    if ``w`` does not sum to zero the instance is trivially a no and a unit
    vector is returned instead.
    """
    n = len(inst.a)
    if n < 3:
        raise DomainError("reduction needs at least 3 items")
    w = tuple(3 * x - inst.b for x in inst.a)
    plus = tuple(t for t in itertools.combinations(range(n), 3) if sum(w[i] for i in t) > 0)
    s_plus = Hypergraph(n, 3, plus)
    if sum(w) != 0:
        return ReductionOutput(w, s_plus, (1,) + (0,) * (n - 1), True)
    d = tuple(1 + x for x in degree_sequence(s_plus))
    return ReductionOutput(w, s_plus, d, False)


def lift_to_k(d: Sequence[int], k: int) -> DegreeSequence:
    """Append ``k - 3`` vertices of degree ``sum(d) / 3``."""
    d = as_degrees(d)
    if k < 3:
        raise DomainError("lift needs k >= 3")
    if sum(d) % 3:
        raise NotDivisible(f"degree sum {sum(d)} is not a multiple of 3")
    return d + (sum(d) // 3,) * (k - 3)


def solve_3partition_bruteforce(
    inst: ThreePartitionInstance, caps: Caps = DEFAULT_CAPS
) -> Hypergraph | None:
    """Exact cover of the items by triples summing to ``b``, or ``None``."""
    a, b = inst.a, inst.b
    n = len(a)
    if n > caps.max_partition_n:
        raise EnumerationCapExceeded(f"n={n} exceeds {caps.max_partition_n}")
    if n % 3:
        return None
    used = [False] * n
    triples = []

    def search():
        i = next((v for v in range(n) if not used[v]), None)
        if i is None:
            return True
        used[i] = True
        rest = [v for v in range(i + 1, n) if not used[v]]
        for j, l in itertools.combinations(rest, 2):
            if a[i] + a[j] + a[l] == b:
                used[j] = used[l] = True
                triples.append((i, j, l))
                if search():
                    return True
                triples.pop()
                used[j] = used[l] = False
        used[i] = False
        return False

    if not search():
        return None
    return Hypergraph(n, 3, tuple(triples))


def generate_3partition_instance(
    rng: random.Random,
    triples: int = 2,
    max_a: int = 6,
    max_b: int = 12,
    yes: bool = True,
    strict: bool = False,
) -> ThreePartitionInstance:
    """Random instance on ``3 * triples`` items.

    A yes-candidate is cut from random triples with a common sum.  A
    no-candidate draws items independently and repairs one item so the total
    is ``triples * b``.  Labels are not guaranteed; ask the solver.  With
    ``strict`` every item lies strictly between ``b/4`` and ``b/2``.
    """
    size = 3 * triples
    for _ in range(10_000):
        if yes:
            b = rng.randint(0, max_b)
            a = []
            for _ in range(triples):
                x = rng.randint(0, min(max_a, b))
                y = rng.randint(0, min(max_a, b - x))
                a.extend((x, y, b - x - y))
            rng.shuffle(a)
        else:
            a = [rng.randint(0, max_a) for _ in range(size)]
            b = min(max_b, round(sum(a) / triples))
            a[-1] += triples * b - sum(a)
        if not all(0 <= x <= max_a for x in a):
            continue
        if strict and not all(4 * x > b and 2 * x < b for x in a):
            continue
        return ThreePartitionInstance(tuple(a), b)
    raise DomainError("could not generate an instance with these bounds")
