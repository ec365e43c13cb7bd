import random
from fractions import Fraction

import pytest

from degseq.core import ObjectiveSpec

# criterion number -> (passed, description, detail); filled by test_acceptance
ACCEPTANCE = {}


def random_row(rng, m, lo=-6, hi=6):
    return [rng.randint(lo, hi) for _ in range(m + 1)]


def random_convex_row(rng, m, lo=-6, hi=6):
    steps = sorted(rng.randint(lo, hi) for _ in range(m))
    row = [rng.randint(-3, 3)]
    for s in steps:
        row.append(row[-1] + s)
    return row


def random_rational_row(rng, m):
    return [Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(m + 1)]


def random_identical(rng, m):
    return ObjectiveSpec.identical(random_row(rng, m))


def random_per_vertex(rng, n, m):
    return ObjectiveSpec.per_vertex([random_row(rng, m) for _ in range(n)])


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, desc, detail = ACCEPTANCE[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {desc} ({detail})")
