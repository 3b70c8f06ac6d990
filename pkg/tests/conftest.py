import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from liecasimir.lie_core import BasisChange  # noqa: E402
from liecasimir.linalg import matmul  # noqa: E402

ACCEPTANCE_LINES = []


def random_basis_change(n, rng, spread=3):
    """Invertible integer matrix as (unit lower) x (unit upper) x permutation."""
    lower = [[rng.randint(-spread, spread) if i > j else int(i == j) for j in range(n)] for i in range(n)]
    upper = [[rng.randint(-spread, spread) if i < j else int(i == j) for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    p = [[int(perm[j] == i) for j in range(n)] for i in range(n)]
    return BasisChange(matmul(matmul(lower, upper), p))


@st.composite
def basis_changes(draw, n):
    seed = draw(st.integers(0, 2**32 - 1))
    return random_basis_change(n, random.Random(seed))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
