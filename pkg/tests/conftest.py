import pytest

from wpsimplex import build_q, groebner_family

# Small sweep used by the unit tests; the acceptance suite runs the full
# 2 <= r1 <= 6, 1 <= x1 <= 5 grid.
SMALL_GRID = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (5, 2), (6, 1)]


@pytest.fixture(scope="session")
def family21():
    return groebner_family(build_q(2, 1))
