# tests/conftest.py
import sys
from pathlib import Path

import pytest

# Add root directory to sys.path
sys.path.append(str(Path(__file__).parent.parent))

from src.core.generators import boundary_simplex, cyclic_sphere
from src.core.triangulation import Triangulation

STACKED_6_FACETS = [
    (1, 2, 3, 5),
    (1, 2, 4, 5),
    (1, 3, 4, 5),
    (2, 3, 4, 5),
    (1, 2, 3, 6),
    (1, 2, 4, 6),
    (1, 3, 4, 6),
    (2, 3, 4, 6),
]

# six-vertex real projective plane
RP2_FACETS = [
    (1, 2, 3),
    (1, 3, 4),
    (1, 4, 5),
    (1, 5, 6),
    (1, 2, 6),
    (2, 3, 5),
    (2, 4, 5),
    (2, 4, 6),
    (3, 4, 6),
    (3, 5, 6),
]


@pytest.fixture
def simplex() -> Triangulation:
    return boundary_simplex()


@pytest.fixture
def stacked6() -> Triangulation:
    return Triangulation(STACKED_6_FACETS)


@pytest.fixture
def cyclic6() -> Triangulation:
    return cyclic_sphere(6)


@pytest.fixture
def cyclic7() -> Triangulation:
    return cyclic_sphere(7)
