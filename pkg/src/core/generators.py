"""
Constructors for the triangulation families used as anchors and test corpora.
"""

from itertools import combinations
from typing import Iterable, List, Optional

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from . import flips
from .triangulation import Triangulation
from ..models.flip_models import FlipKind, FlipMove


class WalkResult(BaseModel):
    """Outcome of a seeded random flip walk"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    final: Triangulation
    moves: List[FlipMove] = Field(default_factory=list)
    steps_taken: int = 0
    stopped_early: bool = False


def boundary_simplex() -> Triangulation:
    """Boundary of the 4-simplex on 1..5"""
    return Triangulation(combinations(range(1, 6), 4))


def stacked_sphere(n: int, rng_seed: int = 0) -> Triangulation:
    """Boundary of the 4-simplex followed by n-5 seeded random 1-4 insertions"""
    if n < 5:
        raise ValueError(f"a stacked 3-sphere needs at least 5 vertices, got {n}")
    rng = np.random.default_rng(rng_seed)
    triangulation = boundary_simplex()
    for _ in range(n - 5):
        facet = triangulation.facets[int(rng.integers(len(triangulation.facets)))]
        move = FlipMove.one_four(facet, triangulation.max_label + 1)
        triangulation = flips.apply(triangulation, move)
    return triangulation


def _gale_evenness(subset: tuple, n: int) -> bool:
    members = set(subset)
    outside = [v for v in range(1, n + 1) if v not in members]
    for i, j in combinations(outside, 2):
        between = sum(1 for v in subset if i < v < j)
        if between % 2:
            return False
    return True


def cyclic_sphere(n: int) -> Triangulation:
    """Boundary of the cyclic polytope C(n,4) by Gale's evenness condition"""
    if n < 5:
        raise ValueError(f"C(n,4) needs at least 5 vertices, got {n}")
    if n > 64:
        raise ValueError("cyclic spheres are generated by direct check only up to n=64")
    facets = [s for s in combinations(range(1, n + 1), 4) if _gale_evenness(s, n)]
    return Triangulation(facets)


def random_walk(
    triangulation: Triangulation,
    kinds: Optional[Iterable[FlipKind]] = None,
    steps: int = 0,
    rng_seed: int = 0,
) -> WalkResult:
    """Apply `steps` uniformly chosen legal moves; stops early at a state with none"""
    kinds = list(kinds) if kinds is not None else [FlipKind.TWO_THREE, FlipKind.THREE_TWO]
    rng = np.random.default_rng(rng_seed)
    current = triangulation
    moves: List[FlipMove] = []

    for step in range(steps):
        candidates = flips.enumerate_moves(current, kinds)
        if not candidates:
            logger.debug(f"Random walk stuck after {step} steps at {current!r}")
            return WalkResult(final=current, moves=moves, steps_taken=step, stopped_early=True)
        move = candidates[int(rng.integers(len(candidates)))]
        current = flips.apply(current, move)
        moves.append(move)

    return WalkResult(final=current, moves=moves, steps_taken=steps, stopped_early=False)
