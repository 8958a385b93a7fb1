"""
Simulated annealing over bistellar flips.

Two objectives are supported: the classic reduction objective (fewest
vertices, then fewest tetrahedra) used to certify spheres by reaching the
boundary of the 4-simplex, and the stacked-potential objective that keeps the
vertex count fixed and drives a triangulation towards a stacked sphere.
"""

import math
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from ..core import flips
from ..core.canon import canonical_form
from ..core.exceptions import PreparationStalled
from ..core.triangulation import Triangulation
from ..models.anneal_models import (
    AnnealConfig,
    AnnealResult,
    Objective,
    ObjectiveKind,
    PreparedComplex,
)
from ..models.flip_models import KIND_ORDER, VERTEX_PRESERVING, FlipKind, FlipMove
from ..models.search_models import FlipPath

REDUCTION_TEMPERATURE = 0.5


# ---------------------------------------------------------------------- #
# Stacked potential and costs
# ---------------------------------------------------------------------- #


def stacked_potential(triangulation: Triangulation) -> int:
    """Length of the greedy 4-1 chain removing the lowest removable label each time"""
    count = 0
    current = triangulation
    while True:
        removable = next((v for v in current.vertices if flips.legal_41(current, v)), None)
        if removable is None:
            return count
        current = flips.apply(current, FlipMove.four_one(removable))
        count += 1


def stacked_potential_exhaustive(triangulation: Triangulation, max_chain: int = 8) -> int:
    """Longest 4-1 chain over all deletion orders"""
    if triangulation.n - 5 > max_chain:
        raise ValueError(
            f"exhaustive stacked potential is limited to n - 5 <= {max_chain}, "
            f"got n = {triangulation.n}"
        )
    memo: Dict[tuple, int] = {}

    def longest(current: Triangulation) -> int:
        if current.facets in memo:
            return memo[current.facets]
        best = 0
        for v in flips.removable_vertices(current):
            best = max(best, 1 + longest(flips.apply(current, FlipMove.four_one(v))))
        memo[current.facets] = best
        return best

    return longest(triangulation)


def max_potential(n: int) -> int:
    """s_max = n - 5, the number of 4-1 flips back to the 4-simplex"""
    return max(n - 5, 0)


def stacked_cost(
    triangulation: Triangulation, n: Optional[int] = None, weight: Optional[int] = None
) -> int:
    """(s_max - s(T)) * W + m(T)"""
    n = triangulation.n if n is None else n
    s_max = max_potential(n)
    weight = Objective(kind=ObjectiveKind.STACKED_POTENTIAL, weight=weight).resolved_weight(s_max)
    return (s_max - stacked_potential(triangulation)) * weight + len(triangulation.facets)


def reduction_cost(triangulation: Triangulation, scale: int) -> int:
    """Vertices first, then tetrahedra, packed as V * C + T"""
    return triangulation.n * scale + len(triangulation.facets)


def is_simplex_boundary(triangulation: Triangulation) -> bool:
    return triangulation.n == 5 and len(triangulation.facets) == 5


# ---------------------------------------------------------------------- #
# Preparation of unflippable complexes
# ---------------------------------------------------------------------- #


def prepare_unflippable(triangulation: Triangulation) -> PreparedComplex:
    """Insert a vertex into the first facet, then grow its link by 2-3 flips"""
    originals = set(triangulation.vertices)
    new_vertex = triangulation.max_label + 1
    insertion = FlipMove.one_four(triangulation.facets[0], new_vertex)
    current = flips.apply(triangulation, insertion)
    moves = [insertion]
    expanding = 0

    while True:
        link_vertices = set(current.neighbors(new_vertex))
        if originals <= link_vertices:
            break
        move = None
        for triangle in current.link_of_vertex(new_vertex).link:
            d, e = flips.apexes(current, triangle)
            other = e if d == new_vertex else d
            if other not in link_vertices:
                move = FlipMove.two_three(triangle)
                break
        if move is None:
            raise PreparationStalled(len(link_vertices), len(originals))
        current = flips.apply(current, move)
        moves.append(move)
        expanding += 1
        logger.debug(f"Link of {new_vertex} grew to {len(link_vertices) + 1} vertices")

    return PreparedComplex(
        triangulation=current,
        new_vertex=new_vertex,
        moves=moves,
        expanding_flips=expanding,
        link_size=len(current.neighbors(new_vertex)),
    )


# ---------------------------------------------------------------------- #
# Annealing engine
# ---------------------------------------------------------------------- #


class FlipAnnealer:
    """Metropolis annealing chain with geometric cooling"""

    def __init__(self, objective: Objective, config: AnnealConfig):
        self.objective = objective
        self.config = config

    def _setup(
        self, triangulation: Triangulation
    ) -> Tuple[List[FlipKind], Callable[[Triangulation], Tuple[int, bool]], float]:
        s_max = max_potential(triangulation.n)

        if self.objective.kind is ObjectiveKind.STACKED_POTENTIAL:
            weight = self.objective.resolved_weight(s_max)
            default_kinds = sorted(VERTEX_PRESERVING, key=lambda k: k.order)
            default_temperature = 3.0 * max(s_max, 1)

            def evaluate(t: Triangulation) -> Tuple[int, bool]:
                s = stacked_potential(t)
                return (s_max - s) * weight + len(t.facets), s == s_max

        else:
            scale = 4 * self.config.max_flips + len(triangulation.facets)
            default_kinds = list(KIND_ORDER)
            # cost steps are single tetrahedra
            default_temperature = REDUCTION_TEMPERATURE

            def evaluate(t: Triangulation) -> Tuple[int, bool]:
                return reduction_cost(t, scale), is_simplex_boundary(t)

        kinds = list(self.config.allowed_kinds or default_kinds)
        temperature = self.config.initial_temperature or default_temperature
        return kinds, evaluate, temperature

    def run(self, triangulation: Triangulation) -> AnnealResult:
        config = self.config
        kinds, evaluate, temperature = self._setup(triangulation)
        rng = np.random.default_rng(config.rng_seed)

        current = triangulation
        cost, done = evaluate(current)
        best, best_cost, best_done, best_length = current, cost, done, 0
        trace: List[FlipMove] = []
        proposals = accepted = 0
        candidates: Optional[List[FlipMove]] = None
        stuck = False

        while not done and proposals < config.max_flips and not stuck:
            for _ in range(config.steps_per_temperature):
                if done or proposals >= config.max_flips:
                    break
                if candidates is None:
                    candidates = flips.enumerate_moves(current, kinds)
                if not candidates:
                    stuck = True
                    break
                move = candidates[int(rng.integers(len(candidates)))]
                proposals += 1
                proposal = flips.apply(current, move)
                proposal_cost, proposal_done = evaluate(proposal)
                delta = proposal_cost - cost
                if delta <= 0 or rng.random() < math.exp(-delta / max(temperature, 1e-12)):
                    current, cost, done = proposal, proposal_cost, proposal_done
                    trace.append(move)
                    accepted += 1
                    candidates = None
                    if done or (not best_done and cost < best_cost):
                        best, best_cost, best_done = current, cost, done
                        best_length = len(trace)
            temperature *= config.cooling_factor
            logger.debug(
                f"Anneal epoch: T={temperature:.4f} cost={cost} best={best_cost} "
                f"proposals={proposals}"
            )

        if stuck:
            logger.info(f"Annealing stopped: no legal {[k.value for k in kinds]} move")
        elif not best_done:
            logger.info(f"Annealing budget of {config.max_flips} proposals exhausted")

        path = FlipPath(
            start=canonical_form(triangulation),
            end=canonical_form(best),
            moves=trace[:best_length],
        )
        return AnnealResult(
            final=best,
            trace=path,
            best_cost=best_cost,
            success=best_done,
            proposals=proposals,
            accepted=accepted,
            rng_seed=config.rng_seed,
        )


def run(triangulation: Triangulation, objective: Objective, config: AnnealConfig) -> AnnealResult:
    return FlipAnnealer(objective, config).run(triangulation)


def run_with_restarts(
    triangulation: Triangulation,
    objective: Objective,
    config: AnnealConfig,
    attempts: int = 3,
) -> AnnealResult:
    """Rerun a failed chain with seeds rng_seed + 1, rng_seed + 2, ..."""
    result = None
    for attempt in range(max(attempts, 1)):
        seeded = config.model_copy(update={"rng_seed": config.rng_seed + attempt})
        result = run(triangulation, objective, seeded)
        if result.success:
            return result
        logger.info(f"Attempt {attempt + 1} with seed {seeded.rng_seed} failed")
    return result


def reduce_to_simplex(triangulation: Triangulation, config: AnnealConfig) -> AnnealResult:
    """Sphere certificate: anneal with the reduction objective to the 4-simplex boundary"""
    start_form = canonical_form(triangulation)
    if is_simplex_boundary(triangulation):
        return AnnealResult(
            final=triangulation,
            trace=FlipPath(start=start_form, end=start_form, moves=[]),
            best_cost=len(triangulation.facets),
            success=True,
            rng_seed=config.rng_seed,
        )

    prefix: List[FlipMove] = []
    start = triangulation
    if not flips.enumerate_moves(triangulation, VERTEX_PRESERVING):
        try:
            prepared = prepare_unflippable(triangulation)
            prefix, start = prepared.moves, prepared.triangulation
            logger.info(f"Prepared unflippable input with {len(prefix)} moves")
        except PreparationStalled as e:
            logger.warning(f"Preparation stalled ({e}); annealing the input directly")

    result = run(start, Objective(kind=ObjectiveKind.REDUCTION), config)
    result.trace = FlipPath(
        start=start_form, end=result.trace.end, moves=prefix + result.trace.moves
    )
    return result
