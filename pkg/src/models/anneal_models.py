from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core.triangulation import Triangulation
from .flip_models import FlipKind, FlipMove
from .search_models import FlipPath


class ObjectiveKind(str, Enum):
    REDUCTION = "reduction"  # fewest vertices, then fewest tetrahedra
    STACKED_POTENTIAL = "stacked"  # longest greedy 4-1 chain, then fewest tetrahedra


class Objective(BaseModel):
    kind: ObjectiveKind = ObjectiveKind.REDUCTION
    weight: Optional[int] = None  # W; defaults to s_max + 1

    def resolved_weight(self, s_max: int) -> int:
        weight = s_max + 1 if self.weight is None else self.weight
        if weight < s_max + 1:
            raise ValueError(f"weight W={weight} must be at least s_max + 1 = {s_max + 1}")
        return weight


class AnnealConfig(BaseModel):
    """Cooling schedule and budget of one annealing chain"""

    # None: 3 * max(s_max, 1) for the stacked objective, 0.5 for reduction
    initial_temperature: Optional[float] = Field(default=None, gt=0)
    cooling_factor: float = Field(default=0.99, gt=0, lt=1)
    steps_per_temperature: int = Field(default=200, gt=0)
    max_flips: int = Field(default=100_000, gt=0)  # proposed moves
    rng_seed: int = Field(default=0, ge=0, lt=2**64)
    allowed_kinds: Optional[List[FlipKind]] = None  # None: objective default

    @field_validator("allowed_kinds")
    @classmethod
    def _non_empty(cls, value: Optional[List[FlipKind]]) -> Optional[List[FlipKind]]:
        if value is not None and not value:
            raise ValueError("allowed_kinds must not be empty")
        return value


class AnnealResult(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    final: Triangulation
    trace: FlipPath
    best_cost: int
    success: bool
    proposals: int = 0
    accepted: int = 0
    rng_seed: int = 0

    @property
    def moves(self) -> List[FlipMove]:
        return self.trace.moves

    def stats(self) -> dict:
        final = self.final
        return {
            "success": self.success,
            "best_cost": self.best_cost,
            "trace_length": len(self.trace.moves),
            "proposals": self.proposals,
            "accepted": self.accepted,
            "final_vertices": final.n,
            "final_facets": len(final.facets),
            "seed": self.rng_seed,
        }


class PreparedComplex(BaseModel):
    """Result of one vertex insertion followed by link-expanding 2-3 flips"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    triangulation: Triangulation
    new_vertex: int
    moves: List[FlipMove] = Field(default_factory=list)
    expanding_flips: int = 0
    link_size: int = 0
