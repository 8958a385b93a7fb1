from typing import Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

from .flip_models import FlipKind, FlipMove


class CanonicalForm(BaseModel):
    """Relabeling-invariant key of an isomorphism class"""

    model_config = ConfigDict(frozen=True)

    facets: Tuple[Tuple[int, int, int, int], ...]
    digest: int
    automorphisms: int = 1  # byproduct of the labeling search

    @property
    def n(self) -> int:
        return max(facet[3] for facet in self.facets)

    @property
    def hex_digest(self) -> str:
        return f"{self.digest:016x}"

    def to_triangulation(self):
        from ..core.triangulation import Triangulation

        return Triangulation(self.facets, check=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.digest == other.digest and self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.digest)

    def __lt__(self, other: "CanonicalForm") -> bool:
        return (len(self.facets), self.facets) < (len(other.facets), other.facets)

    def __le__(self, other: "CanonicalForm") -> bool:
        return self == other or self < other


class FlipPath(BaseModel):
    """Moves applied to a concrete representative of `start`, ending in the class `end`"""

    start: CanonicalForm
    end: CanonicalForm
    moves: List[FlipMove] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.moves)

    def kind_counts(self) -> Dict[str, int]:
        counts = {kind.value: 0 for kind in FlipKind}
        for move in self.moves:
            counts[move.kind.value] += 1
        return counts


class ComponentReport(BaseModel):
    """Result of a breadth-first exploration of a flip-graph component"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    class_count: int = 0
    seed_classes: List[CanonicalForm] = Field(default_factory=list)
    frontier_exhausted: bool = False
    max_depth: int = 0
    classes: List[CanonicalForm] = Field(default_factory=list)  # visit order
    unflippable_classes: List[CanonicalForm] = Field(default_factory=list)
    flip_edges: int = 0
    kinds: List[FlipKind] = Field(default_factory=list)
    graph: Optional[nx.Graph] = Field(default=None, exclude=True)  # class graph, on request

    @property
    def seed_count(self) -> int:
        return len(self.seed_classes)

    def stats(self) -> Dict[str, object]:
        return {
            "class_count": self.class_count,
            "seed_count": self.seed_count,
            "unflippable_count": len(self.unflippable_classes),
            "flip_edges": self.flip_edges,
            "max_depth": self.max_depth,
            "exhausted": self.frontier_exhausted,
        }


class InsertionReport(BaseModel):
    """Closure certificates for every 1-4 insertion class of a triangulation"""

    source: CanonicalForm
    tested: int = 0
    certified: int = 0
    uncertified: List[CanonicalForm] = Field(default_factory=list)
    path_lengths: List[int] = Field(default_factory=list)

    @property
    def all_certified(self) -> bool:
        return self.tested == self.certified

    def stats(self) -> Dict[str, object]:
        return {
            "insertion_classes": self.tested,
            "certified": self.certified,
            "uncertified": len(self.uncertified),
            "max_path_length": max(self.path_lengths) if self.path_lengths else 0,
        }
