"""
Immutable triangulated closed 3-pseudomanifolds given by their facets.

Facets are stored as ascending 4-tuples in lexicographic order. Triangle,
edge and vertex stars are indexed once at construction so that flip legality
queries are dictionary lookups.
"""

from collections import defaultdict
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from .exceptions import (
    BadFacetArity,
    DuplicateFacet,
    EdgeNotPresent,
    EmptyInput,
    NonPseudomanifold,
    NonZeroEulerCharacteristic,
    TriangleNotPresent,
    VertexNotPresent,
)
from ..models.complex_models import Edge, EdgeStar, Facet, FVector, Triangle, VertexLink


def _key(simplex: Iterable[int]) -> tuple:
    return tuple(sorted(simplex))


class Triangulation:
    """A triangulated closed 3-pseudomanifold (the central value type)"""

    __slots__ = (
        "facets",
        "vertices",
        "_facet_set",
        "_triangle_star",
        "_edge_star",
        "_vertex_star",
    )

    def __init__(self, facets: Iterable[Sequence[int]], check: bool = __debug__):
        self.facets: Tuple[Facet, ...] = tuple(sorted(_key(f) for f in facets))
        self._facet_set = frozenset(self.facets)

        triangle_star: Dict[Triangle, List[Facet]] = defaultdict(list)
        edge_star: Dict[Edge, List[Facet]] = defaultdict(list)
        vertex_star: Dict[int, List[Facet]] = defaultdict(list)
        for facet in self.facets:
            for triangle in combinations(facet, 3):
                triangle_star[triangle].append(facet)
            for edge in combinations(facet, 2):
                edge_star[edge].append(facet)
            for v in facet:
                vertex_star[v].append(facet)

        self._triangle_star = dict(triangle_star)
        self._edge_star = dict(edge_star)
        self._vertex_star = dict(vertex_star)
        self.vertices: Tuple[int, ...] = tuple(sorted(vertex_star))

        if check:
            self._check_invariants()

    # ------------------------------------------------------------------ #
    # Validation
    # ------------------------------------------------------------------ #

    def _check_invariants(self) -> None:
        if not self.facets:
            raise EmptyInput("triangulation has no facets")
        if len(self._facet_set) != len(self.facets):
            seen = set()
            for facet in self.facets:
                if facet in seen:
                    raise DuplicateFacet(f"facet {facet} occurs more than once")
                seen.add(facet)
        for facet in self.facets:
            if len(facet) != 4 or len(set(facet)) != 4 or facet[0] < 1:
                raise BadFacetArity(f"facet {facet} is not 4 distinct positive labels")
        for triangle, star in self._triangle_star.items():
            if len(star) != 2:
                raise NonPseudomanifold(
                    f"triangle {triangle} lies in {len(star)} facets, expected 2"
                )
        chi = self.f_vector().euler_characteristic
        if chi != 0:
            raise NonZeroEulerCharacteristic(f"V - E + F - T = {chi}")

    # ------------------------------------------------------------------ #
    # Basic structure
    # ------------------------------------------------------------------ #

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def max_label(self) -> int:
        return self.vertices[-1]

    @property
    def edges(self) -> List[Edge]:
        return sorted(self._edge_star)

    @property
    def triangles(self) -> List[Triangle]:
        return sorted(self._triangle_star)

    def f_vector(self) -> FVector:
        return FVector(
            v=len(self._vertex_star),
            e=len(self._edge_star),
            f=len(self._triangle_star),
            t=len(self.facets),
        )

    def has_vertex(self, v: int) -> bool:
        return v in self._vertex_star

    def has_edge(self, edge: Iterable[int]) -> bool:
        return _key(edge) in self._edge_star

    def has_triangle(self, triangle: Iterable[int]) -> bool:
        return _key(triangle) in self._triangle_star

    def has_facet(self, facet: Iterable[int]) -> bool:
        return _key(facet) in self._facet_set

    # ------------------------------------------------------------------ #
    # Stars, links, valences
    # ------------------------------------------------------------------ #

    def star_of_triangle(self, triangle: Iterable[int]) -> List[Facet]:
        key = _key(triangle)
        if key not in self._triangle_star:
            raise TriangleNotPresent(f"triangle {key} is not in the complex")
        return list(self._triangle_star[key])

    def star_of_edge(self, edge: Iterable[int]) -> EdgeStar:
        key = _key(edge)
        if key not in self._edge_star:
            raise EdgeNotPresent(f"edge {key} is not in the 1-skeleton")
        return EdgeStar(edge=key, incident=list(self._edge_star[key]))

    def star_of_vertex(self, v: int) -> List[Facet]:
        if v not in self._vertex_star:
            raise VertexNotPresent(f"vertex {v} is not in the complex")
        return list(self._vertex_star[v])

    def edge_valence(self, edge: Iterable[int]) -> int:
        key = _key(edge)
        if key not in self._edge_star:
            raise EdgeNotPresent(f"edge {key} is not in the 1-skeleton")
        return len(self._edge_star[key])

    def edge_valences(self) -> Dict[Edge, int]:
        return {edge: len(star) for edge, star in self._edge_star.items()}

    def vertex_degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def neighbors(self, v: int) -> List[int]:
        star = self.star_of_vertex(v)
        return sorted({u for facet in star for u in facet if u != v})

    def link_of_vertex(self, v: int) -> VertexLink:
        star = self.star_of_vertex(v)
        link = sorted(tuple(u for u in facet if u != v) for facet in star)
        return VertexLink(vertex=v, link=link)

    def is_neighborly(self) -> bool:
        n = self.n
        return len(self._edge_star) == n * (n - 1) // 2

    def is_combinatorial_manifold(self) -> bool:
        """Every vertex link is a 2-sphere"""
        return all(self.link_of_vertex(v).is_sphere() for v in self.vertices)

    # ------------------------------------------------------------------ #
    # Relabeling
    # ------------------------------------------------------------------ #

    def relabel(self, mapping: Mapping[int, int]) -> "Triangulation":
        return Triangulation(
            (tuple(mapping[v] for v in facet) for facet in self.facets), check=False
        )

    def normalized(self) -> "Triangulation":
        """Compact labels to 1..n keeping their relative order"""
        if self.vertices == tuple(range(1, self.n + 1)):
            return self
        mapping = {v: i + 1 for i, v in enumerate(self.vertices)}
        return self.relabel(mapping)

    # ------------------------------------------------------------------ #
    # Value semantics
    # ------------------------------------------------------------------ #

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Triangulation):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self) -> int:
        return hash(self.facets)

    def __len__(self) -> int:
        return len(self.facets)

    def __iter__(self):
        return iter(self.facets)

    def __reduce__(self):
        return (Triangulation, (self.facets, False))

    def __repr__(self) -> str:
        fv = self.f_vector()
        return f"Triangulation(n={fv.v}, f_vector={fv.as_tuple()})"


def from_facets(raw: Iterable[Sequence[int]], relabel: bool = False) -> Triangulation:
    """Validate raw facet tuples and build a Triangulation"""
    facets = [tuple(f) for f in raw]
    if not facets:
        raise EmptyInput("no facets given")

    for facet in facets:
        if len(facet) != 4:
            raise BadFacetArity(f"facet {facet} has {len(facet)} vertices, expected 4")
        if len(set(facet)) != 4:
            raise BadFacetArity(f"facet {facet} repeats a vertex")
        if any((not isinstance(v, int)) or isinstance(v, bool) or v < 1 for v in facet):
            raise BadFacetArity(f"facet {facet} has a label that is not a positive integer")

    triangulation = Triangulation(facets, check=True)
    logger.debug(f"Validated {triangulation!r}")
    return triangulation.normalized() if relabel else triangulation


def f_vector(triangulation: Triangulation) -> FVector:
    return triangulation.f_vector()


def edge_valence(triangulation: Triangulation, edge: Iterable[int]) -> int:
    return triangulation.edge_valence(edge)


def link_of_vertex(triangulation: Triangulation, v: int) -> VertexLink:
    return triangulation.link_of_vertex(v)


def is_neighborly(triangulation: Triangulation) -> bool:
    return triangulation.is_neighborly()


def check_invariants(triangulation: Triangulation) -> Optional[str]:
    """Return the name of the first violated invariant, or None"""
    try:
        triangulation._check_invariants()
    except (
        EmptyInput,
        DuplicateFacet,
        BadFacetArity,
        NonPseudomanifold,
        NonZeroEulerCharacteristic,
    ) as error:
        return error.name
    return None
