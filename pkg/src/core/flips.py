"""
Legality and application of the four bistellar moves on closed 3-pseudomanifolds.
"""

from itertools import combinations
from typing import Iterable, List, Optional, Sequence

from .exceptions import IllegalMove, NotInvertiblePair, VertexNotPresent
from .triangulation import Triangulation, _key
from ..models.flip_models import KIND_ORDER, FlipKind, FlipMove


# ---------------------------------------------------------------------- #
# Local structure
# ---------------------------------------------------------------------- #


def apexes(triangulation: Triangulation, triangle: Iterable[int]) -> tuple:
    """The two vertices opposite a triangle in its two facets"""
    tri = _key(triangle)
    star = triangulation.star_of_triangle(tri)
    return tuple(sorted(next(v for v in facet if v not in tri) for facet in star))


def _edge_ring(triangulation: Triangulation, edge: Iterable[int]) -> Optional[tuple]:
    """Opposite triangle {x,y,z} when the edge star is a bipyramid of 3 facets"""
    e = _key(edge)
    star = triangulation.star_of_edge(e)
    if star.valence != 3:
        return None
    pairs = [tuple(v for v in facet if v not in e) for facet in star.incident]
    ring = sorted({v for pair in pairs for v in pair})
    if len(ring) != 3 or sorted(pairs) != list(combinations(ring, 2)):
        return None
    return tuple(ring)


def _vertex_link_corners(triangulation: Triangulation, v: int) -> Optional[tuple]:
    """The four neighbours of v when link(v) is the boundary of a tetrahedron"""
    star = triangulation.star_of_vertex(v)
    if len(star) != 4:
        return None
    corners = sorted({u for facet in star for u in facet if u != v})
    if len(corners) != 4:
        return None
    link = sorted(tuple(u for u in facet if u != v) for facet in star)
    if link != list(combinations(corners, 3)):
        return None
    return tuple(corners)


# ---------------------------------------------------------------------- #
# Legality predicates
# ---------------------------------------------------------------------- #


def legal_14(triangulation: Triangulation, facet: Iterable[int], new_vertex: int) -> bool:
    return triangulation.has_facet(facet) and not triangulation.has_vertex(new_vertex)


def legal_23(triangulation: Triangulation, triangle: Iterable[int]) -> bool:
    """Apex edge of the two facets on the triangle is absent"""
    d, e = apexes(triangulation, triangle)
    return not triangulation.has_edge((d, e))


def legal_32(triangulation: Triangulation, edge: Iterable[int]) -> bool:
    """Valence 3, bipyramid star, and the opposite triangle absent"""
    ring = _edge_ring(triangulation, edge)
    return ring is not None and not triangulation.has_triangle(ring)


def legal_41(triangulation: Triangulation, v: int) -> bool:
    """link(v) is the boundary of a tetrahedron whose facet is absent"""
    corners = _vertex_link_corners(triangulation, v)
    return corners is not None and not triangulation.has_facet(corners)


def _failed_condition(triangulation: Triangulation, move: FlipMove) -> Optional[str]:
    site = move.site
    if move.kind is FlipKind.ONE_FOUR:
        if not triangulation.has_facet(site):
            return "site is not a facet"
        if triangulation.has_vertex(move.new_vertex):
            return "new vertex label already in use"
        return None
    if move.kind is FlipKind.TWO_THREE:
        if not triangulation.has_triangle(site):
            return "site is not a triangle"
        if not legal_23(triangulation, site):
            return "apex edge already present"
        return None
    if move.kind is FlipKind.THREE_TWO:
        if not triangulation.has_edge(site):
            return "site is not an edge"
        if triangulation.edge_valence(site) != 3:
            return "edge valence is not 3"
        ring = _edge_ring(triangulation, site)
        if ring is None:
            return "edge star is not a bipyramid"
        if triangulation.has_triangle(ring):
            return "opposite triangle already present"
        return None
    v = site[0]
    if not triangulation.has_vertex(v):
        return "site is not a vertex"
    corners = _vertex_link_corners(triangulation, v)
    if corners is None:
        return "vertex link is not the boundary of a tetrahedron"
    if triangulation.has_facet(corners):
        return "replacement facet already present"
    return None


# ---------------------------------------------------------------------- #
# Application
# ---------------------------------------------------------------------- #


def apply(triangulation: Triangulation, move: FlipMove) -> Triangulation:
    """Apply a legal move and return the new triangulation"""
    failure = _failed_condition(triangulation, move)
    if failure is not None:
        raise IllegalMove(failure, move)

    site = move.site
    removed: Sequence[tuple]
    added: List[tuple]
    if move.kind is FlipKind.ONE_FOUR:
        removed = [site]
        added = [tuple(sorted(tri + (move.new_vertex,))) for tri in combinations(site, 3)]
    elif move.kind is FlipKind.TWO_THREE:
        removed = triangulation.star_of_triangle(site)
        d, e = apexes(triangulation, site)
        added = [tuple(sorted(pair + (d, e))) for pair in combinations(site, 2)]
    elif move.kind is FlipKind.THREE_TWO:
        removed = triangulation.star_of_edge(site).incident
        ring = _edge_ring(triangulation, site)
        added = [tuple(sorted(ring + (v,))) for v in site]
    else:
        v = site[0]
        removed = triangulation.star_of_vertex(v)
        added = [_vertex_link_corners(triangulation, v)]

    doomed = set(removed)
    facets = [f for f in triangulation.facets if f not in doomed] + added
    return Triangulation(facets)


def replay(triangulation: Triangulation, moves: Iterable[FlipMove]) -> Triangulation:
    current = triangulation
    for move in moves:
        current = apply(current, move)
    return current


# ---------------------------------------------------------------------- #
# Enumeration
# ---------------------------------------------------------------------- #


def enumerate_moves(
    triangulation: Triangulation, kinds: Optional[Iterable[FlipKind]] = None
) -> List[FlipMove]:
    """All legal moves of the requested kinds, ordered by kind then site"""
    wanted = set(KIND_ORDER if kinds is None else kinds)
    moves: List[FlipMove] = []

    if FlipKind.ONE_FOUR in wanted:
        fresh = triangulation.max_label + 1
        moves.extend(FlipMove.one_four(facet, fresh) for facet in triangulation.facets)

    if FlipKind.TWO_THREE in wanted:
        for triangle in triangulation.triangles:
            if legal_23(triangulation, triangle):
                moves.append(FlipMove.two_three(triangle))

    if FlipKind.THREE_TWO in wanted:
        for edge, valence in sorted(triangulation.edge_valences().items()):
            if valence == 3 and legal_32(triangulation, edge):
                moves.append(FlipMove.three_two(edge))

    if FlipKind.FOUR_ONE in wanted:
        for v in triangulation.vertices:
            if legal_41(triangulation, v):
                moves.append(FlipMove.four_one(v))

    return moves


def removable_vertices(triangulation: Triangulation) -> List[int]:
    return [v for v in triangulation.vertices if legal_41(triangulation, v)]


# ---------------------------------------------------------------------- #
# Inverses
# ---------------------------------------------------------------------- #


def inverse_move(triangulation_before: Triangulation, move: FlipMove) -> FlipMove:
    """Inverse of a move, read off the triangulation it is applied to"""
    if move.kind is FlipKind.ONE_FOUR:
        return FlipMove.four_one(move.new_vertex)
    if move.kind is FlipKind.TWO_THREE:
        return FlipMove.three_two(apexes(triangulation_before, move.site))
    if move.kind is FlipKind.THREE_TWO:
        ring = _edge_ring(triangulation_before, move.site)
        if ring is None:
            raise NotInvertiblePair(f"{move} has no bipyramid star")
        return FlipMove.two_three(ring)
    v = move.site[0]
    corners = _vertex_link_corners(triangulation_before, v)
    if corners is None:
        raise NotInvertiblePair(f"{move} does not remove a degree-4 vertex")
    return FlipMove.one_four(corners, v)


def inverse(
    move: FlipMove, triangulation_before: Triangulation, triangulation_after: Triangulation
) -> FlipMove:
    """The move taking `triangulation_after` back to `triangulation_before`"""
    try:
        if apply(triangulation_before, move) != triangulation_after:
            raise NotInvertiblePair(f"{move} does not map the given pair")
        undo = inverse_move(triangulation_before, move)
    except (IllegalMove, VertexNotPresent) as e:
        raise NotInvertiblePair(str(e)) from e
    return undo
