"""
Integer simplicial homology via Smith normal form of boundary matrices.

Simplices are oriented by ascending vertex order and the boundary of
[v0,...,vk] is sum_i (-1)^i [v0,...,^vi,...,vk].
"""

from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from loguru import logger

from .triangulation import Triangulation
from ..models.complex_models import HomologyProfile, IntegerMatrix


def faces_of(facets: Iterable[Sequence[int]], k: int) -> List[tuple]:
    """Sorted k-simplices (k+1 vertices) of a pure complex"""
    faces = set()
    for facet in facets:
        faces.update(combinations(sorted(facet), k + 1))
    return sorted(faces)


def _boundary(higher: List[tuple], lower: List[tuple]) -> IntegerMatrix:
    index = {face: i for i, face in enumerate(lower)}
    matrix = IntegerMatrix.zeros(len(lower), len(higher))
    for j, simplex in enumerate(higher):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            matrix.entries[index[face]][j] = (-1) ** i
    return matrix


def boundary_matrix(triangulation: Triangulation, k: int) -> IntegerMatrix:
    """Matrix of the boundary map from k-simplices to (k-1)-simplices, k in 1..3"""
    if k not in (1, 2, 3):
        raise ValueError(f"boundary dimension must be 1, 2 or 3, got {k}")
    facets = triangulation.facets
    return _boundary(faces_of(facets, k), faces_of(facets, k - 1))


def smith_normal_form(matrix: IntegerMatrix) -> List[int]:
    """Invariant factors d1 | d2 | ... followed by zeros, min(rows, cols) entries"""
    rows, cols = matrix.rows, matrix.cols
    a = [list(row) for row in matrix.entries]
    size = min(rows, cols)
    diagonal: List[int] = []

    t = 0
    while t < size:
        pivot = _smallest_entry(a, t, t, rows, cols)
        if pivot is None:
            break
        _move_to(a, pivot, t)

        while True:
            p = a[t][t]
            # clear column t below the pivot
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        row_t, row_i = a[t], a[i]
                        for j in range(t, cols):
                            if row_t[j]:
                                row_i[j] -= q * row_t[j]
            # clear row t right of the pivot
            row_t = a[t]
            for j in range(t + 1, cols):
                if row_t[j]:
                    q = row_t[j] // p
                    if q:
                        for i in range(t, rows):
                            if a[i][t]:
                                a[i][j] -= q * a[i][t]

            leftover = _smallest_cross_entry(a, t, rows, cols)
            if leftover is not None:
                _move_to(a, leftover, t)
                continue

            offender = _non_divisible_row(a, t, rows, cols, p)
            if offender is not None:
                row_t, row_i = a[t], a[offender]
                for j in range(t, cols):
                    row_t[j] += row_i[j]
                continue
            break

        diagonal.append(abs(a[t][t]))
        t += 1

    diagonal.extend([0] * (size - len(diagonal)))
    return diagonal


def _smallest_entry(a, top, left, rows, cols):
    best = None
    for i in range(top, rows):
        row = a[i]
        for j in range(left, cols):
            value = row[j]
            if value and (best is None or abs(value) < best[0]):
                best = (abs(value), i, j)
                if best[0] == 1:
                    return (i, j)
    return None if best is None else (best[1], best[2])


def _smallest_cross_entry(a, t, rows, cols):
    best = None
    for i in range(t + 1, rows):
        if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
            best = (abs(a[i][t]), i, t)
    for j in range(t + 1, cols):
        if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
            best = (abs(a[t][j]), t, j)
    return None if best is None else (best[1], best[2])


def _non_divisible_row(a, t, rows, cols, p):
    for i in range(t + 1, rows):
        row = a[i]
        for j in range(t + 1, cols):
            if row[j] % p:
                return i
    return None


def _move_to(a, position: Tuple[int, int], t: int) -> None:
    i, j = position
    if i != t:
        a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def simplicial_homology(facets: Iterable[Sequence[int]]) -> Tuple[List[int], List[List[int]]]:
    """Betti numbers and torsion of a pure simplicial complex given by its top simplices"""
    facets = [tuple(sorted(f)) for f in facets]
    top = max(len(f) for f in facets) - 1
    chains: Dict[int, List[tuple]] = {k: faces_of(facets, k) for k in range(top + 1)}

    ranks: Dict[int, int] = {0: 0, top + 1: 0}
    invariants: Dict[int, List[int]] = {top + 1: []}
    for k in range(1, top + 1):
        factors = smith_normal_form(_boundary(chains[k], chains[k - 1]))
        nonzero = [d for d in factors if d]
        ranks[k] = len(nonzero)
        invariants[k] = nonzero

    betti = [len(chains[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]
    torsion = [sorted(d for d in invariants[k + 1] if d > 1) for k in range(top + 1)]
    return betti, torsion


def homology_profile(triangulation: Triangulation) -> HomologyProfile:
    betti, torsion = simplicial_homology(triangulation.facets)
    profile = HomologyProfile(betti=betti, torsion=torsion)
    logger.debug(f"Homology of {triangulation!r}: {profile.to_line()}")
    return profile


def is_sphere_candidate(triangulation: Triangulation) -> bool:
    """Homology of S^3; necessary but not sufficient for being a sphere"""
    return homology_profile(triangulation).is_sphere_profile()
