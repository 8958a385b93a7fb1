"""
Orderly enumeration of small triangulated 3-spheres.

Facet sets are grown from the facet 1234 by repeatedly closing the
lexicographically smallest triangle that lies in only one facet. A label that
has not been used yet is interchangeable with every other unused label, so
only the smallest unused one is tried. Closed results that are combinatorial
manifolds with the homology of S^3 are deduplicated by canonical form.

This is an independent oracle for flip-graph exploration and is only meant
for n <= 8.
"""

from collections import Counter
from itertools import combinations
from typing import List, Set

from loguru import logger

from .canon import canonical_form
from .homology import is_sphere_candidate
from .triangulation import Triangulation
from ..models.search_models import CanonicalForm


class SphereCensus:
    """Backtracking enumeration of closed 3-manifolds on n vertices"""

    def __init__(self, n: int):
        if n < 5:
            raise ValueError(f"a triangulated 3-sphere has at least 5 vertices, got {n}")
        self.n = n
        self.facets: List[tuple] = []
        self.facet_set: Set[tuple] = set()
        self.counts: Counter = Counter()
        self.classes: Set[CanonicalForm] = set()
        self.closed_complexes = 0

    def run(self) -> List[CanonicalForm]:
        self._add((1, 2, 3, 4))
        self._close(used_max=4)
        logger.info(
            f"Census n={self.n}: {self.closed_complexes} closed labeled complexes, "
            f"{len(self.classes)} sphere classes"
        )
        return sorted(self.classes)

    def _add(self, facet: tuple) -> None:
        self.facets.append(facet)
        self.facet_set.add(facet)
        for tri in combinations(facet, 3):
            self.counts[tri] += 1

    def _remove(self, facet: tuple) -> None:
        self.facets.pop()
        self.facet_set.discard(facet)
        for tri in combinations(facet, 3):
            self.counts[tri] -= 1

    def _close(self, used_max: int) -> None:
        open_triangles = [tri for tri, c in self.counts.items() if c == 1]
        if not open_triangles:
            if used_max == self.n:
                self._accept()
            return

        triangle = min(open_triangles)
        for w in range(1, min(used_max + 1, self.n) + 1):
            if w in triangle:
                continue
            facet = tuple(sorted(triangle + (w,)))
            if facet in self.facet_set:
                continue
            if any(self.counts[tri] >= 2 for tri in combinations(facet, 3)):
                continue
            self._add(facet)
            self._close(max(used_max, w))
            self._remove(facet)

    def _accept(self) -> None:
        self.closed_complexes += 1
        triangulation = Triangulation(self.facets, check=False)
        if triangulation.f_vector().euler_characteristic != 0:
            return
        if not triangulation.is_combinatorial_manifold():
            return
        if not is_sphere_candidate(triangulation):
            return
        self.classes.add(canonical_form(triangulation))


def enumerate_spheres(n: int) -> List[CanonicalForm]:
    """Isomorphism classes of triangulated 3-spheres on n vertices (n <= 8)"""
    return SphereCensus(n).run()
