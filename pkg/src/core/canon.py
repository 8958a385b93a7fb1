"""
Canonical labeling of triangulations.

The canonical form is the lexicographically smallest sorted facet list over
all relabelings onto 1..n. It is found by a branch-and-bound search that
assigns labels in increasing order: at every step the next facet of the
sorted list is the one with the smallest lower bound (its labeled vertices
followed by the next free labels), and only ties are branched on.

No degree/valence partition refinement is run. Its place is taken by the
choice of start edge: the first facet is always 1234 and the facets
containing edge 12 form the first block, whose length is the valence of that
edge; a shorter block is lexicographically smaller, so labels 1 and 2 always
go to an edge of minimal valence. Every later step only inspects the star of
the smallest label that still has unemitted facets, since the minimal bound
always starts with that label.
"""

import hashlib
import struct
from itertools import permutations
from typing import Dict, List, Optional, Set, Tuple

from .triangulation import Triangulation
from ..models.search_models import CanonicalForm

Labeling = Dict[int, int]
FacetList = Tuple[Tuple[int, int, int, int], ...]
Facet = Tuple[int, int, int, int]


def facet_digest(facets: FacetList) -> int:
    """Stable 64-bit digest of a facet list"""
    payload = b"".join(struct.pack(">4H", *facet) for facet in facets)
    return int.from_bytes(hashlib.blake2b(payload, digest_size=8).digest(), "big")


def _relabeled(facets, labeling: Labeling) -> FacetList:
    return tuple(sorted(tuple(sorted(labeling[v] for v in facet)) for facet in facets))


class _LabelingSearch:
    """Branch-and-bound search for the lexicographically minimal relabeling"""

    def __init__(self, triangulation: Triangulation):
        self.triangulation = triangulation
        self.n = triangulation.n
        self.stars = {v: triangulation.star_of_vertex(v) for v in triangulation.vertices}
        self.best: Optional[List[tuple]] = None
        self.best_labeling: Optional[Labeling] = None
        self.version = 0  # bumped whenever `best` improves
        self.optimal_leaves = 0
        # search state, mutated in place and restored on backtrack
        self.labels: Labeling = {}
        self.order: List[int] = []
        self.emitted: List[tuple] = []
        self.remaining: Set[Facet] = set()

    def run(self) -> Tuple[FacetList, Labeling, int]:
        for start in self._start_orderings():
            self.labels = {v: i + 1 for i, v in enumerate(start)}
            self.order = list(start)
            self.emitted = [(1, 2, 3, 4)]
            self.remaining = set(self.triangulation.facets)
            self.remaining.discard(tuple(sorted(start)))
            self._extend(1, 0, self.version)
        return tuple(self.best), self.best_labeling, self.optimal_leaves

    def _start_orderings(self):
        valences = self.triangulation.edge_valences()
        lowest = min(valences.values())
        for (a, b), valence in sorted(valences.items()):
            if valence != lowest:
                continue
            for first, second in ((a, b), (b, a)):
                for facet in self.triangulation.star_of_edge((a, b)).incident:
                    c, d = (v for v in facet if v != a and v != b)
                    yield (first, second, c, d)
                    yield (first, second, d, c)

    def _compare_prefix(self) -> int:
        if self.best is None:
            return -1
        prefix = self.best[: len(self.emitted)]
        return -1 if self.emitted < prefix else (1 if self.emitted > prefix else 0)

    def _assign(self, facet: Facet, fresh: Tuple[int, ...], bound: tuple) -> None:
        for v in fresh:
            self.order.append(v)
            self.labels[v] = len(self.order)
        self.remaining.discard(facet)
        self.emitted.append(bound)

    def _unassign(self, facet: Facet, fresh: Tuple[int, ...]) -> None:
        self.emitted.pop()
        self.remaining.add(facet)
        for v in fresh:
            del self.labels[v]
            self.order.pop()

    def _candidates(self, low: int) -> Tuple[int, List[Facet]]:
        """Advance `low` to the smallest label with unemitted facets; return its open star"""
        remaining = self.remaining
        while low <= len(self.order):
            open_star = [f for f in self.stars[self.order[low - 1]] if f in remaining]
            if open_star:
                return low, open_star
            low += 1
        return low, list(remaining)

    def _extend(self, low: int, cmp: int, version: int) -> None:
        # cmp: -1 when the prefix already beats `best`, 0 while it ties
        trail: List[Tuple[Facet, Tuple[int, ...]]] = []
        labels = self.labels
        try:
            while True:
                if version != self.version:
                    cmp = self._compare_prefix()
                    version = self.version
                    if cmp > 0:
                        return

                k = len(self.order)
                if k == self.n:
                    self._finish()
                    return

                low, candidates = self._candidates(low)
                lowest = None
                ties: List[Facet] = []
                for facet in candidates:
                    known = sorted(labels[v] for v in facet if v in labels)
                    bound = tuple(known) + tuple(range(k + 1, k + 5 - len(known)))
                    if lowest is None or bound < lowest:
                        lowest = bound
                        ties = [facet]
                    elif bound == lowest:
                        ties.append(facet)

                if cmp == 0 and self.best is not None:
                    reference = self.best[len(self.emitted)]
                    if lowest > reference:
                        return
                    if lowest < reference:
                        cmp = -1

                options = [
                    (facet, fresh)
                    for facet in ties
                    for fresh in permutations(v for v in facet if v not in labels)
                ]

                if len(options) == 1:
                    facet, fresh = options[0]
                    self._assign(facet, fresh, lowest)
                    trail.append((facet, fresh))
                    continue

                for facet, fresh in options:
                    self._assign(facet, fresh, lowest)
                    try:
                        self._extend(low, cmp, version)
                    finally:
                        self._unassign(facet, fresh)
                    if version != self.version:
                        cmp = self._compare_prefix()
                        version = self.version
                        if cmp > 0:
                            return
                return
        finally:
            for facet, fresh in reversed(trail):
                self._unassign(facet, fresh)

    def _finish(self) -> None:
        # all labels assigned: the rest of the list is fixed
        candidate = self.emitted + sorted(
            tuple(sorted(self.labels[v] for v in facet)) for facet in self.remaining
        )
        if self.best is None or candidate < self.best:
            self.best = candidate
            self.best_labeling = dict(self.labels)
            self.optimal_leaves = 1
            self.version += 1
        elif candidate == self.best:
            self.optimal_leaves += 1


def canonical_labeling(triangulation: Triangulation) -> Tuple[FacetList, Labeling, int]:
    """(canonical facets, vertex -> canonical label, automorphism count)"""
    return _LabelingSearch(triangulation).run()


def canonical_form(triangulation: Triangulation) -> CanonicalForm:
    facets, _, automorphisms = canonical_labeling(triangulation)
    return CanonicalForm(
        facets=facets, digest=facet_digest(facets), automorphisms=automorphisms
    )


def canonical_triangulation(triangulation: Triangulation) -> Triangulation:
    """The triangulation relabeled into its canonical form"""
    facets, _, _ = canonical_labeling(triangulation)
    return Triangulation(facets, check=False)


def invariants(triangulation: Triangulation) -> tuple:
    """Cheap isomorphism invariants: f-vector, degrees, sorted edge-valence profiles"""
    valences = triangulation.edge_valences()
    profile = []
    for v in triangulation.vertices:
        incident = sorted(c for (a, b), c in valences.items() if v in (a, b))
        profile.append((len(incident), tuple(incident)))
    return (triangulation.f_vector().as_tuple(), tuple(sorted(profile)))


def are_isomorphic(first: Triangulation, second: Triangulation) -> bool:
    if first.facets == second.facets:
        return True
    if invariants(first) != invariants(second):
        return False
    return canonical_form(first) == canonical_form(second)


def isomorphism(first: Triangulation, second: Triangulation) -> Optional[Labeling]:
    """A vertex map sending `first` onto `second`, or None"""
    facets_a, labels_a, _ = canonical_labeling(first)
    facets_b, labels_b, _ = canonical_labeling(second)
    if facets_a != facets_b:
        return None
    back = {label: v for v, label in labels_b.items()}
    return {v: back[label] for v, label in labels_a.items()}


def brute_force_facets(triangulation: Triangulation) -> FacetList:
    """Minimum over all n! relabelings; only practical for n <= 7"""
    vertices = triangulation.vertices
    targets = range(1, len(vertices) + 1)
    best = None
    for image in permutations(targets):
        candidate = _relabeled(triangulation.facets, dict(zip(vertices, image)))
        if best is None or candidate < best:
            best = candidate
    return best
