"""
Breadth-first search over isomorphism classes of triangulations.

Nodes are canonical forms; each visited class keeps a concrete representative
reached from the start by real moves, so paths read off the parent pointers
replay on the caller's own labels.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from loguru import logger

from ..core import flips
from ..core.canon import canonical_form, isomorphism
from ..core.generators import random_walk
from ..core.triangulation import Triangulation
from ..models.flip_models import VERTEX_PRESERVING, FlipKind, FlipMove
from ..models.search_models import CanonicalForm, ComponentReport, FlipPath, InsertionReport
from ..storage.class_store import ClassRecord, ClassStore
from .annealer import max_potential, stacked_potential

DEFAULT_KINDS = (FlipKind.TWO_THREE, FlipKind.THREE_TWO)

Successor = Tuple[FlipMove, CanonicalForm, Triangulation]


def is_seed(triangulation: Triangulation) -> bool:
    """No legal 3-2 move"""
    return not flips.enumerate_moves(triangulation, [FlipKind.THREE_TWO])


def is_unflippable(triangulation: Triangulation) -> bool:
    """No legal 2-3 and no legal 3-2 move: an isolated vertex of the flip graph"""
    return not flips.enumerate_moves(triangulation, VERTEX_PRESERVING)


def _expand(
    job: Tuple[Triangulation, Tuple[FlipKind, ...]]
) -> Tuple[bool, bool, List[Successor]]:
    """(seed, unflippable, successors) of one representative"""
    representative, kinds = job
    vertex_preserving = flips.enumerate_moves(representative, VERTEX_PRESERVING)
    seed = not any(m.kind is FlipKind.THREE_TWO for m in vertex_preserving)
    successors = []
    for move in flips.enumerate_moves(representative, kinds):
        after = flips.apply(representative, move)
        successors.append((move, canonical_form(after), after))
    return seed, not vertex_preserving, successors


class FlipGraphExplorer:
    """Layered BFS with a dedup store; optional process pool per layer"""

    def __init__(
        self,
        kinds: Optional[Iterable[FlipKind]] = None,
        max_classes: Optional[int] = None,
        max_depth: Optional[int] = None,
        threads: int = 1,
        class_graph: bool = False,
    ):
        self.kinds = tuple(sorted(set(kinds or DEFAULT_KINDS), key=lambda k: k.order))
        self.max_classes = max_classes
        self.max_depth = max_depth
        self.threads = max(threads, 1)
        self.class_graph = class_graph
        self.store = ClassStore()

    def _expand_layer(self, layer: List[ClassRecord]):
        jobs = [(record.representative, self.kinds) for record in layer]
        if self.threads == 1 or len(jobs) < 2:
            return [_expand(job) for job in jobs]
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(_expand, jobs, chunksize=max(1, len(jobs) // (4 * self.threads))))

    def explore(self, start: Triangulation) -> ComponentReport:
        self.store = ClassStore()
        root = ClassRecord(canonical_form(start), start)
        self.store.insert_if_absent(root)
        graph = nx.Graph() if self.class_graph else None
        if graph is not None:
            graph.add_node(root.form.hex_digest, n=start.n, facets=len(start.facets))

        seeds: List[CanonicalForm] = []
        unflippable: List[CanonicalForm] = []
        edges = set()
        truncated = False
        depth = 0
        layer = [root]

        while layer:
            expansions = self._expand_layer(layer)
            next_layer: List[ClassRecord] = []
            # merge in frontier order so the visit order matches a serial run
            for record, (seed, isolated, successors) in zip(layer, expansions):
                if seed:
                    seeds.append(record.form)
                if isolated:
                    unflippable.append(record.form)
                for move, form, after in successors:
                    if form not in self.store:
                        if self.max_depth is not None and depth + 1 > self.max_depth:
                            truncated = True
                            continue
                        if self.max_classes is not None and len(self.store) >= self.max_classes:
                            truncated = True
                            continue
                        child = ClassRecord(form, after, depth + 1, record.form, move)
                        self.store.insert_if_absent(child)
                        next_layer.append(child)
                        if graph is not None:
                            graph.add_node(form.hex_digest, n=after.n, facets=len(after.facets))
                    if form == record.form:
                        continue
                    pair = frozenset((record.form.digest, form.digest))
                    if pair not in edges:
                        edges.add(pair)
                        if graph is not None:
                            graph.add_edge(
                                record.form.hex_digest, form.hex_digest, kind=move.kind.value
                            )
            if next_layer:
                depth += 1
            logger.debug(f"BFS depth {depth}: {len(self.store)} classes, frontier {len(next_layer)}")
            layer = next_layer

        report = ComponentReport(
            class_count=len(self.store),
            seed_classes=seeds,
            frontier_exhausted=not truncated,
            max_depth=depth,
            classes=self.store.forms(),
            unflippable_classes=unflippable,
            flip_edges=len(edges),
            kinds=list(self.kinds),
            graph=graph,
        )
        logger.info(
            f"Explored {report.class_count} classes to depth {depth} "
            f"({report.seed_count} seeds, exhausted={report.frontier_exhausted})"
        )
        return report


def bfs_component(
    start: Triangulation,
    kinds: Optional[Iterable[FlipKind]] = None,
    max_classes: Optional[int] = None,
    max_depth: Optional[int] = None,
    threads: int = 1,
    class_graph: bool = False,
) -> ComponentReport:
    explorer = FlipGraphExplorer(kinds, max_classes, max_depth, threads, class_graph)
    return explorer.explore(start)


def find_seeds(report: ComponentReport) -> List[CanonicalForm]:
    return list(report.seed_classes)


# ---------------------------------------------------------------------- #
# Certificates and paths
# ---------------------------------------------------------------------- #


def is_stacked(triangulation: Triangulation) -> bool:
    return stacked_potential(triangulation) == max_potential(triangulation.n)


def closure_certificate(
    triangulation: Triangulation,
    max_classes: Optional[int] = 100_000,
    max_depth: Optional[int] = None,
) -> Optional[FlipPath]:
    """2-3/3-2 path from the input to a stacked sphere, or None within the limits"""
    start_form = canonical_form(triangulation)
    if is_stacked(triangulation):
        return FlipPath(start=start_form, end=start_form, moves=[])

    store = ClassStore()
    store.insert_if_absent(ClassRecord(start_form, triangulation))
    layer = [store.get(start_form)]
    depth = 0

    while layer and (max_depth is None or depth < max_depth):
        next_layer = []
        for record in layer:
            for move in flips.enumerate_moves(record.representative, DEFAULT_KINDS):
                after = flips.apply(record.representative, move)
                form = canonical_form(after)
                if form in store:
                    continue
                if max_classes is not None and len(store) >= max_classes:
                    logger.info(f"Certificate search hit the {max_classes} class limit")
                    return None
                child = ClassRecord(form, after, depth + 1, record.form, move)
                store.insert_if_absent(child)
                if is_stacked(after):
                    _, moves = store.path_to(form)
                    logger.info(f"Stacked sphere reached after {len(moves)} flips")
                    return FlipPath(start=start_form, end=form, moves=moves)
                next_layer.append(child)
        layer = next_layer
        depth += 1

    logger.info(f"No stacked sphere within {len(store)} classes, depth {depth}")
    return None


def _undo_moves(origin: Triangulation, moves: Sequence[FlipMove]) -> List[FlipMove]:
    """Moves leading from the end of `moves` back to `origin`"""
    states = [origin]
    for move in moves:
        states.append(flips.apply(states[-1], move))
    return [flips.inverse_move(states[i], moves[i]) for i in reversed(range(len(moves)))]


def shortest_path(
    source: Triangulation,
    target: Triangulation,
    kinds: Optional[Iterable[FlipKind]] = None,
    limit: Optional[int] = None,
    max_classes: Optional[int] = 100_000,
) -> Optional[FlipPath]:
    """Bidirectional BFS; moves replay on `source` and end isomorphic to `target`"""
    kinds = tuple(sorted(set(kinds or DEFAULT_KINDS), key=lambda k: k.order))
    start, end = canonical_form(source), canonical_form(target)
    if start == end:
        return FlipPath(start=start, end=end, moves=[])

    sides = (ClassStore(), ClassStore())
    sides[0].insert_if_absent(ClassRecord(start, source))
    sides[1].insert_if_absent(ClassRecord(end, target))
    layers: List[List[ClassRecord]] = [[sides[0].get(start)], [sides[1].get(end)]]
    depths = [0, 0]

    while layers[0] and layers[1]:
        if limit is not None and depths[0] + depths[1] >= limit:
            return None
        side = 0 if len(layers[0]) <= len(layers[1]) else 1
        store, other = sides[side], sides[1 - side]
        meeting: Optional[CanonicalForm] = None
        next_layer = []
        for record in layers[side]:
            for move in flips.enumerate_moves(record.representative, kinds):
                after = flips.apply(record.representative, move)
                form = canonical_form(after)
                if form in store:
                    continue
                if max_classes is not None and len(store) + len(other) >= max_classes:
                    return None
                child = ClassRecord(form, after, depths[side] + 1, record.form, move)
                store.insert_if_absent(child)
                next_layer.append(child)
                met = other.get(form)
                if met is not None and (meeting is None or met.depth < other.get(meeting).depth):
                    meeting = form
        depths[side] += 1
        layers[side] = next_layer
        if meeting is not None:
            return _join(sides, meeting, source, target, start, end)

    return None


def _join(
    sides: Tuple[ClassStore, ClassStore],
    meeting: CanonicalForm,
    source: Triangulation,
    target: Triangulation,
    start: CanonicalForm,
    end: CanonicalForm,
) -> FlipPath:
    _, forward = sides[0].path_to(meeting)
    _, backward = sides[1].path_to(meeting)
    middle = sides[0].get(meeting).representative
    far = sides[1].get(meeting).representative

    mapping: Dict[int, int] = isomorphism(far, middle)
    current = middle
    moves = list(forward)
    for undo in _undo_moves(target, backward):
        if undo.kind is FlipKind.ONE_FOUR:
            mapping[undo.new_vertex] = current.max_label + 1
        move = undo.relabel(mapping)
        current = flips.apply(current, move)
        moves.append(move)
    return FlipPath(start=start, end=end, moves=moves)


# ---------------------------------------------------------------------- #
# Seeds by random walks and insertion experiments
# ---------------------------------------------------------------------- #


def collect_seeds_by_walks(
    starts: Iterable[Triangulation], walks: int, steps: int, rng_seed: int = 0
) -> List[CanonicalForm]:
    """Seed classes hit by seeded random 2-3/3-2 walks from each start"""
    found = set()
    offset = 0
    for start in starts:
        for _ in range(walks):
            result = random_walk(start, DEFAULT_KINDS, steps, rng_seed + offset)
            offset += 1
            current = start
            for state_index in range(len(result.moves) + 1):
                if state_index:
                    current = flips.apply(current, result.moves[state_index - 1])
                if is_seed(current):
                    found.add(canonical_form(current))
    logger.info(f"Random walks hit {len(found)} seed classes")
    return sorted(found)


def lift_polytopal(triangulation: Triangulation) -> List[CanonicalForm]:
    """Isomorphism classes of all 1-4 insertions into facets of the input"""
    fresh = triangulation.max_label + 1
    forms = {
        canonical_form(flips.apply(triangulation, FlipMove.one_four(facet, fresh)))
        for facet in triangulation.facets
    }
    return sorted(forms)


def insertion_closure_check(
    triangulation: Triangulation,
    max_classes: Optional[int] = 100_000,
    max_depth: Optional[int] = None,
) -> InsertionReport:
    """Try to certify every 1-4 insertion class of the input at n + 1 vertices"""
    report = InsertionReport(source=canonical_form(triangulation))
    for form in lift_polytopal(triangulation):
        report.tested += 1
        path = closure_certificate(form.to_triangulation(), max_classes, max_depth)
        if path is None:
            report.uncertified.append(form)
            logger.warning(f"Insertion class {form.hex_digest} not certified")
        else:
            report.certified += 1
            report.path_lengths.append(len(path))
    return report
