# tests/test_explorer.py
"""
Test flip-graph exploration, seeds, certificates and paths
"""
import pytest

from src.core import flips
from src.core.canon import are_isomorphic, canonical_form
from src.core.census import enumerate_spheres
from src.core.generators import cyclic_sphere, random_walk, stacked_sphere
from src.core.homology import homology_profile, is_sphere_candidate
from src.models.flip_models import FlipKind
from src.search.annealer import stacked_potential
from src.search.explorer import (
    FlipGraphExplorer,
    bfs_component,
    closure_certificate,
    collect_seeds_by_walks,
    find_seeds,
    insertion_closure_check,
    is_seed,
    is_unflippable,
    lift_polytopal,
    shortest_path,
)


def test_six_vertex_component(stacked6, cyclic6):
    report = bfs_component(stacked6, class_graph=True)
    assert report.class_count == 2
    assert report.frontier_exhausted
    assert report.max_depth == 1
    assert report.flip_edges == 1
    assert find_seeds(report) == [canonical_form(stacked6)]
    assert set(report.classes) == {canonical_form(stacked6), canonical_form(cyclic6)}
    assert report.graph.number_of_nodes() == 2
    assert report.graph.number_of_edges() == 1


def test_simplex_is_isolated(simplex):
    report = bfs_component(simplex)
    assert report.class_count == 1
    assert report.seed_count == 1
    assert report.unflippable_classes == [canonical_form(simplex)]
    assert is_unflippable(simplex)


def test_seed_predicate(simplex, stacked6, cyclic6):
    assert is_seed(simplex)
    assert is_seed(stacked6)
    assert not is_seed(cyclic6)


def test_seven_vertex_component_matches_census():
    report = bfs_component(stacked_sphere(7, rng_seed=2))
    assert report.frontier_exhausted
    assert report.class_count == 5
    assert set(report.classes) == set(enumerate_spheres(7))
    for form in report.classes:
        assert is_sphere_candidate(form.to_triangulation())


def test_parallel_matches_serial():
    start = stacked_sphere(7, rng_seed=5)
    serial = bfs_component(start)
    parallel = bfs_component(start, threads=2)
    assert parallel.classes == serial.classes
    assert parallel.seed_classes == serial.seed_classes


def test_limits_are_reported_in_band(stacked6):
    capped = bfs_component(stacked6, max_classes=1)
    assert capped.class_count == 1
    assert not capped.frontier_exhausted
    shallow = bfs_component(stacked6, max_depth=0)
    assert shallow.class_count == 1
    assert not shallow.frontier_exhausted


def test_certificate(stacked6, cyclic6):
    empty = closure_certificate(stacked6)
    assert empty is not None and len(empty) == 0

    path = closure_certificate(cyclic6)
    assert len(path) == 1
    assert path.moves[0].kind is FlipKind.THREE_TWO
    end = flips.replay(cyclic6, path.moves)
    assert stacked_potential(end) == end.n - 5
    assert canonical_form(end) == path.end


def test_certificate_for_walked_sphere():
    start = random_walk(cyclic_sphere(8), steps=25, rng_seed=8).final
    path = closure_certificate(start)
    assert path is not None
    end = flips.replay(start, path.moves)
    assert stacked_potential(end) == 3


def test_shortest_paths(simplex, stacked6, cyclic6):
    assert len(shortest_path(cyclic6, cyclic6)) == 0
    assert len(shortest_path(stacked6, cyclic6)) == 1
    insertion = shortest_path(simplex, stacked6, kinds=[FlipKind.ONE_FOUR])
    assert len(insertion) == 1
    assert are_isomorphic(flips.replay(simplex, insertion.moves), stacked6)


def test_shortest_path_replays_to_target(cyclic7):
    target = random_walk(cyclic7, steps=3, rng_seed=13).final
    path = shortest_path(cyclic7, target)
    assert path is not None
    assert len(path) <= 3
    assert are_isomorphic(flips.replay(cyclic7, path.moves), target)


def test_shortest_path_respects_limit(simplex, stacked6):
    assert shortest_path(simplex, stacked6) is None
    assert shortest_path(stacked6, cyclic_sphere(6), limit=0) is None


def test_walks_collect_seeds():
    start = cyclic_sphere(7)
    found = collect_seeds_by_walks([start, stacked_sphere(7)], walks=4, steps=12, rng_seed=1)
    report = bfs_component(start)
    assert found
    assert set(found) <= set(report.seed_classes)


def test_insertions_stay_certified(simplex, cyclic6):
    assert lift_polytopal(simplex) == [canonical_form(stacked_sphere(6))]
    report = insertion_closure_check(cyclic6)
    assert report.tested >= 1
    assert report.all_certified
    assert all(form.n == 7 for form in lift_polytopal(cyclic6))


@pytest.mark.slow
def test_eight_vertex_component():
    report = bfs_component(stacked_sphere(8))
    assert report.frontier_exhausted
    assert report.class_count == 39
    for form in report.classes:
        assert homology_profile(form.to_triangulation()).betti == [1, 0, 0, 1]


def test_explorer_can_be_reused(stacked6, simplex):
    search = FlipGraphExplorer()
    assert search.explore(stacked6).class_count == 2
    again = search.explore(simplex)
    assert again.class_count == 1
    assert again.classes == [canonical_form(simplex)]
    assert len(search.store) == 1


@pytest.mark.slow
def test_nine_vertex_component():
    report = bfs_component(stacked_sphere(9))
    assert report.frontier_exhausted
    assert report.class_count == 1296
