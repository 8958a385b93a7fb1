# tests/test_flips.py
"""
Test bistellar move legality, application, inverses and traces
"""
import numpy as np
import pytest

from src.core import flips
from src.core.canon import are_isomorphic
from src.core.exceptions import IllegalMove, NotInvertiblePair, TraceFormatError
from src.core.generators import cyclic_sphere, random_walk, stacked_sphere
from src.models.flip_models import FLIP_DELTAS, FlipKind, FlipMove, parse_kinds
from src.utils.facet_io import format_trace, parse_trace


def test_simplex_boundary_is_unflippable(simplex):
    assert flips.enumerate_moves(simplex, [FlipKind.TWO_THREE, FlipKind.THREE_TWO]) == []
    assert flips.removable_vertices(simplex) == []
    with pytest.raises(IllegalMove) as info:
        flips.apply(simplex, FlipMove.two_three((1, 2, 3)))
    assert info.value.condition == "apex edge already present"


def test_two_three_on_stacked_gives_cyclic(stacked6, cyclic6):
    move = FlipMove.two_three((1, 2, 3))
    assert flips.apexes(stacked6, (1, 2, 3)) == (5, 6)
    after = flips.apply(stacked6, move)
    assert len(after.facets) == 9
    assert are_isomorphic(after, cyclic6)
    assert flips.inverse(move, stacked6, after) == FlipMove.three_two((5, 6))


def test_one_four_and_four_one(simplex, stacked6):
    move = FlipMove.one_four((1, 2, 3, 4), 6)
    assert flips.apply(simplex, move) == stacked6
    assert flips.legal_41(stacked6, 6)
    assert flips.apply(stacked6, FlipMove.four_one(6)) == simplex
    assert not flips.legal_14(stacked6, (1, 2, 3, 4), 7)
    with pytest.raises(IllegalMove):
        flips.apply(simplex, FlipMove.one_four((1, 2, 3, 4), 5))


def test_enumeration_order(stacked6):
    moves = flips.enumerate_moves(stacked6)
    orders = [m.kind.order for m in moves]
    assert orders == sorted(orders)
    assert sum(1 for m in moves if m.kind is FlipKind.ONE_FOUR) == 8
    assert all(m.new_vertex == 7 for m in moves if m.kind is FlipKind.ONE_FOUR)
    assert not any(m.kind is FlipKind.THREE_TWO for m in moves)
    assert [m.site for m in moves if m.kind is FlipKind.FOUR_ONE] == [(5,), (6,)]


def test_random_moves_preserve_invariants_and_invert():
    """apply followed by its inverse is the identity; f-vectors change by the delta table"""
    rng = np.random.default_rng(7)
    corpus = [cyclic_sphere(7), stacked_sphere(8, rng_seed=3), cyclic_sphere(8)]
    corpus.append(random_walk(cyclic_sphere(9), steps=20, rng_seed=5).final)
    for _ in range(200):
        triangulation = corpus[int(rng.integers(len(corpus)))]
        moves = flips.enumerate_moves(triangulation)
        move = moves[int(rng.integers(len(moves)))]
        after = flips.apply(triangulation, move)
        before_f = np.array(triangulation.f_vector().as_tuple())
        after_f = np.array(after.f_vector().as_tuple())
        assert tuple(after_f - before_f) == FLIP_DELTAS[move.kind].as_tuple()
        assert after.f_vector().euler_characteristic == 0
        assert sum(after.edge_valences().values()) == 6 * len(after.facets)
        undo = flips.inverse(move, triangulation, after)
        assert undo.kind is move.kind.inverse
        assert flips.apply(after, undo) == triangulation


def test_inverse_rejects_unrelated_pair(simplex, stacked6, cyclic6):
    with pytest.raises(NotInvertiblePair):
        flips.inverse(FlipMove.two_three((1, 2, 3)), stacked6, simplex)
    with pytest.raises(NotInvertiblePair):
        flips.inverse(FlipMove.two_three((1, 2, 3)), simplex, cyclic6)


def test_trace_format():
    text = "23 1 2 3\n32 5 6\n14 1 2 3 4 -> 7\n41 7\n"
    moves = parse_trace("# trace\n" + text)
    assert [m.kind for m in moves] == [
        FlipKind.TWO_THREE,
        FlipKind.THREE_TWO,
        FlipKind.ONE_FOUR,
        FlipKind.FOUR_ONE,
    ]
    assert moves[2].new_vertex == 7
    assert format_trace(moves) == text
    with pytest.raises(TraceFormatError):
        parse_trace("23 1 2\n")
    with pytest.raises(TraceFormatError):
        parse_trace("51 1\n")


def test_parse_kinds():
    assert parse_kinds("32,23") == [FlipKind.TWO_THREE, FlipKind.THREE_TWO]
    assert parse_kinds("all") == [
        FlipKind.ONE_FOUR,
        FlipKind.TWO_THREE,
        FlipKind.THREE_TWO,
        FlipKind.FOUR_ONE,
    ]
    with pytest.raises(TraceFormatError):
        parse_kinds("99")


def test_replay_matches_walk(cyclic7):
    walk = random_walk(cyclic7, steps=15, rng_seed=11)
    assert flips.replay(cyclic7, walk.moves) == walk.final


@pytest.mark.slow
def test_ten_thousand_moves_keep_invariants():
    rng = np.random.default_rng(31)
    corpus = [cyclic_sphere(7), cyclic_sphere(9), stacked_sphere(9, rng_seed=2)]
    current = corpus[0]
    for step in range(10_000):
        if step % 40 == 0:
            current = corpus[int(rng.integers(len(corpus)))]
        moves = flips.enumerate_moves(current)
        move = moves[int(rng.integers(len(moves)))]
        after = flips.apply(current, move)
        f = after.f_vector()
        assert f.euler_characteristic == 0
        assert f.as_tuple()[2] == 2 * f.as_tuple()[3]
        assert sum(after.edge_valences().values()) == 6 * len(after.facets)
        assert flips.apply(after, flips.inverse(move, current, after)) == current
        current = after
