# tests/test_triangulation.py
"""
Test triangulation construction, validation and local structure
"""
import pickle

import pytest

from conftest import RP2_FACETS, STACKED_6_FACETS
from src.core.exceptions import (
    BadFacetArity,
    DuplicateFacet,
    EdgeNotPresent,
    EmptyInput,
    FacetFormatError,
    NonPseudomanifold,
    NonZeroEulerCharacteristic,
    VertexNotPresent,
)
from src.core.triangulation import Triangulation, check_invariants, from_facets
from src.utils.facet_io import format_facets, parse_facets


def suspension_of_rp2():
    return [tri + (7,) for tri in RP2_FACETS] + [tri + (8,) for tri in RP2_FACETS]


def test_f_vectors(simplex, stacked6, cyclic6):
    assert simplex.f_vector().as_tuple() == (5, 10, 10, 5)
    assert stacked6.f_vector().as_tuple() == (6, 14, 16, 8)
    assert cyclic6.f_vector().as_tuple() == (6, 15, 18, 9)
    assert simplex.f_vector().to_line() == "5 10 10 5"


def test_neighborly(simplex, stacked6, cyclic6):
    assert simplex.is_neighborly()
    assert cyclic6.is_neighborly()
    assert not stacked6.is_neighborly()


def test_validation_errors(simplex):
    with pytest.raises(EmptyInput):
        from_facets([])
    with pytest.raises(BadFacetArity):
        from_facets([(1, 2, 3)])
    with pytest.raises(BadFacetArity):
        from_facets([(1, 1, 2, 3)])
    with pytest.raises(DuplicateFacet):
        from_facets(list(simplex.facets) + [(1, 2, 3, 4)])
    with pytest.raises(NonPseudomanifold):
        from_facets(simplex.facets[1:])
    with pytest.raises(NonZeroEulerCharacteristic):
        from_facets(suspension_of_rp2())


def test_check_invariants_names_first_failure(simplex):
    assert check_invariants(simplex) is None
    broken = Triangulation(suspension_of_rp2(), check=False)
    assert check_invariants(broken) == "NonZeroEulerCharacteristic"
    assert not broken.is_combinatorial_manifold()


def test_stars_and_links(simplex, stacked6):
    assert simplex.edge_valence((1, 2)) == 3
    assert stacked6.star_of_edge((1, 2)).valence == 4
    assert stacked6.neighbors(6) == [1, 2, 3, 4]
    assert stacked6.vertex_degree(1) == 5
    link = stacked6.link_of_vertex(6)
    assert link.link == [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
    assert link.is_sphere()
    assert stacked6.is_combinatorial_manifold()
    with pytest.raises(EdgeNotPresent):
        stacked6.star_of_edge((5, 6))
    with pytest.raises(VertexNotPresent):
        stacked6.star_of_vertex(9)


def test_relabel_and_normalize(simplex):
    shifted = simplex.relabel({v: v + 9 for v in simplex.vertices})
    assert shifted.vertices == (10, 11, 12, 13, 14)
    assert shifted.normalized() == simplex
    assert from_facets(shifted.facets, relabel=True) == simplex


def test_value_semantics(stacked6):
    reordered = Triangulation(reversed([tuple(reversed(f)) for f in STACKED_6_FACETS]))
    assert reordered == stacked6
    assert hash(reordered) == hash(stacked6)
    assert pickle.loads(pickle.dumps(stacked6)) == stacked6
    assert len(stacked6) == 8


def test_facet_text_format(stacked6):
    text = format_facets(stacked6, header="stacked")
    assert text.startswith("# stacked\n1 2 3 5\n")
    assert from_facets(parse_facets(text)) == stacked6
    with pytest.raises(FacetFormatError):
        parse_facets("1 2 3\n")
    with pytest.raises(FacetFormatError):
        parse_facets("1 2 x 4\n")
