# tests/test_census.py
"""
Test the orderly sphere census against known class counts
"""
import pytest

from src.core.census import SphereCensus, enumerate_spheres
from src.core.canon import canonical_form


@pytest.mark.parametrize("n,expected", [(5, 1), (6, 2), (7, 5)])
def test_class_counts(n, expected):
    assert len(enumerate_spheres(n)) == expected


def test_six_vertex_classes(stacked6, cyclic6):
    assert enumerate_spheres(6) == sorted([canonical_form(stacked6), canonical_form(cyclic6)])


def test_rejects_too_few_vertices():
    with pytest.raises(ValueError):
        SphereCensus(4)


@pytest.mark.slow
def test_eight_vertex_count():
    assert len(enumerate_spheres(8)) == 39
