from __future__ import annotations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from imagcone.exactfield import dot, vec
from imagcone.polycone import (
    PolyCone,
    dual,
    faces,
    intersect,
    minimal_face_containing,
    negate,
    relative_interior_point,
)

from .oracles import brute_face_sets

coord = st.integers(min_value=-3, max_value=3)


@st.composite
def generator_sets(draw, max_dim: int = 4, max_gens: int = 6):
    n = draw(st.integers(min_value=1, max_value=max_dim))
    gens = draw(st.lists(st.lists(coord, min_size=n, max_size=n), min_size=1, max_size=max_gens))
    gens = [g for g in gens if any(g)]
    assume(gens)
    return n, gens


def lattice_as_input_sets(C: PolyCone, gens) -> set[frozenset[int]]:
    lat = faces(C)
    return {
        frozenset(i for i, g in enumerate(gens) if lat.face(k).contains(vec(g))) for k in lat.keys
    }


def test_quadrant_representations_agree():
    C = PolyCone.from_generators([[1, 0], [0, 1]])
    D = PolyCone.from_inequalities([[1, 0], [0, 1]])
    assert C == D
    assert C.contains([1, 2]) and not C.contains([-1, 2])
    assert C.contains([1, 1], strict=True) and not C.contains([1, 0], strict=True)


def test_redundant_generators_are_dropped():
    C = PolyCone.from_generators([[1, 0], [1, 1], [0, 1], [2, 0]])
    assert len(C.generators) == 2


def test_half_plane_has_lineality():
    C = PolyCone.from_inequalities([[0, 1]], dim=2)
    assert not C.is_pointed()
    assert len(C.lineality) == 1 and len(C.generators) == 1


def test_square_cone_face_lattice():
    C = PolyCone.from_generators([[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1]])
    lat = faces(C)
    # apex, four rays, four facets, the cone
    assert len(lat) == 10
    assert sum(1 for k in lat.keys if len(k) == 2) == 4


def test_dual_with_form():
    form = ((vec([1, -2]), vec([-2, 1])))
    C = PolyCone.from_generators([[1, 0], [0, 1]], form=form)
    D = dual(C)
    for g in D.generators:
        for h in C.generators:
            assert C.pair(h, g) >= 0
    assert dual(D) == C


def test_intersect_and_negate():
    A = PolyCone.from_generators([[1, 0], [1, 1]])
    B = PolyCone.from_generators([[1, 1], [0, 1]])
    assert intersect(A, B) == PolyCone.from_generators([[1, 1]])
    assert negate(A) == PolyCone.from_generators([[-1, 0], [-1, -1]])


def test_json_round_trip():
    C = PolyCone.from_generators([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 1]])
    assert PolyCone.from_json(C.to_json()) == C


@given(generator_sets())
def test_double_dual(data):
    n, gens = data
    C = PolyCone.from_generators(gens, dim=n)
    assert dual(dual(C)) == C


@given(generator_sets())
def test_face_lattice_matches_brute_force(data):
    n, gens = data
    C = PolyCone.from_generators(gens, dim=n)
    assert lattice_as_input_sets(C, gens) == brute_face_sets(gens)


@given(generator_sets())
def test_every_face_is_exposed(data):
    n, gens = data
    C = PolyCone.from_generators(gens, dim=n)
    lat = faces(C)
    dual_c = dual(C)
    for k in lat.keys:
        normal = lat.exposing_normal(k)
        assert dual_c.contains(normal)
        tight = frozenset(i for i, g in enumerate(C.generators) if not dot(normal, g))
        assert tight == k
        assert all(not dot(normal, l) for l in C.lineality)


@given(generator_sets())
def test_minimal_face_round_trip(data):
    n, gens = data
    C = PolyCone.from_generators(gens, dim=n)
    lat = faces(C)
    for k in lat.keys:
        F = lat.face(k)
        assert minimal_face_containing(C, relative_interior_point(F)) == F


@given(generator_sets(), generator_sets())
def test_intersection_is_contained_in_both(a, b):
    (n, ga), (m, gb) = a, b
    assume(n == m)
    A = PolyCone.from_generators(ga, dim=n)
    B = PolyCone.from_generators(gb, dim=n)
    I = intersect(A, B)
    for g in I.generators + I.lineality:
        assert A.contains(g) and B.contains(g)


def test_point_outside_cone_is_rejected():
    from imagcone.polycone import PointNotInCone

    C = PolyCone.from_generators([[1, 0], [0, 1]])
    with pytest.raises(PointNotInCone):
        minimal_face_containing(C, [-1, 0])
