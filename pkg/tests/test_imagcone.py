from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from imagcone.catalog import CORPUS
from imagcone.exactfield import vscale, vsum
from imagcone.imagcone import (
    NotInZError,
    NotIrreducibleIndefinite,
    facial_closure,
    k_cone,
    k_cone_via_facials,
    minimal_coset_rep,
    z_face_lattice_standard,
    z_face_minimal,
    z_interior_point,
    z_membership,
    z_sample,
)
from imagcone.rootsys import canonical_simples, inverse_word, length, standard_subsystem, subsystem
from imagcone.titschamber import facial_subsets, in_k, support_components

SYSTEMS = {name: make() for name, make in CORPUS.items()}
INDEFINITE = ["dihedral-5/4", "universal-3", "generic-universal-3", "two-affine-bridge"]


@pytest.mark.parametrize("name", INDEFINITE)
def test_k_cone_matches_facial_description(name):
    sys = SYSTEMS[name]
    assert k_cone(sys) == k_cone_via_facials(sys)


def test_via_facials_needs_irreducible_indefinite():
    with pytest.raises(NotIrreducibleIndefinite):
        k_cone_via_facials(SYSTEMS["affine-A1"])


def test_k_of_finite_and_affine():
    assert k_cone(SYSTEMS["A3"]).is_zero()
    kc = k_cone(SYSTEMS["affine-A1"])
    assert kc.generators == (SYSTEMS["affine-A1"].combine([1, 1]),)


def test_dihedral_membership_examples():
    sys = SYSTEMS["dihedral-5/4"]
    r = z_membership(sys, sys.combine(["9/4", "9/4"]))
    assert r.status == "in_z" and r.word == ()
    r = z_membership(sys, sys.combine([1, 0]))
    assert r.status == "not_in_z" and r.certificate == "positive_norm"
    r = z_membership(sys, sys.combine([-1, 0]))
    assert r.certificate == "not_in_positive_cone"
    # (2, 1) has negative norm but lies outside Z: it never reaches K
    r = z_membership(sys, sys.combine([2, 1]), budget=300)
    assert r.status in ("inconclusive", "not_in_z")
    assert r.status != "in_z"


def test_membership_word_lands_in_k():
    sys = SYSTEMS["universal-3"]
    r = z_membership(sys, sys.act((0, 1), sys.combine([1, 1, 1])))
    assert r.in_z
    assert in_k(sys, r.k)
    assert sys.act(r.word, sys.act((0, 1), sys.combine([1, 1, 1]))) == r.k


@pytest.mark.parametrize("name", INDEFINITE)
def test_z_sample_round_trip_and_nonpositivity(name):
    sys = SYSTEMS[name]
    pts = z_sample(sys, 2)
    gens = set(k_cone(sys).generators)
    for p in pts:
        r = z_membership(sys, p, budget=200)
        assert r.in_z
        assert in_k(sys, r.k)
        assert r.k in gens
    for p in pts:
        for q in pts:
            assert sys.pair(p, q) <= 0


@pytest.mark.parametrize("name", ["two-affine-bridge", "universal-3"])
def test_face_restriction(name):
    sys = SYSTEMS[name]
    pts = z_sample(sys, 2)
    for f in facial_subsets(sys):
        if not f.special or not f.indices or len(f.indices) == sys.rank:
            continue
        child = standard_subsystem(sys, f.indices)
        span_pts = [p for p in pts if child.positive_cone.contains(p)]
        for p in span_pts:
            assert z_membership(child, p, budget=200).in_z


def test_subgroup_k_points_are_in_z():
    sys = SYSTEMS["universal-3"]
    g0 = sys.simples[2]
    g1 = sys.act((0, 1), g0)
    sub = canonical_simples(sys, [g0, g1])
    child = subsystem(sys, sub)
    for g in k_cone(child).generators:
        assert z_membership(sys, g, budget=200).in_z


def test_z_interior_point_values():
    sys = SYSTEMS["universal-3"]
    g0 = sys.simples[2]
    g1 = sys.act((0, 1), g0)
    p = z_interior_point(sys, [g0, g1])
    # a positive multiple of gamma0 + gamma1 = 6 alpha + 2 beta + 2 gamma
    assert p == sys.combine([48, 16, 16])
    d = SYSTEMS["dihedral-5/4"]
    q = z_interior_point(d, [d.simples[0], d.simples[1]])
    assert q[0] == q[1] and q[0] > 0


def test_z_face_minimal():
    sys = SYSTEMS["two-affine-bridge"]
    face = z_face_minimal(sys, sys.combine([1, 1, 0, 0, 0]))
    assert face.indices == (0, 1)
    assert face.word == ()
    with pytest.raises(NotInZError):
        z_face_minimal(sys, sys.simples[2])


def test_standard_lattice_of_universal_system():
    sys = SYSTEMS["universal-3"]
    lat = z_face_lattice_standard(sys)
    assert sorted(lat.nodes) == [(), (0, 1), (0, 1, 2), (0, 2), (1, 2)]
    pairs = [(0, 1), (0, 2), (1, 2)]
    for a in pairs:
        for b in pairs:
            if a != b:
                assert lat.meet(a, b) == ()
                assert lat.join(a, b) == (0, 1, 2)


@pytest.mark.parametrize("name", INDEFINITE + ["affine-A2", "dependent-affine-pair"])
def test_lattice_axioms(name):
    lat = z_face_lattice_standard(SYSTEMS[name])
    nodes = lat.nodes
    for a in nodes:
        assert lat.meet(a, a) == a and lat.join(a, a) == a
        for b in nodes:
            m, j = lat.meet(a, b), lat.join(a, b)
            assert m in nodes and j in nodes
            assert m == lat.meet(b, a) and j == lat.join(b, a)
            assert set(m) <= set(a) & set(b)
            assert lat.meet(a, lat.join(a, b)) == a
            assert lat.join(a, lat.meet(a, b)) == a
            uppers = [c for c in nodes if lat.leq(a, c) and lat.leq(b, c)]
            assert all(lat.leq(j, c) for c in uppers)


def test_facial_closure_of_example_subgroup():
    sys = SYSTEMS["universal-3"]
    g0 = sys.simples[2]
    g1 = sys.act((0, 1), g0)
    fc = facial_closure(sys, [g0, g1])
    assert fc.status == "ok"
    assert fc.indices == (0, 1, 2)
    assert fc.descent_word == (0,)


@pytest.mark.parametrize("name", ["universal-3", "two-affine-bridge", "dependent-affine-pair", "A3"])
def test_facial_closure_of_standard_facial_subgroups(name):
    sys = SYSTEMS[name]
    for f in facial_subsets(sys):
        if not f.indices:
            continue
        fc = facial_closure(sys, [sys.simples[i] for i in f.indices])
        assert fc.indices == f.indices
        assert fc.word == ()


def test_facial_closure_of_conjugated_parabolic():
    sys = SYSTEMS["two-affine-bridge"]
    w = (2, 1)
    moved = [sys.act(w, sys.simples[i]) for i in (3, 4)]
    fc = facial_closure(sys, moved)
    assert fc.indices == (3, 4)
    assert length(sys, fc.word) == len(fc.word)
    # x^-1 carries every generator into the span of the standard simple roots of I
    back = inverse_word(fc.word)
    for m in moved:
        c = sys.coords(sys.act(back, m))
        assert all(not c[i] for i in range(sys.rank) if i not in fc.indices)


def test_minimal_coset_rep():
    sys = SYSTEMS["A3"]
    assert minimal_coset_rep(sys, (0, 1, 0), (0,)) in ((0, 1), (1, 0))
    rep = minimal_coset_rep(sys, (0, 1, 0), (0,))
    assert length(sys, rep) == 2


weights = st.lists(st.integers(min_value=0, max_value=3), min_size=12, max_size=12)


@given(weights)
def test_isotropic_k_points_have_affine_support(ws):
    sys = SYSTEMS["two-affine-bridge"]
    gens = k_cone(sys).generators
    v = vsum([vscale(w, g) for w, g in zip(ws, gens)], sys.dim)
    if not any(v):
        return
    comps = support_components(sys, v)
    isotropic = sys.norm(v) == 0
    assert isotropic == all(t.kind == "affine" for _, _, t in comps)
    if isotropic and len(comps) == 1:
        (comp, part, t) = comps[0]
        delta = sys.combine([t.delta[comp.index(i)] if i in comp else 0 for i in range(sys.rank)])
        ratio = next(a / b for a, b in zip(v, delta) if b)
        assert ratio > 0 and v == vscale(ratio, delta)


def test_fractional_vector_membership():
    sys = SYSTEMS["dihedral-5/4"]
    r = z_membership(sys, sys.combine([Fraction(1, 3), Fraction(1, 3)]))
    assert r.in_z
