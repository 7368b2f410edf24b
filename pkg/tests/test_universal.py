from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from imagcone.catalog import dihedral, universal
from imagcone.exactfield import vscale, vsum
from imagcone.imagcone import k_cone, z_membership
from imagcone.limitrays import dihedral_limit_rays, distance_to_ray
from imagcone.polycone import PolyCone, intersect
from imagcone.rootsys import dominates, positive_roots_up_to_depth
from imagcone.universal import (
    InvalidPrefix,
    NotInPositiveCone,
    beta_prime_roots,
    d_cone,
    itinerary,
    k_plus,
    k_rho,
    locate,
    positive_simples,
    prefix_dominates,
    u_vec,
    uprime_vec,
    validate_generic_universal,
)

G3 = universal(3, "-5/4")
D = dihedral("-5/4")


def test_validation():
    assert validate_generic_universal(G3)
    assert validate_generic_universal(D)
    assert not validate_generic_universal(universal(3))


def test_u_is_isotropic_and_uprime_is_orthogonal():
    for i in range(3):
        for j in range(3):
            if i != j:
                assert G3.norm(u_vec(G3, i, j)) == 0
                assert G3.pair_simple(uprime_vec(G3, i, j), i) == 0


def test_dihedral_k_plus_and_d_cone():
    assert set(k_plus(D).generators) == {D.combine([2, 1]), D.combine([1, 2])}
    assert set(d_cone(D, 0).generators) == {D.combine([1, 0]), D.combine([2, 1])}


@pytest.mark.parametrize("sys", [D, G3], ids=["rank2", "rank3"])
def test_k_is_spanned_by_uprime_and_lies_in_k_plus(sys):
    n = sys.rank
    gens = [uprime_vec(sys, i, j) for i in range(n) for j in range(n) if i != j]
    kc = k_cone(sys)
    assert kc == PolyCone.from_generators(gens, dim=sys.dim, form=sys.form)
    kp = k_plus(sys)
    for g in kc.generators:
        assert kp.contains(g)


def test_locate_cases():
    assert locate(G3, G3.combine([0, 0, 0])).status == "zero"
    r = locate(G3, G3.simples[1])
    assert r.status == "in_d" and r.alpha == 1
    iso = u_vec(G3, 2, 0)
    r = locate(G3, iso)
    assert r.status == "in_d" and r.alpha == 2
    r = locate(G3, G3.combine([1, 1, 1]))
    assert r.status == "in_z" and r.word == ()
    with pytest.raises(NotInPositiveCone):
        locate(G3, G3.combine([-1, 0, 0]))


def test_locate_after_descent_lands_in_k():
    v = G3.act((0, 1), G3.combine([1, 1, 1]))
    r = locate(G3, v)
    assert r.status == "in_z"
    assert z_membership(G3, G3.act(r.word, v)).word == ()


def test_d_cones_meet_only_at_zero():
    for i, j in combinations(range(3), 2):
        assert intersect(d_cone(G3, i), d_cone(G3, j)).is_zero()


def test_d_cone_sign_pattern():
    for i in range(3):
        for g in d_cone(G3, i).generators:
            if G3.norm(g) == 0:
                continue
            assert positive_simples(G3, g) == [i]


def test_separation_constant():
    k = k_rho(G3)
    assert k > 0
    for i in range(3):
        for g in d_cone(G3, i).generators:
            for b in range(3):
                assert abs(2 * G3.pair_simple(g, b)) >= k * G3.height(g)


def test_itinerary_of_dihedral_point():
    it = itinerary(D, D.combine([2, 1]), 12)
    assert it.prefix == (0, 1) * 6
    assert not it.terminated


def test_itinerary_heights():
    # descending toward K: heights strictly decrease
    v = G3.act((0, 1, 2), G3.combine([1, 1, 1]))
    it = itinerary(G3, v, 20)
    assert it.terminated
    assert all(b < a for a, b in zip(it.heights, it.heights[1:]))
    # a point of D: heights drop to a minimum and then strictly increase
    it = itinerary(D, D.combine([2, 1]), 20)
    h = list(it.heights)
    m = h.index(min(h))
    assert all(b < a for a, b in zip(h[: m + 1], h[1 : m + 1]))
    assert all(b > a for a, b in zip(h[m:], h[m + 1 :]))


def test_beta_prime_converges_to_limit_ray():
    rays = dihedral_limit_rays(D, D.simples[0], D.simples[1]).rays
    chain = beta_prime_roots(D, (0, 1) * 20, 40)
    last = chain[-1]
    assert min(distance_to_ray(D, last.vector, r) for r in rays) < 1e-6


def test_beta_prime_prefix_errors():
    with pytest.raises(InvalidPrefix):
        beta_prime_roots(D, (0, 0, 1), 3)
    with pytest.raises(InvalidPrefix):
        beta_prime_roots(D, (0, 1), 3)


def test_prefix_dominance_agrees_in_rank_three():
    roots = positive_roots_up_to_depth(G3, 4)
    for a in roots:
        for b in roots:
            assert dominates(G3, a, b) == prefix_dominates(a, b)


weights = st.lists(st.integers(min_value=0, max_value=6), min_size=3, max_size=3)


@given(weights)
def test_partition_of_the_simplex(ws):
    v = G3.combine(ws)
    if not any(ws):
        return
    in_k = all(G3.pair_simple(v, i).sign() <= 0 for i in range(3))
    pos = positive_simples(G3, v)
    assert in_k != (len(pos) == 1)
    assert len(pos) <= 1


@given(weights)
def test_located_points_respect_their_cones(ws):
    v = G3.combine(ws)
    r = locate(G3, v, budget=2000)
    if r.status == "in_d":
        assert G3.pair_simple(v, r.alpha) > 0
        assert all(G3.pair_simple(v, b) < 0 for b in range(3) if b != r.alpha)
    if r.status == "in_z":
        assert k_cone(G3).contains(G3.act(r.word, v))


def test_positive_multiple_of_k_point_is_in_z():
    kc = k_cone(G3)
    v = vsum([vscale(i + 1, g) for i, g in enumerate(kc.generators)], G3.dim)
    assert locate(G3, v).status == "in_z"


def test_rank_two_worked_values():
    assert uprime_vec(D, 0, 1) == D.combine(["5/4", 1])
    assert u_vec(D, 0, 1) == D.combine([2, 1])
    assert u_vec(D, 1, 0) == D.combine([1, 2])
    assert locate(D, D.combine(["9/4", "9/4"])).status == "in_z"
    r = locate(D, D.combine([2, 1]))
    assert r.status == "in_d" and r.alpha == 0
    chain = beta_prime_roots(D, (0, 1), 2)
    assert [b.coeffs for b in chain] == [D.combine([1, 0]), D.combine(["5/2", 1])]
    assert itinerary(D, D.simples[0], 3).prefix[0] == 0
    assert itinerary(D, D.combine([1, 1]), 3).prefix == ()


def test_uprime_in_the_example_subsystem():
    sys = universal(3)
    g0 = sys.simples[2]
    g1 = sys.act((0, 1), g0)
    assert uprime_vec(sys, g0, g1) == vsum([vscale(7, g0), g1], sys.dim)
