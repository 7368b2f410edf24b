from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from imagcone.exactfield import (
    QQ,
    FieldSpec,
    Scalar,
    UnrepresentableLabel,
    bond_label,
    canonical_ray,
    coxeter_cosine,
    mat,
    mat_mul,
    parse_scalar,
    rank,
    signature,
    solve,
    transpose,
    try_sqrt,
    vec,
)

FIELD = FieldSpec([2, 3, 5])

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def scalars(draw) -> Scalar:
    terms = {n: draw(fractions) for n in (1, 2, 3, 5, 6, 10, 15, 30) if draw(st.booleans())}
    return Scalar.from_terms(terms)


def test_parse_and_print_round_trip():
    x = parse_scalar("1/4+1/4*sqrt5")
    assert x == Scalar.from_terms({1: Fraction(1, 4), 5: Fraction(1, 4)})
    assert parse_scalar(str(x)) == x
    assert Scalar.from_json(x.to_json()) == x
    assert x.to_json() == {"1": "1/4", "5": "1/4"}


def test_sqrt_of_non_squarefree_is_normalized():
    assert Scalar.sqrt_of(12) == 2 * Scalar.sqrt_of(3)
    assert Scalar.sqrt_of(2) * Scalar.sqrt_of(2) == 2


def test_sign_of_nearly_cancelling_sum():
    # 99/70 is a very close rational upper bound of sqrt 2
    assert (Scalar.sqrt_of(2) - Fraction(99, 70)).sign() == -1
    assert (Scalar.sqrt_of(2) + Scalar.sqrt_of(3) - Scalar.sqrt_of(10)).sign() == -1


def test_coxeter_cosines():
    assert coxeter_cosine(2) == 0
    assert coxeter_cosine(3) == Fraction(-1, 2)
    assert coxeter_cosine(4, FieldSpec([2])) == -Scalar.sqrt_of(2) / 2
    assert coxeter_cosine(5, FieldSpec([5])) == -(1 + Scalar.sqrt_of(5)) / 4
    assert coxeter_cosine("inf") == -1
    assert coxeter_cosine("inf", QQ, Fraction(-5, 4)) == Fraction(-5, 4)
    with pytest.raises(UnrepresentableLabel):
        coxeter_cosine(5, QQ)
    with pytest.raises(UnrepresentableLabel):
        coxeter_cosine(7, FIELD)
    for m in (2, 3, 4, 5, 6):
        c = coxeter_cosine(m, FIELD)
        assert abs(float(c) + np.cos(np.pi / m)) < 1e-15
        assert bond_label(c) == m


def test_try_sqrt_outside_field_is_none():
    assert try_sqrt(2, QQ) is None
    assert try_sqrt(2, FieldSpec([2])) == Scalar.sqrt_of(2)
    # (1 + sqrt2)^2 = 3 + 2 sqrt2
    assert try_sqrt(3 + 2 * Scalar.sqrt_of(2), FieldSpec([2])) == 1 + Scalar.sqrt_of(2)
    # 9/16 - 1 < 0 has no root, 25/16 - 1 = 9/16 does
    assert try_sqrt(Fraction(9, 16)) == Fraction(3, 4)


def test_solve_and_rank():
    M = mat([[1, 2], [3, 4]])
    x = solve(M, vec([5, 6]))
    assert x == vec([-4, Fraction(9, 2)])
    assert rank(mat([[1, 2], [2, 4]])) == 1


@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * (1 / a) == 1


@given(scalars(), scalars())
def test_sign_is_multiplicative_and_matches_floats(a, b):
    assert (a * b).sign() == a.sign() * b.sign()
    if abs(float(a)) > 1e-9:
        assert a.sign() == (1 if float(a) > 0 else -1)


@given(scalars())
def test_try_sqrt_squares_back(a):
    sq = a * a
    r = try_sqrt(sq, FIELD)
    assert r is not None and r * r == sq and r.sign() >= 0
    if a.sign() > 0:
        r2 = try_sqrt(a, FIELD)
        if r2 is not None:
            assert r2 * r2 == a


small = st.integers(min_value=-4, max_value=4)


@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
    )
))
def test_signature_counts_and_congruence_invariance(data):
    A, P = data
    n = len(A)
    M = mat([[A[i][j] + A[j][i] for j in range(n)] for i in range(n)])
    Pm = mat(P)
    assume(rank(Pm) == n)
    p, q, z = signature(M)
    assert p + q + z == n
    congruent = mat_mul(mat_mul(transpose(Pm), M), Pm)
    assert signature(congruent) == (p, q, z)
    ev = np.linalg.eigvalsh(np.array([[float(x) for x in r] for r in M]))
    assert (int((ev > 1e-9).sum()), int((ev < -1e-9).sum())) == (p, q)


@given(st.lists(small, min_size=1, max_size=4), st.fractions(min_value=Fraction(1, 9), max_value=9))
def test_canonical_ray_is_scale_invariant(xs, t):
    assume(any(xs))
    v = vec(xs)
    assert canonical_ray(v) == canonical_ray(tuple(x * t for x in v))
