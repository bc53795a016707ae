from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from parketaylor.permutations import enumerate_sigma
from parketaylor.ptcore import (
    build_matrix,
    cross_ratio,
    descent_sign,
    exponent_vector,
    parse_z_poly,
    pt_parametrization,
    pullback_m0n,
    pullback_z,
    telescoping_sum,
    to_pt_signs,
    vanishes_on_pt,
    vanishes_on_torus,
    z_monomial,
    z_name,
)
from parketaylor.ratfun import DegenerateConfiguration
from reference_data import A5, CUBIC5, F5, LIFTS6, PT5_QUADRICS, T6_BASIS


def test_matrix_n5_exact():
    t = time.perf_counter()
    M = build_matrix(5)
    assert time.perf_counter() - t < 0.1
    assert M.to_dense() == A5


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_matrix_shape_and_column_sums(n):
    M = build_matrix(n)
    dense = M.to_dense()
    assert M.rows == n * (n - 1) // 2 and M.cols == len(enumerate_sigma(n))
    assert all(sum(col) == n for col in zip(*dense))
    assert all(x == 1 for x in dense[0])  # p12 in every column


def test_names_and_parsing():
    assert z_name((1, 2, 3, 5, 4)) == "z[12354]"
    F = parse_z_poly("z12345*z12453 - 2*z12354^2", 5)
    assert exponent_vector(parse_z_poly(CUBIC5, 5)) == [1, -1, -1, 1, 1, -1]
    assert len(F.terms) == 2


def test_single_coordinate_pullback():
    num, den = pullback_z(z_monomial([(1, 2, 3, 4, 5)]))
    names = num.ring.names
    assert num.dumps() == "+1/1"
    assert sorted(names[i] for i, e in enumerate(den) if e) == [
        "p[1,2]", "p[1,5]", "p[2,3]", "p[3,4]", "p[4,5]"
    ]


def test_cubic_is_toric_but_shifted_sign():
    F = parse_z_poly(CUBIC5, 5)
    assert vanishes_on_torus(F)
    assert pullback_z(F)[0].is_zero()
    assert vanishes_on_pt(to_pt_signs(F))


@pytest.mark.parametrize("text", F5[1:] + PT5_QUADRICS)
def test_n5_quadrics_vanish_on_pt(text):
    F = parse_z_poly(text, 5)
    assert vanishes_on_pt(F)
    assert not vanishes_on_torus(F)


@pytest.mark.parametrize("idx,text", LIFTS6)
def test_n6_lifts_vanish_on_pt(idx, text):
    assert vanishes_on_pt(parse_z_poly(text, 6))


@pytest.mark.parametrize("text", T6_BASIS)
def test_t6_basis_is_toric(text):
    F = parse_z_poly(text, 6)
    assert vanishes_on_torus(F)
    assert vanishes_on_pt(to_pt_signs(F))


def test_non_relation_detected():
    F = parse_z_poly("z12345*z12453 - z12354*z12435", 5)
    assert not vanishes_on_torus(F)
    assert not vanishes_on_pt(F)


def test_descent_sign_twists_involution():
    F = parse_z_poly(T6_BASIS[0], 6)
    assert to_pt_signs(to_pt_signs(F)) == F
    assert descent_sign((1, 2, 3, 4, 5)) == -1  # the wrap 5 -> 1 descends
    assert descent_sign((1, 2, 5, 4, 3)) == -1


def test_parametrization_matches_pullback():
    sigma = (1, 2, 4, 3, 5)
    r = pt_parametrization(sigma)
    assert r == pullback_m0n(z_monomial([sigma]))


def test_cross_ratio_numeric_and_symbolic():
    pt = {1: 0, 2: 1, 3: Fraction(3), 4: Fraction(-2), 5: None}
    v = cross_ratio(1, 2, 3, 4, pt)
    assert v == Fraction((0 - 3) * (1 + 2), (1 - 3) * (0 + 2))
    sym = cross_ratio(1, 2, 3, 4)
    assert sym.evaluate({0: 0, 1: 1, 2: 3, 3: -2}) == v
    with pytest.raises(DegenerateConfiguration):
        cross_ratio(1, 2, 3, 4, {1: 0, 2: 0, 3: 0, 4: 1})
    with pytest.raises(ValueError):
        cross_ratio(1, 1, 3, 4)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_telescoping_identity(n):
    rng = random.Random(n)
    sigmas = enumerate_sigma(n - 1)
    for sigma in rng.sample(sigmas, min(5, len(sigmas))):
        for i in range(3, n):
            assert telescoping_sum(sigma, i).is_zero()
    with pytest.raises(ValueError):
        telescoping_sum(sigmas[0], n)
