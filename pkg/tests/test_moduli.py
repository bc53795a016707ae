from __future__ import annotations

from fractions import Fraction

import pytest

from parketaylor.groebner import Ideal, pfaffian_check, projective_degree_and_dim
from parketaylor.lifts import closed_pt_ideal
from parketaylor.moduli import (
    build_L,
    compositions,
    degree_formula,
    index_name,
    kapranov_coordinate,
    kapranov_indices,
    lc_ideal,
    load_asym_table,
    lower_covers,
    pull_to_pt,
    shuffle_insertions,
    shuffle_sum,
    t_ring,
    verify_linear_iso,
    verify_lower_order_ideal,
)
from parketaylor.permutations import format_perm, parse_perm
from reference_data import L5_SUPPORTS, L6_T212, LC5_QUADRICS, M_LC, parse_plain


def test_indices():
    assert len(kapranov_indices(5)) == 6
    assert len(kapranov_indices(6)) == 24
    assert index_name((2, 1, 2)) == "t212"
    with pytest.raises(ValueError):
        kapranov_coordinate((3, 1), 5)


def test_kapranov_coordinate_t11():
    # (p1 - p2)^2 / ((p4 - p2)(p5 - p2)) with p1 = 0, p2 = 1, p5 at infinity
    # chart variables are x[3], x[4]; the factor 1 / (p5 - p2) is dropped
    t = kapranov_coordinate((1, 1), 5)
    assert t.evaluate({0: 3, 1: 7}) == Fraction(1, 6)
    t23 = kapranov_coordinate((2, 3), 5)
    assert t23.evaluate({0: 3, 1: 7}) == Fraction(-3 * -7, 7 - 3)


def test_shuffle():
    got = [format_perm(p) for p in shuffle_insertions(3, parse_perm("12345"))]
    assert got == ["123645", "123465", "123456"]
    assert len(shuffle_sum(3, parse_perm("12534")).terms) == 2
    with pytest.raises(ValueError):
        shuffle_insertions(9, parse_perm("12345"))


def test_L5_supports():
    L = build_L(5)
    for idx, words in L5_SUPPORTS.items():
        assert sorted(format_perm(p) for p in L[idx].perms) == sorted(words)


def test_L6_t212():
    S = build_L(6)[(2, 1, 2)]
    assert sorted(format_perm(p) for p in S.perms) == sorted(L6_T212)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_supports_are_lower_ideals(n):
    for S in build_L(n).values():
        rep = verify_lower_order_ideal(S)
        assert rep.ok, rep.witnesses[:3]


def test_lower_covers():
    assert lower_covers(parse_perm("12543")) == [parse_perm("12453"), parse_perm("12534")]


@pytest.mark.parametrize("n", [5, 6])
def test_linear_iso(n):
    rep = verify_linear_iso(n)
    assert rep.ok
    assert rep.pairs == len(kapranov_indices(n)) * (len(kapranov_indices(n)) - 1) // 2


def test_lc_ideal_and_pullback():
    I = lc_ideal(5)
    T = t_ring(5)
    printed = Ideal([parse_plain(T, q) for q in LC5_QUADRICS], T)
    assert I.equals(printed)
    assert projective_degree_and_dim(I) == (2, 5)
    M = [[parse_plain(T, e) for e in row] for row in M_LC]
    assert pfaffian_check(M, I)
    assert pull_to_pt(I).equals(closed_pt_ideal(5))


def test_degree_formula():
    assert compositions(2, 2) == [(1, 1), (2, 0)]
    assert len(load_asym_table()) == 7
    assert degree_formula(4) == 1
    assert degree_formula(5) == 5
    assert degree_formula(6) == 61
    with pytest.raises(ValueError, match="no entry"):
        degree_formula(7)
