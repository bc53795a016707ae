from __future__ import annotations

import random

import pytest

from parketaylor.groebner import Ideal, pfaffian_check, projective_degree_and_dim
from parketaylor.lifts import (
    CertificationError,
    PluckerRelation,
    all_word_choices,
    certify,
    closed_pt_ideal,
    lift_plucker,
    lift_relation,
    lift_table,
    open_pt_generators,
    plucker_lifts,
    plucker_relations,
    relation_positions,
)
from parketaylor.ptcore import parse_z_poly, vanishes_on_pt, z_ring
from parketaylor.toric import PreconditionFailed
from reference_data import F5, LIFTS6, M_PT, PT5_QUADRICS


def test_plucker_relations_counts():
    assert len(plucker_relations(5)) == 5
    assert [r.indices for r in plucker_relations(5, exclude_12=True)] == [(1, 3, 4, 5), (2, 3, 4, 5)]
    assert len(plucker_relations(6, exclude_12=True)) == 9
    assert PluckerRelation(1, 3, 4, 5, 5).dumps() == "p13*p45 - p14*p35 + p15*p34"
    with pytest.raises(ValueError):
        PluckerRelation(3, 1, 4, 5, 5)


def test_n5_lifts_match_open_generators():
    got = [lr.F for lr in plucker_lifts(5)]
    assert got == [parse_z_poly(t, 5) for t in F5[1:]]


def test_n6_lifts_verbatim():
    lifts = plucker_lifts(6)
    assert len(lifts) == 9
    table = {lr.source.indices: lr.F for lr in lifts}
    for idx, text in LIFTS6:
        assert table[idx] == parse_z_poly(text, 6)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_every_lift_is_certified(n):
    for lr in plucker_lifts(n):
        assert len(lr.F.terms) == 3
        assert all(c == 1 for c in lr.F.terms.values())
        assert certify(lr.F, lr.source) == (lr.cofactor, lr.sign)
        assert vanishes_on_pt(lr.F)
    assert len(lift_table(n)) == len(plucker_lifts(n))


def test_every_word_choice_is_certified_n7():
    for r in plucker_relations(7, exclude_12=True)[:8]:
        for alpha, beta in all_word_choices(*r.indices, 7):
            lift_plucker(*r.indices, alpha=alpha, beta=beta, n=7)


def test_certify_rejects_wrong_relation():
    lr = plucker_lifts(6)[0]
    with pytest.raises(CertificationError):
        certify(lr.F, PluckerRelation(2, 3, 4, 5, 6))


def test_lift_argument_checks():
    with pytest.raises(ValueError):
        lift_plucker(1, 2, 3, 4, n=5)
    with pytest.raises(ValueError):
        lift_plucker(1, 3, 4, 5, alpha=(6,), beta=(7,), n=7)
    with pytest.raises(ValueError):
        lift_plucker(1, 3, 4, 5)


def test_lift_relation_fuzz():
    rng = random.Random(3)
    base = list(plucker_lifts(5)) + list(plucker_lifts(6))
    done = 0
    for _ in range(60):
        f = rng.choice(base).F
        pos = relation_positions(f)
        if not pos:
            continue
        i = rng.choice(pos)
        from parketaylor.ptcore import ring_n

        n = ring_n(f.ring)
        d = list(range(n + 1, n + 1 + rng.randint(1, 2)))
        rng.shuffle(d)
        g = lift_relation(f, i, d)
        assert vanishes_on_pt(g)
        done += 1
    assert done > 20


def test_lift_relation_precondition():
    f = plucker_lifts(5)[0].F
    bad = [i for i in range(2, 6) if i not in relation_positions(f)]
    if bad:
        with pytest.raises(PreconditionFailed):
            lift_relation(f, bad[0], (6,))


def test_closed_ideal_n5():
    I = closed_pt_ideal(5)
    assert I.flags["certified"]
    R = z_ring(5)
    quads = Ideal([parse_z_poly(t, 5) for t in PT5_QUADRICS], R)
    for g in quads.gens:
        assert g in I
    assert all(g.degree() == 2 for g in I.groebner())
    assert projective_degree_and_dim(I) == (2, 5)
    M = [[parse_z_poly(e, 5) if e != "0" else R.zero() for e in row] for row in M_PT]
    assert pfaffian_check(M, I)


def test_open_generators_n5():
    I = open_pt_generators(5)
    assert len(I.gens) == 3
    assert I.gens[0] in (parse_z_poly(F5[0], 5), -parse_z_poly(F5[0], 5))
