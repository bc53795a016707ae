from __future__ import annotations

import random

import pytest

from parketaylor import _kernels_py as py
from parketaylor import kernels
from parketaylor.ptcore import build_matrix, z_ring
from parketaylor.toric import kernel_binomials, quadratic_family

cy = pytest.importorskip("parketaylor._kernels")

P = 4611686018427387847


def test_backend_selected():
    assert kernels.BACKEND in ("compiled", "python")


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_rank_agrees(n):
    dense = build_matrix(n).to_dense()
    assert cy.rank_mod_p(dense, P) == py.rank_mod_p(dense, P)


def test_rank_random():
    rng = random.Random(5)
    for _ in range(30):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        dense = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        assert cy.rank_mod_p(dense, 101) == py.rank_mod_p(dense, 101)
    assert cy.rank_mod_p([], P) == 0


def test_lattice_agrees():
    vecs = [b.sparse_vector() for b in quadratic_family(7)]
    rows_c, rows_p = {}, {}
    for v in vecs:
        assert cy.lattice_reduce(rows_c, v) == py.lattice_reduce(rows_p, v)
        assert cy.lattice_insert(rows_c, dict(v)) == py.lattice_insert(rows_p, dict(v))
    assert rows_c == rows_p


def test_normal_form_agrees():
    R = z_ring(6)
    leads, trails, masks = [], [], []
    for b in kernel_binomials(6):
        a, c = sorted(b.polynomial(6).terms, key=R.key, reverse=True)
        leads.append(a)
        trails.append(c)
        masks.append(sum(1 << i for i, e in enumerate(a) if e))
    rng = random.Random(2)
    for _ in range(200):
        m = tuple(rng.randrange(3) for _ in range(R.nvars))
        assert cy.binomial_normal_form(m, leads, trails, masks) == py.binomial_normal_form(
            m, leads, trails, masks
        )
