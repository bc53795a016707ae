from __future__ import annotations

import random
from math import comb

import pytest
import sympy

from parketaylor.linalg import (
    ExactMatrix,
    Lattice,
    det,
    det_mod,
    hnf,
    hnf_pivots,
    integer_kernel_basis,
    is_saturated,
    lattice_from,
    lattice_index,
    rank,
    rational_kernel_basis,
    rref,
    span_rank,
)
from parketaylor.ptcore import build_matrix


def rand_matrix(rng, r, c, lo=-4, hi=4, density=0.6):
    return ExactMatrix.from_dense([[rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(c)] for _ in range(r)])


def test_dumps_loads_roundtrip():
    M = build_matrix(5)
    assert ExactMatrix.loads(M.dumps()) == M
    assert M.dumps() == build_matrix(5).dumps()


def test_bad_entry():
    with pytest.raises(IndexError):
        ExactMatrix(2, 2, {(2, 0): 1})


@pytest.mark.parametrize("seed", range(8))
def test_hnf_is_unimodular_transform(seed):
    rng = random.Random(seed)
    M = rand_matrix(rng, rng.randint(2, 6), rng.randint(2, 6))
    H, U = hnf(M)
    assert U @ M == H
    assert abs(det(U)) == 1
    piv = hnf_pivots(H)
    assert piv == sorted(piv)
    assert len(piv) == rank(M) == sympy.Matrix(M.to_dense()).rank()


@pytest.mark.parametrize("seed", range(6))
def test_det_matches_sympy(seed):
    rng = random.Random(100 + seed)
    n = rng.randint(1, 6)
    M = rand_matrix(rng, n, n, density=0.8)
    d = int(sympy.Matrix(M.to_dense()).det())
    assert det(M) == d
    p = 1_000_000_007
    assert det_mod(M, p) == d % p


@pytest.mark.parametrize("seed", range(6))
def test_integer_kernel(seed):
    rng = random.Random(200 + seed)
    M = rand_matrix(rng, rng.randint(1, 4), rng.randint(3, 7))
    K = integer_kernel_basis(M)
    assert K.rank == M.cols - rank(M)
    for v in K.vectors:
        assert M.apply(v) == [0] * M.rows
    assert is_saturated(lattice_from(K.vectors, M.cols)) or not K.vectors


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_rank_of_adjacency_matrix(n):
    assert rank(build_matrix(n)) == comb(n - 1, 2) - 1


def test_kernel_of_a5():
    K = integer_kernel_basis(build_matrix(5))
    assert K.vectors == [[1, -1, -1, 1, 1, -1]]


def test_lattice_membership_and_index():
    L = Lattice(3)
    assert L.add([2, 0, 0])
    assert not L.add([4, 0, 0])
    assert L.contains([6, 0, 0]) and not L.contains([1, 0, 0])
    assert not is_saturated(L)
    full = lattice_from([[1, 0, 0]], 3)
    assert lattice_index(L, full) == 2
    L.add([3, 0, 0])  # gcd step brings the generator down to 1
    assert L.contains([1, 0, 0]) and is_saturated(L)


def test_span_rank_against_reference():
    K = integer_kernel_basis(build_matrix(6))
    rep = span_rank([[2 * x for x in v] for v in K.vectors], reference=K)
    assert rep.rank == K.rank
    assert rep.equals_reference is False and rep.saturated is False
    rep = span_rank(K.vectors, reference=K)
    assert rep.equals_reference and rep.saturated


def test_rref_and_rational_kernel():
    M = ExactMatrix.from_dense([[2, 4, 6], [1, 2, 4]])
    rows, piv = rref(M)
    assert piv == [0, 2]
    K = rational_kernel_basis(M)
    assert K == [[2, -1, 0]]
