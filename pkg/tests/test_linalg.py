"""Exact elimination engines."""

import random
from fractions import Fraction

import pytest

from secant_ideals.linalg import (
    dense_det,
    dense_kernel,
    dense_nullity,
    dense_rank,
    dense_solve,
    kernel_from_pivots,
    sparse_eliminate,
    sparse_kernel,
    sparse_rank,
    zero_forcing,
)


def test_sparse_rank_identity_and_zero():
    ident = [{i: 1} for i in range(5)]
    assert sparse_rank(ident) == 5
    assert sparse_rank([]) == 0
    assert sparse_rank([{}]) == 0


def test_sparse_kernel_zero_matrix():
    rank, basis = sparse_kernel([], 4)
    assert rank == 0
    assert len(basis) == 4
    for j, vec in enumerate(basis):
        assert vec == {j: Fraction(1)}


def test_sparse_kernel_identity_block():
    rows = [{0: 1}, {1: 2}, {2: -3}]
    rank, basis = sparse_kernel(rows, 3)
    assert rank == 3 and basis == []


def test_sparse_kernel_simple_relation():
    # x0 + 2 x1 - x2 = 0 and x1 + x2 = 0
    rows = [{0: 1, 1: 2, 2: -1}, {1: 1, 2: 1}]
    rank, basis = sparse_kernel(rows, 3)
    assert rank == 2
    assert len(basis) == 1
    vec = basis[0]
    assert rows_satisfied(rows, vec)
    assert vec[min(vec)] == 1


def rows_satisfied(rows, vec):
    for r in rows:
        if sum(v * vec.get(c, 0) for c, v in r.items()):
            return False
    return True


def test_sparse_kernel_random_against_dense():
    rng = random.Random(99)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        mat = [[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(nrows)]
        rows = [{j: v for j, v in enumerate(row) if v} for row in mat]
        rows = [r for r in rows if r]
        rank, basis = sparse_kernel(rows, ncols)
        assert rank == dense_rank(mat)
        assert len(basis) == ncols - rank
        for vec in basis:
            assert rows_satisfied(rows, vec)
        # independence: stacking the vectors gives full rank
        if basis:
            stacked = [[vec.get(j, Fraction(0)) for j in range(ncols)] for vec in basis]
            assert dense_rank(stacked) == len(basis)


def test_zero_forcing_cascade():
    rows = [{0: 2}, {0: 1, 1: 3}, {1: 1, 2: 1, 3: 1}]
    zeroed, surviving = zero_forcing(rows)
    assert zeroed == {0, 1}
    assert surviving == [{2: 1, 3: 1}]


def test_dense_det_known():
    assert dense_det([[1, 2], [3, 4]]) == -2
    assert dense_det([[0, 1], [1, 0]]) == -1
    assert dense_det([[2]]) == 2
    with pytest.raises(ValueError):
        dense_det([[1, 2]])


def test_dense_det_random_vs_expansion():
    rng = random.Random(3)

    def cofactor_det(m):
        n = len(m)
        if n == 1:
            return Fraction(m[0][0])
        acc = Fraction(0)
        for j in range(n):
            if not m[0][j]:
                continue
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            acc += (-1) ** j * m[0][j] * cofactor_det(minor)
        return acc

    for _ in range(25):
        n = rng.randint(1, 5)
        mat = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert dense_det(mat) == cofactor_det(mat)


def test_dense_solve():
    mat = [[2, 1], [1, 3]]
    rhs = [5, 10]
    x = dense_solve(mat, rhs)
    assert [2 * x[0] + x[1], x[0] + 3 * x[1]] == [5, 10]
    with pytest.raises(ZeroDivisionError):
        dense_solve([[1, 1], [1, 1]], [1, 2])


def test_dense_nullity_and_kernel():
    mat = [[1, 2, 3], [2, 4, 6]]
    assert dense_nullity(mat) == 2
    basis = dense_kernel(mat)
    assert len(basis) == 2
    for vec in basis:
        assert sum(mat[0][j] * vec.get(j, 0) for j in range(3)) == 0
