"""Exact GF(p) linear algebra."""

import pytest

from qdpark.linalg import FpMatrix, FpSubspace, poly_divmod, poly_gcd, poly_mul


@pytest.mark.parametrize("p", [2, 3, 5])
def test_identity_and_matmul(p):
    i3 = FpMatrix.identity(p, 3)
    m = FpMatrix.from_rows([[1, 2, 0], [0, 1, 1], [1, 0, 1]], p)
    assert i3 @ m == m
    assert m @ i3 == m


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rref_rank_nullspace(p):
    m = FpMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]], p)
    red, rank, pivots = m.rref()
    assert red.rref()[0] == red  # rref is idempotent
    assert rank == len(pivots) == m.rank()
    ns = m.nullspace()
    assert m.rank() + ns.dim == 3
    for v in ns.vectors():
        assert all(c == 0 for c in m.mat_vec(v))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_solve(p):
    m = FpMatrix.from_rows([[1, 1], [0, 1]], p)
    b = (1, p - 1)
    x = m.solve(b)
    assert m.mat_vec(x) == tuple(c % p for c in b)


def test_solve_inconsistent():
    m = FpMatrix.from_rows([[1, 0], [1, 0]], 3)
    assert m.solve((1, 2)) is None


@pytest.mark.parametrize("p", [2, 3])
def test_min_poly_nilpotent_and_identity(p):
    n = FpMatrix.from_rows([[0, 1], [0, 0]], p)
    assert n.min_poly() == (0, 0, 1)  # x^2
    assert n.is_nilpotent()
    i2 = FpMatrix.identity(p, 2)
    assert i2.min_poly() == (p - 1, 1)  # x - 1
    assert not i2.is_nilpotent()


def test_inverse_detection():
    m = FpMatrix.from_rows([[1, 1], [1, 0]], 2)
    assert m.is_invertible()
    s = FpMatrix.from_rows([[1, 1], [1, 1]], 2)
    assert not s.is_invertible()


@pytest.mark.parametrize("p", [2, 5])
def test_subspace_membership(p):
    s = FpSubspace.from_vectors([(1, 0, 1), (0, 1, 0)], p, 3)
    assert s.dim == 2
    assert s.contains((1, 1, 1))
    assert not s.contains((1, 0, 0))
    assert s == FpSubspace.from_vectors([(1, 1, 1), (0, 1, 0)], p, 3)


def test_poly_arithmetic():
    p = 5
    a, b = (1, 1), (4, 1)  # x+1, x+4
    prod = poly_mul(a, b, p)
    q, r = poly_divmod(prod, a, p)
    assert q == b and all(c == 0 for c in r)
    assert poly_gcd(prod, a, p) == a
