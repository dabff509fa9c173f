"""Property-based invariants (hypothesis)."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdpark.checks import _lemma_2_1
from qdpark.config import DEFAULT_CAPS
from qdpark.groups import Perm, all_subgroups
from qdpark.linalg import FpMatrix
from qdpark.permrep import mackey_orbit_sizes
from qdpark.qd import (QdElement, alpha, beta, build_qd, f_iteration, gamma,
                       sylow_subgroup)

PRIMES = [2, 3, 5]


def perms(n):
    return st.permutations(range(n)).map(lambda t: Perm(tuple(t)))


@given(perms(5), perms(5), perms(5))
def test_perm_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == a.identity()


def matrices(p, n=3):
    return st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n),
                    min_size=n, max_size=n).map(
        lambda rows: FpMatrix.from_rows(rows, p))


@settings(max_examples=40)
@given(st.sampled_from(PRIMES), st.data())
def test_rank_nullity_and_rref_idempotence(p, data):
    m = data.draw(matrices(p))
    assert m.rank() + m.nullspace().dim == 3
    red = m.rref()[0]
    assert red.rref()[0] == red


@settings(max_examples=40)
@given(st.sampled_from(PRIMES), st.data())
def test_matmul_distributes(p, data):
    a = data.draw(matrices(p))
    b = data.draw(matrices(p))
    c = data.draw(matrices(p))
    assert a @ (b + c) == a @ b + a @ c


def qd_elements(p):
    word = st.lists(st.sampled_from(["a", "b", "g"]), max_size=6)
    table = {"a": alpha, "b": beta, "g": gamma}

    def build(spec):
        v, mats = spec
        m = alpha(p).identity()
        for ch in mats:
            m = m * table[ch](p)
        return QdElement(p, tuple(v), m)
    return st.tuples(
        st.lists(st.integers(0, p - 1), min_size=2, max_size=2),
        word).map(build)


@settings(max_examples=60)
@given(st.sampled_from([3, 5]), st.data())
def test_qd_group_axioms(p, data):
    x = data.draw(qd_elements(p))
    y = data.draw(qd_elements(p))
    z = data.draw(qd_elements(p))
    assert (x * y) * z == x * (y * z)
    assert x * x.inverse() == x.identity()
    assert (x * y).inverse() == y.inverse() * x.inverse()


@settings(max_examples=20)
@given(st.sampled_from([3, 5, 7, 11, 13, 17]))
def test_f_iteration_closed_form(p):
    seq = f_iteration(p)
    assert seq == [pow(s + 1, p - 2, p) for s in range(p - 1)]


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 9))
def test_green_instance_property(seed):
    ok, witness = _lemma_2_1(2, seed, DEFAULT_CAPS)
    assert ok, witness


@pytest.fixture(scope="module")
def qd2():
    return build_qd(2)


def test_mackey_all_subgroup_pairs(qd2):
    psub = sylow_subgroup(qd2, 2)
    for n_sub in all_subgroups(psub):
        orb, dc = mackey_orbit_sizes(qd2, psub, n_sub)
        assert orb == dc


@settings(max_examples=30)
@given(st.sampled_from([3, 5, 7]), st.data())
def test_sl2_determinant_closure(p, data):
    x = data.draw(qd_elements(p))
    m = x.m
    assert (m.a * m.d - m.b * m.c) % p == 1
