"""Permutation modules, endomorphism algebras, radicals, Brauer quotients."""

import pytest

from qdpark.groups import FiniteGroup, Perm, all_subgroups, generating_set
from qdpark.permrep import (algebra_radical, brauer_quotient_definitional,
                            check_lemma_2_2, coset_action, endo_algebra,
                            exhaustive_idempotent_scan, indecomposable,
                            mackey_orbit_sizes, quotient_algebra,
                            verify_scott)
from qdpark.qd import build_qd, sylow_subgroup


@pytest.fixture(scope="module")
def qd2():
    return build_qd(2)


@pytest.fixture(scope="module")
def p2(qd2):
    return sylow_subgroup(qd2, 2)


def cyclic(n):
    return FiniteGroup(generators=[Perm(tuple(range(1, n)) + (0,))],
                       name=f"C{n}")


def trivial_subgroup(g):
    return g.subgroup(generators=[g.identity])


def test_coset_action_is_transitive(qd2, p2):
    act = coset_action(qd2, p2)
    assert act.degree == 3
    assert len(act.orbits()) == 1


def test_endo_dim_equals_double_cosets(qd2, p2):
    act = coset_action(qd2, p2)
    ea = endo_algebra(act, 2)
    assert ea.dim == 2  # P \ Qd(2) / P has two double cosets


def test_group_algebra_of_p_group_is_local():
    c4 = cyclic(4)
    act = coset_action(c4, trivial_subgroup(c4))
    verdict = indecomposable(act, 2, gens=generating_set(c4))
    assert verdict.status == "INDECOMPOSABLE_ABS"
    assert verdict.dim_end == 4 and verdict.dim_radical == 3


def test_semisimple_regular_module_decomposes():
    c3 = cyclic(3)
    act = coset_action(c3, trivial_subgroup(c3))
    verdict = indecomposable(act, 2, gens=generating_set(c3))
    # k[C3] over GF(2) = k x GF(4): decomposable, but the GF(4) factor
    # needs no field extension to see the splitting
    assert verdict.status == "DECOMPOSABLE"
    assert verdict.witness is not None


def test_radical_quotient_certified(qd2, p2):
    act = coset_action(qd2, p2)
    ea = endo_algebra(act, 2)
    rad = algebra_radical(ea.abstract)
    quo, _ = quotient_algebra(ea.abstract, rad)
    assert quo.dim == ea.dim - rad.dim
    assert algebra_radical(quo).dim == 0


def test_decomposable_with_idempotent_witness(qd2, p2):
    act = coset_action(qd2, p2)
    verdict = indecomposable(act, 2)
    assert verdict.status == "DECOMPOSABLE"
    ea = endo_algebra(act, 2)
    count, nontrivial = exhaustive_idempotent_scan(ea)
    assert count == 4 and nontrivial


def test_brauer_quotient_matches_shortcut(qd2, p2):
    act = coset_action(qd2, p2)
    for q in all_subgroups(p2):
        bq = brauer_quotient_definitional(act, q, 2)
        assert bq.matches_fixed_point_shortcut


def test_lemma_2_2_trivial_and_full(qd2, p2):
    act = coset_action(qd2, p2)
    triv = trivial_subgroup(qd2)
    assert check_lemma_2_2(qd2, qd2, triv,
                           coset_action(qd2, qd2))["ok"]
    assert check_lemma_2_2(qd2, p2, triv, act)["ok"]


def test_verify_scott_p_power_index():
    c4 = cyclic(4)
    c2 = c4.subgroup(generators=[Perm((2, 3, 0, 1))])
    res = verify_scott(c4, c2, 2)
    assert res["ok"] and res["dim"] == 2


def test_mackey_sizes(qd2, p2):
    orb, dc = mackey_orbit_sizes(qd2, p2, p2)
    assert orb == dc
    assert sum(orb) == 3
