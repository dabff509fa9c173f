"""Qd(p), its Sylow subgroup and the explicit coset table."""

import pytest

from qdpark.groups import centralizer
from qdpark.qd import (SL2, QdElement, alpha, beta, build_qd,
                       check_alpha_beta_relation, coset_reps, f_iteration,
                       gamma, in_sylow, lemma_4_3_matrix,
                       lemma_4_3_matrix_display, nu, qd_order,
                       sigma_of_alpha_cycle_check, sylow_subgroup, t_element,
                       v_base_formula_check, v_translation)


def test_sl2_arithmetic():
    p = 5
    a = alpha(p)
    assert a * a.inverse() == a.identity()
    assert gamma(p) * gamma(p) == SL2(p, -1, 0, 0, -1)
    with pytest.raises(ValueError):
        SL2(p, 1, 0, 0, 2)  # determinant 2


def test_qd_element_product_law():
    p = 3
    x = QdElement(p, (1, 2), alpha(p))
    y = QdElement(p, (0, 1), beta(p))
    z = x * y
    assert z.v == ((1 + (0 + 1) % p) % p, (2 + 1) % p)
    assert z.m == alpha(p) * beta(p)
    assert x * x.inverse() == x.identity()


@pytest.mark.parametrize("p", [2, 3])
def test_orders(p):
    g = build_qd(p)
    assert g.order == qd_order(p)
    assert sylow_subgroup(g, p).order == p ** 3


def test_qd2_is_symmetric_group_like():
    g = build_qd(2)
    assert g.order == 24
    assert centralizer(g, g.elements).order == 1  # trivial center, as in S4


def test_t_central_in_sylow():
    for p in (2, 3, 5):
        g = build_qd(p, verify=p < 5)
        psub = sylow_subgroup(g, p)
        t = t_element(p)
        assert all(t * u == u * t for u in psub.elements)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_coset_table_partition(p):
    table = coset_reps(p)
    assert len(table.reps) == p * p - 1
    # pairwise distinct cosets and identity first
    assert table.reps[0] == table.reps[0].identity()
    for j, m in enumerate(table.reps):
        assert table.coset_index(m) == j


@pytest.mark.parametrize("p", [3, 5])
def test_resolve_roundtrip(p):
    table = coset_reps(p)
    g = build_qd(p, verify=p < 5)
    sample = [v_translation(p, 1, 2) * table.reps[-1],
              QdElement(p, (0, 1), gamma(p) * beta(p))]
    for x in sample:
        j, u = table.resolve(x)
        assert in_sylow(u)
        assert table.reps[j] * u == x


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_alpha_beta_relations(p):
    assert all(check_alpha_beta_relation(p, s) for s in range(p))


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_f_iteration(p):
    seq = f_iteration(p)
    assert seq == [pow(s + 1, p - 2, p) for s in range(p - 1)]
    assert len(seq) == p - 1 and seq[-1] == p - 1


@pytest.mark.parametrize("p", [3, 5, 7])
def test_sigma_alpha_cycle_shape(p):
    res = sigma_of_alpha_cycle_check(p)
    assert res["ok"]
    assert res["fixed"] == list(range(p - 1))
    assert len(res["cycles"]) == p - 1


@pytest.mark.parametrize("p", [2, 3])
def test_v_base_formula(p):
    assert v_base_formula_check(p)["ok"]


@pytest.mark.parametrize("p", [3, 5])
def test_obstruction_matrix_criterion(p):
    for r in range(1, p):
        for rp in range(1, p):
            for i in range(p):
                mat = lemma_4_3_matrix(p, r, rp, i)
                assert mat == lemma_4_3_matrix_display(p, r, rp, i)
                in_alpha = mat.a == 1 and mat.d == 1 and mat.c == 0
                assert in_alpha == (r == rp and i == 0)


def test_nu_is_diagonal_inverse_pair():
    p = 7
    for r in range(1, p):
        m = nu(p, r)
        assert (m.a * m.d) % p == 1 and m.b == 0 and m.c == 0
