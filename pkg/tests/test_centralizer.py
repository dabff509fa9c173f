"""Structural centralizer solver in wreath products."""

import pytest

from qdpark.centralizer import (centralizer_wreath, is_p_group_centralizer,
                                structural_theorem_check)
from qdpark.groups import centralizer, generating_set
from qdpark.park import qd_embedding
from qdpark.qd import _lift, alpha, t_element, v_translation


@pytest.fixture(scope="module")
def emb2():
    return qd_embedding(2)


@pytest.fixture(scope="module")
def g2(emb2):
    return emb2.G.enumerate()


def test_empty_generators_full_group(emb2):
    res = centralizer_wreath(emb2.G, [])
    assert res.order == emb2.G.order == 3072


def test_matches_brute_force_on_samples(emb2, g2):
    v_gens = [emb2.iota(v_translation(2, 1, 0)),
              emb2.iota(v_translation(2, 0, 1))]
    cases = [
        [emb2.iota(t_element(2))],
        v_gens,
        [emb2.iota(_lift(2, alpha(2)))],
        [emb2.iota(m) for m in emb2.M.generators],
    ]
    for gens in cases:
        res = centralizer_wreath(emb2.G, gens, materialize=True)
        brute = centralizer(g2, gens)
        assert res.elements == brute.elements


def test_conjugated_subgroup_same_order(emb2, g2):
    v_gens = [emb2.iota(v_translation(2, 1, 0)),
              emb2.iota(v_translation(2, 0, 1))]
    conj = next(x for x in g2.sorted_elements() if not x.in_base_group())
    moved = [conj * w * conj.inverse() for w in v_gens]
    res = centralizer_wreath(emb2.G, moved)
    base = centralizer_wreath(emb2.G, v_gens)
    assert res.order == base.order


def test_p3_reference_orders():
    emb = qd_embedding(3)
    v_gens = [emb.iota(v_translation(3, 1, 0)),
              emb.iota(v_translation(3, 0, 1))]
    assert centralizer_wreath(emb.G, v_gens).order == 3 ** 16
    t_only = centralizer_wreath(emb.G, [emb.iota(t_element(3))])
    assert t_only.order == 4 * 3 ** 20  # Z(P) alone is not enough
    assert not t_only.p_power_of(3)
    q = emb.M.subgroup(generators=[t_element(3), _lift(3, alpha(3))])
    good, res = is_p_group_centralizer(emb.G, q, emb)
    assert good and res.order == 3 ** 10


def test_p_group_predicate(emb2):
    q = emb2.M.subgroup(generators=[v_translation(2, 1, 0),
                                    v_translation(2, 0, 1)])
    good, res = is_p_group_centralizer(emb2.G, q, emb2)
    assert good and res.order == 64


@pytest.mark.parametrize("p", [3])
def test_structural_theorem(p):
    rep = structural_theorem_check(p)
    assert rep["ok"]
    assert rep["assumes_fusion_equality"]
    assert all(e["iii_sylow_condition"] for e in rep["entries"])


def test_sampled_generators_commute(emb2):
    gens = [emb2.iota(t_element(2)), emb2.iota(_lift(2, alpha(2)))]
    res = centralizer_wreath(emb2.G, gens)
    for w in res.generators:
        for s in gens:
            assert w * s == s * w
