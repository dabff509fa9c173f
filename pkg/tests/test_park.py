"""The wreath product P wr S_n and the embedding iota."""

import pytest

from qdpark.groups import Perm, generating_set
from qdpark.park import ParkGroup, embedding_for_model, qd_embedding
from qdpark.qd import build_qd, sylow_subgroup, t_element, v_translation


@pytest.fixture(scope="module")
def emb2():
    return qd_embedding(2)


def test_wreath_product_law(emb2):
    park = emb2.G
    xs = [emb2.iota(m) for m in list(emb2.M.sorted_elements())[:6]]
    for x in xs:
        for y in xs:
            for z in xs:
                assert (x * y) * z == x * (y * z)
        assert x * x.inverse() == park.identity


def test_park_order(emb2):
    park = emb2.G
    assert park.order == 8 ** 3 * 6 == 3072
    g = park.enumerate()
    assert g.order == 3072


def test_iota_homomorphism_exhaustive_p2(emb2):
    elems = emb2.M.sorted_elements()
    images = set()
    for x in elems:
        images.add(emb2.iota(x))
        for y in elems:
            assert emb2.iota(x * y) == emb2.iota(x) * emb2.iota(y)
    assert len(images) == 24  # injective


def test_sigma_fixes_initial_points(emb2):
    for u in emb2.P.elements:
        sig = emb2.sigma(u)
        assert sig(0) == 0  # p - 1 = 1 fixed position


def test_iota_of_t_in_base(emb2):
    w = emb2.iota(t_element(2))
    assert w.top.is_identity()
    assert w.in_base_group()


def test_wreath_from_bijection_matches_iota(emb2):
    for m in emb2.M.sorted_elements():
        f = emb2.iota_as_bijection(m)
        assert emb2.wreath_from_bijection(f) == emb2.iota(m)


def test_embedding_for_model_agrees_with_matrix_resolver():
    qd = build_qd(2)
    psub = sylow_subgroup(qd, 2)
    generic = embedding_for_model(qd, psub)
    assert generic.n == 3
    for x in qd.elements:
        for y in qd.elements:
            assert generic.iota(x * y) == generic.iota(x) * generic.iota(y)
    assert len({generic.iota(x) for x in qd.elements}) == 24


def test_base_group_membership():
    park = ParkGroup(build_qd(2).subgroup(
        generators=[v_translation(2, 1, 0)]), 2)
    w = park.wrap([t_element(2), t_element(2).identity()], Perm((1, 0)))
    assert not w.in_base_group()
    assert (w * w).in_base_group()
