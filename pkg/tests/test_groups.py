"""Generic finite-group machinery."""

import pytest

from qdpark.groups import (FiniteGroup, Perm, all_subgroups, centralizer,
                           conjugacy_classes, element_order, generating_set,
                           is_normal, left_coset_reps, normalizer, p_core,
                           p_length, p_part, p_prime_core, quotient_group,
                           set_product, sylow_p)


@pytest.fixture(scope="module")
def s4():
    return FiniteGroup(generators=[Perm((1, 0, 2, 3)), Perm((1, 2, 3, 0))],
                       name="S4")


def test_perm_algebra():
    a = Perm((1, 2, 0))
    assert a * a.inverse() == a.identity()
    assert [list(c) for c in a.cycles()] == [[0, 1, 2]]
    assert Perm((0, 2, 1)).fixed() == [0]
    assert (a * a * a).is_identity()


def test_closure_and_order(s4):
    assert s4.order == 24
    assert element_order(Perm((1, 2, 3, 0))) == 4


def test_coset_partition(s4):
    h = s4.subgroup(generators=[Perm((1, 2, 0, 3))])
    reps = left_coset_reps(s4, h)
    assert len(reps) * h.order == s4.order


def test_sylow_and_cores(s4):
    p2 = sylow_p(s4, 2)
    assert p2.order == 8
    assert p_core(s4, 2).order == 4  # the Klein four-group V4
    assert p_prime_core(s4, 2).order == 1
    assert p_length(s4, 2) == 2
    assert p_part(48, 2) == 16


def test_normality_and_quotient(s4):
    v4 = p_core(s4, 2)
    assert is_normal(s4, v4.elements)
    q = quotient_group(s4, v4)
    assert q.order == 6


def test_centralizer_normalizer(s4):
    transposition = Perm((1, 0, 2, 3))
    c = centralizer(s4, [transposition])
    assert c.order == 4
    h = s4.subgroup(generators=[transposition])
    assert normalizer(s4, h.elements).order == 4


def test_conjugacy_classes(s4):
    sizes = sorted(len(c) for c in conjugacy_classes(s4))
    assert sizes == [1, 3, 6, 6, 8]


def test_all_subgroups_counts(s4):
    assert len(all_subgroups(s4)) == 30
    d8 = sylow_p(s4, 2)
    assert len(all_subgroups(d8)) == 10


def test_set_product_and_generating_set(s4):
    v4 = p_core(s4, 2)
    prod = set_product(v4.elements, v4.elements)
    assert prod == v4.elements
    gens = generating_set(s4)
    assert s4.subgroup(generators=gens).order == 24
