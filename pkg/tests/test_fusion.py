"""Fusion systems by conjugation morphisms."""

import pytest

from qdpark.fusion import (FusionSystem, classify_subgroups, fusion_equal,
                           hom_set, is_constrained,
                           is_strictly_p_constrained)
from qdpark.groups import all_subgroups, p_core
from qdpark.qd import build_qd, sylow_subgroup, t_element


@pytest.fixture(scope="module")
def qd2():
    return build_qd(2)


@pytest.fixture(scope="module")
def p2(qd2):
    return sylow_subgroup(qd2, 2)


def test_hom_set_contains_inclusion(qd2, p2):
    t = qd2.subgroup(generators=[t_element(2)])
    maps = hom_set(qd2, t.elements, p2.elements)
    ident = [m for m in maps
             if all(a == b for a, b in m.graph)]
    assert len(ident) == 1
    assert all(m.verify() for m in maps)


def test_fusion_equal_reflexive(qd2, p2):
    eq, wit = fusion_equal(qd2, qd2, p2)
    assert eq and wit is None


def test_fusion_differs_from_sylow_alone(qd2, p2):
    # Qd(2) fuses subgroups of P that P itself cannot
    eq, wit = fusion_equal(p2, qd2, p2)
    assert not eq
    assert wit is not None and "Q_order" in wit


def test_classification(qd2, p2):
    fs = FusionSystem(qd2, p2, 2)
    cls = classify_subgroups(fs)
    assert sum(len(c) for c in cls.classes) == len(all_subgroups(p2)) == 10
    assert len(cls.classes) == len(cls.representatives)
    for rep in cls.representatives:
        assert cls.fully_normalized[rep.elements]
    # P itself is a singleton class
    assert any(len(c) == 1 and c[0].order == 8 for c in cls.classes)


def test_constrained_predicates(qd2, p2):
    assert is_strictly_p_constrained(qd2, 2)
    fs = FusionSystem(qd2, p2, 2)
    assert is_constrained(fs)
    assert fs.o_p().elements == p_core(qd2, 2).elements


@pytest.mark.parametrize("p", [3])
def test_classification_qd3(p):
    qd = build_qd(p)
    psub = sylow_subgroup(qd, p)
    fs = FusionSystem(qd, psub, p)
    cls = classify_subgroups(fs)
    assert sum(len(c) for c in cls.classes) == len(all_subgroups(psub))
    assert is_strictly_p_constrained(qd, p)
