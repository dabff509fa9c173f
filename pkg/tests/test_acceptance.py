"""Acceptance gate: one test (one pass/fail line under pytest -v) per
criterion.  All tolerances are exact; every assertion is on computed
values, never on re-stated expectations alone.
"""

import pytest

from qdpark import checks
from qdpark.reports import run_check

RESULTS = {}


def _run(name, check_id, params, thunk):
    rep = run_check(check_id, params, thunk)
    RESULTS[name] = rep
    print(f"ACCEPTANCE {name}: {rep.status} ({rep.millis} ms)")
    assert rep.status == "PASS", rep.witness
    return rep


def test_criterion_1_direct_p2_end_to_end():
    """|M|=24, |P|=8, n=3, |G|=3072, dim 128; Scott module absolutely
    indecomposable; Brauer sweep indecomposable-or-zero everywhere."""
    rep = _run("1-direct-p2", "thm-main-direct", {"p": 2},
               lambda: checks.theorem_main_direct(2))
    w = rep.witness
    assert (w["model_order"], w["P_order"], w["n_cosets"]) == (24, 8, 3)
    assert (w["G_order"], w["module_dim"]) == (3072, 128)
    assert w["scott_verdict"] == "INDECOMPOSABLE_ABS"
    assert all(status in ("INDECOMPOSABLE_ABS", "ZERO")
               for _, status in w["sweep"])
    assert rep.millis < 5 * 60 * 1000


def test_criterion_2_side_theorem_s4():
    """Hypothesis triple (24 = 3*2^3, 2-length 2, trivial odd core), index
    |G : iota(M)| = 128 = 2^7, then the same direct sweep passes."""
    rep = _run("2-side-s4", "thm-side", {"group": "s4"},
               lambda: checks.theorem_side("s4"))
    w = rep.witness
    assert w["order"] == 24
    assert w["two_length"] == 2 and w["O_2'"] == 1
    assert w["index"] == 128 == 2 ** 7
    assert rep.millis < 5 * 60 * 1000


def test_criterion_3_sigma_alpha_cycle_shape():
    """sigma_alpha fixes positions 1..p-1 and is p-1 disjoint p-cycles,
    for p in {3, 5, 7}; under one second per prime."""
    for p in (3, 5, 7):
        rep = _run(f"3-sigma-alpha-p{p}", "lemma-4.2", {"p": p},
                   lambda p=p: checks.lemma_check("4.2", p))
        assert rep.millis < 1000


def test_criterion_4_base_intersection():
    """Literal set equality B intersect iota(P) = iota(O_p(F)) and the V
    base-coordinate formula, p in {2, 3}."""
    for p in (2, 3):
        _run(f"4-base-intersection-p{p}", "lemma-3.2", {"p": p},
             lambda p=p: checks.lemma_check("3.2", p))


def test_criterion_5_g_set_suite_p2():
    """Three-part G-set check (transitivity, stabilizer, T_G(Q,H) =
    N_G(Q)H) for every subgroup of iota(P) at p = 2."""
    rep = _run("5-g-set-suite", "lemma-2.2", {"p": 2},
               lambda: checks.lemma_check("2.2", 2))
    assert rep.witness["subgroups_checked"] == 10


def test_criterion_6_structural_p3_p5():
    """Structural mode at p = 3 and p = 5: conditions (i)-(iii) for every
    fully normalized class representative, exact orders."""
    for p in (3, 5):
        rep = _run(f"6-structural-p{p}", "thm-main-structural", {"p": p},
                   lambda p=p: checks.theorem_main_structural(p))
        for entry in rep.witness["entries"]:
            assert entry["iii_sylow_condition"]
        assert rep.millis < 30 * 60 * 1000


def test_criterion_7_oracle_crosschecks():
    """Structural-vs-brute centralizers, definitional-vs-shortcut Brauer
    quotients, iota coordinates vs bijections, radical verdicts vs
    exhaustive idempotent scans."""
    for suite in ("centralizer", "brauer", "iota", "radical"):
        _run(f"7-crosscheck-{suite}", f"crosscheck-{suite}", {},
             lambda s=suite: checks.crosscheck_suite(s))


def test_criterion_8_identity_suites():
    """alpha-beta^s transport identities (p in {3,5,7,11}), f-iteration
    closed form, obstruction-matrix criterion (p in {3,5})."""
    _run("8-identities", "crosscheck-identities", {},
         lambda: checks.crosscheck_suite("identities"))


def test_criterion_9_property_suites():
    """Lagrange/partition/orbit invariants, the 50-pair p-power-index
    indecomposability property, Mackey double-coset sizes."""
    rep = _run("9-properties", "crosscheck-properties", {},
               lambda: checks.crosscheck_suite("properties"))
    assert rep.witness["green_pairs"] == 100
