"""Report schema invariants and the verify CLI."""

import json

import pytest

from qdpark.cli import run
from qdpark.config import CapExceeded
from qdpark.reports import (FAIL, PASS, SKIPPED_CAP, VerificationReport,
                            run_check, table_hash)


def test_fail_requires_witness():
    with pytest.raises(ValueError):
        VerificationReport(check="x", params={}, status=FAIL)


def test_skipped_cap_names_cap():
    with pytest.raises(ValueError):
        VerificationReport(check="x", params={}, status=SKIPPED_CAP,
                           witness={"reason": "no cap key"})


def test_json_schema_keys():
    rep = VerificationReport(check="lemma-4.1", params={"p": 3}, status=PASS,
                             witness={"n": 1}, millis=7)
    payload = json.loads(rep.to_json())
    assert set(payload) == {"check", "params", "status", "witness", "millis"}


def test_run_check_maps_caps():
    def boom():
        raise CapExceeded("big enumeration", "closure_cap", 10, needed=100)
    rep = run_check("x", {}, boom)
    assert rep.status == SKIPPED_CAP
    assert rep.witness["cap"] == "closure_cap"
    assert rep.witness["needed"] == 100


def test_table_hash_deterministic():
    assert table_hash(["a", "b"]) == table_hash(["a", "b"])
    assert table_hash(["a", "b"]) != table_hash(["b", "a"])


def test_cli_pass(capsys):
    assert run(["lemma", "--id", "4.2", "--p", "3"]) == 0
    out = capsys.readouterr().out.strip().splitlines()[-1]
    payload = json.loads(out)
    assert payload["status"] == "PASS"
    assert payload["check"] == "lemma-4.2"


def test_cli_cap_exit(capsys):
    assert run(["theorem", "--main", "--p", "3", "--mode", "direct"]) == 3
    payload = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert payload["status"] == "SKIPPED-CAP"
    # the refusal quotes the dimension estimate
    assert "5272018014312" in payload["witness"]["computation"]


def test_cli_usage_errors(capsys):
    assert run(["lemma", "--id", "9.9", "--p", "2"]) == 2
    assert run(["theorem", "--side", "--group", "nonsense"]) == 2
    assert run(["theorem", "--main"]) == 2


def test_cli_out_file(tmp_path, capsys):
    out = tmp_path / "report.jsonl"
    assert run(["lemma", "--id", "4.1", "--p", "2",
                "--out", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0])["check"] == "lemma-4.1"


def test_cli_dump_tables(tmp_path, capsys):
    tdir = tmp_path / "tables"
    assert run(["lemma", "--id", "4.2", "--p", "3",
                "--dump-tables", str(tdir)]) == 0
    assert (tdir / "coset_table_p3.txt").exists()
    assert (tdir / "iota_table_p3.txt").exists()
    payload = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert "hashes" in payload


def test_cli_seed_reproducible(capsys):
    assert run(["lemma", "--id", "2.1", "--p", "2", "--seed", "7"]) == 0
    first = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert run(["lemma", "--id", "2.1", "--p", "2", "--seed", "7"]) == 0
    second = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert first["witness"] == second["witness"]
