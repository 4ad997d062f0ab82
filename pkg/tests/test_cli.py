"""Command-line interface: ledger semantics, report emission,
determinism, config-file defaults, and exit codes."""

import json
import subprocess
import sys

import pytest

from modrep.cli import (Ledger, _load_config, _meataxe_corpus, build_parser,
                        main)


def _strip_volatile(doc):
    doc = json.loads(json.dumps(doc))
    doc.pop("generated_at", None)
    for c in doc.get("claims", []):
        c.pop("runtime_ms", None)
    return doc


def test_ledger_pass_fail_and_duplicates():
    led = Ledger(seed=0)
    led.run("a", "s", {}, lambda: {"x": 1})
    led.run("b", "s", {}, lambda: (_ for _ in ()).throw(AssertionError("no")))
    assert [c.verdict for c in led.claims] == ["pass", "fail"]
    assert led.claims[1].witness == {"error": "no"}
    assert not led.ok
    with pytest.raises(ValueError):
        led.run("a", "s", {}, lambda: None)


def test_ledger_reported_verdict():
    led = Ledger(seed=0)
    led.run("r", "s", {}, lambda: {"observed": 42}, reported=True)
    assert led.claims[0].verdict == "reported"
    assert led.ok


def test_parser_defaults():
    args = build_parser().parse_args(["count-jh"])
    assert args.seed == 0 and args.n_max == 7 and args.q == 5
    assert args.format == "both" and args.blocks == "1,1,1"


def test_count_jh_reports(tmp_path):
    rc = main(["count-jh", "--n-max", "5", "--out", str(tmp_path)])
    assert rc == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    assert doc["schema"] == 1 and doc["all_pass"]
    ids = [c["claim_id"] for c in doc["claims"]]
    assert ids == sorted(ids)
    assert "count.sweep" in ids and "count.collision-witness" in ids
    md = (tmp_path / "report.md").read_text()
    assert "count.sweep" in md and "all pass: True" in md


def test_cut_verify_with_oracle(tmp_path):
    rc = main(["cut-verify", "--blocks", "1,1,2", "--out", str(tmp_path),
               "--format", "json"])
    assert rc == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    ids = [c["claim_id"] for c in doc["claims"]]
    assert ids == ["cut.eigencharacter-oracle", "cut.single"]
    assert not (tmp_path / "report.md").exists()


def test_cut_verify_skips_oracle_when_large(tmp_path):
    rc = main(["cut-verify", "--blocks", "3,3", "--out", str(tmp_path),
               "--format", "json"])
    assert rc == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    assert [c["claim_id"] for c in doc["claims"]] == ["cut.single"]


def test_h1_command(tmp_path):
    rc = main(["h1", "--p", "3", "--out", str(tmp_path), "--format", "json"])
    assert rc == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    ids = [c["claim_id"] for c in doc["claims"]]
    assert ids == ["h1.multiplicity-one", "h1.negative-control",
                   "h1.vanishing"]
    vanish = next(c for c in doc["claims"] if c["claim_id"] == "h1.vanishing")
    assert vanish["witness"]["characters"] == 4


def test_meataxe_command(tmp_path):
    rc = main(["meataxe", "--out", str(tmp_path), "--format", "json"])
    assert rc == 0
    doc = json.loads((tmp_path / "report.json").read_text())
    (claim,) = doc["claims"]
    assert claim["witness"]["modules_checked"] == len(_meataxe_corpus())


def test_meataxe_corpus_contents():
    corpus = _meataxe_corpus()
    names = [n for n, _ in corpus]
    assert "jordan2/GF(2)" in names and "std B3(F3)" in names
    for _, rep in corpus:
        assert rep.dim <= 9


def test_determinism_modulo_timestamp_and_runtime(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(["toycase", "--q", "3", "--out", str(a),
                 "--format", "json"]) == 0
    assert main(["toycase", "--q", "3", "--out", str(b),
                 "--format", "json"]) == 0
    da = _strip_volatile(json.loads((a / "report.json").read_text()))
    db = _strip_volatile(json.loads((b / "report.json").read_text()))
    assert da == db


def test_config_file_defaults_and_override(tmp_path):
    cfg = tmp_path / "modrep.cfg"
    cfg.write_text("# comment\nn-max = 4\nformat = json\nseed = 7\n"
                   "bogus = ignored\n")
    assert _load_config(cfg) == {"n_max": "4", "format": "json", "seed": "7"}
    out = tmp_path / "out"
    rc = main(["count-jh", "--config", str(cfg), "--out", str(out)])
    assert rc == 0
    doc = json.loads((out / "report.json").read_text())
    assert doc["seed"] == 7
    sweep = next(c for c in doc["claims"] if c["claim_id"] == "count.sweep")
    assert sweep["parameters"]["n_max"] == 4
    assert not (out / "report.md").exists()
    # explicit flag beats the config default
    out2 = tmp_path / "out2"
    rc = main(["count-jh", "--config", str(cfg), "--seed", "9",
               "--out", str(out2)])
    assert rc == 0
    doc2 = json.loads((out2 / "report.json").read_text())
    assert doc2["seed"] == 9


def test_failure_exit_code(tmp_path, monkeypatch):
    # force one claim to fail and confirm exit code 1 plus a witness
    import modrep.cli as cli

    def bad(ledger, args):
        ledger.run("forced.fail", "always fails", {},
                   lambda: (_ for _ in ()).throw(AssertionError("boom")))

    monkeypatch.setitem(cli.COMMANDS, "count-jh", bad)
    rc = main(["count-jh", "--out", str(tmp_path), "--format", "json"])
    assert rc == 1
    doc = json.loads((tmp_path / "report.json").read_text())
    assert not doc["all_pass"]
    assert doc["claims"][0]["witness"] == {"error": "boom"}


def test_usage_error_exit_code(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "modrep.cli", "no-such-command"],
        capture_output=True, cwd=str(tmp_path))
    assert proc.returncode == 2


def test_entry_point_runs(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "modrep.cli", "cut-verify",
         "--blocks", "2,2", "--out", str(tmp_path), "--format", "json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "cut.single" in proc.stdout
