import json

import pytest

from chowcalc import checks
from chowcalc.cli import main


def test_suite_passes_completely():
    results = checks.run_suite()
    assert all(r.status == "pass" for r in results), checks.format_text(results)
    assert len(results) == 12


def test_suite_order_is_deterministic():
    a = [r.check_id for r in checks.run_suite()]
    b = [r.check_id for r in checks.run_suite()]
    assert a == b == sorted(a)


def test_subset_selection():
    results = checks.run_suite(("m6-presentation", "looijenga-vanishing"))
    assert [r.check_id for r in results] == ["looijenga-vanishing", "m6-presentation"]


def test_unknown_check_rejected():
    with pytest.raises(checks.UnknownCheckError):
        checks.run_suite(("no-such-check",))


def test_machine_readable_schema():
    results = checks.run_suite(("m6-presentation",))
    payload = json.loads(checks.format_json(results))
    assert isinstance(payload, list) and len(payload) == 1
    entry = payload[0]
    assert set(entry) == {
        "check_id",
        "anchor",
        "status",
        "computed",
        "expected",
        "provenance",
        "millis",
    }
    assert entry["status"] == "pass"
    assert entry["provenance"] in ("literature", "derived-oracle", "direct")
    assert entry["anchor"]


def test_every_check_carries_an_anchor_and_provenance():
    for result in checks.run_suite():
        assert result.anchor.strip()
        assert result.provenance in ("literature", "derived-oracle", "direct")


def test_suite_passes_at_higher_truncation():
    results = checks.run_suite(
        ("grr-constants", "mukai-bookkeeping", "plucker-lemma"),
        checks.SuiteConfig(trunc=5),
    )
    assert all(r.status == "pass" for r in results), checks.format_text(results)


def test_exit_codes():
    results = checks.run_suite()
    assert checks.exit_code(results) == 0
    results[0].status = "fail"
    assert checks.exit_code(results) == 1


# -- CLI ------------------------------------------------------------------------


def test_cli_verify_exit_zero(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "12/12 checks passed" in out


def test_cli_verify_json(capsys):
    assert main(["verify", "--only", "strata-dimensions", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["check_id"] == "strata-dimensions"


def test_cli_verify_unknown_check(capsys):
    assert main(["verify", "--only", "bogus"]) == 2


def test_cli_verify_list(capsys):
    assert main(["verify", "--list"]) == 0
    out = capsys.readouterr().out.split()
    assert "m6-presentation" in out and len(out) == 12


def test_cli_eval(capsys):
    assert main(["eval", "dim(G(4, 10)) + 16"]) == 0
    assert capsys.readouterr().out.strip() == "40"


def test_cli_eval_parse_error(capsys):
    assert main(["eval", "1 + * 2"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_eval_with_defs(tmp_path, capsys):
    defs = tmp_path / "defs.txt"
    defs.write_text("Vdual = dual(V)\n")
    assert main(["eval", "--defs", str(defs), "rank(Vdual)"]) == 0
    assert capsys.readouterr().out.strip() == "5"


def test_cli_config_file(tmp_path, capsys):
    cfg = tmp_path / "chowcalc.cfg"
    cfg.write_text("trunc = 4\nonly = m6-presentation\n")
    assert main(["verify", "--config", str(cfg)]) == 0
    out = capsys.readouterr().out
    assert "m6-presentation" in out and "1/1 checks passed" in out


def test_cli_usage_error_exits_2(capsys):
    assert main(["no-such-subcommand"]) == 2


def test_cli_malformed_config_exits_2(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("this is not a key value line\n")
    assert main(["verify", "--config", str(cfg)]) == 2
    assert "config error" in capsys.readouterr().err


def test_cli_flags_override_config(tmp_path, capsys):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("format = json\nonly = strata-dimensions\n")
    assert main(["verify", "--config", str(cfg), "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("PASS")  # text format despite config
    assert main(["verify", "--config", str(cfg)]) == 0
    json.loads(capsys.readouterr().out)  # config format applies otherwise


def test_cli_repl_batch(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("dim(G(2, 5))\nnf(k1^3, M6)\n"))
    assert main(["repl"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["6", "2304/127 * k1 * k2"]
