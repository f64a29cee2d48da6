import json

import pytest

from ratcert.cli import main


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_far_combination_exact_output(tmp_path, capsys):
    inst = write(tmp_path, "i.json", {"kind": "far", "A": [["3"]], "b": ["1"]})
    code, out, _ = run(capsys, ["far", inst])
    assert code == 1
    assert out == '{"variant":"combination","q":["1/3"]}\n'


def test_far_separation_exit_zero(tmp_path, capsys):
    inst = write(tmp_path, "i.json", {"kind": "far", "A": [["1"]], "b": ["-1"]})
    code, out, _ = run(capsys, ["far", inst])
    assert code == 0
    assert out == '{"variant":"separation","xi":["1"]}\n'


def test_certificate_round_trip_through_verify(tmp_path, capsys):
    inst = write(tmp_path, "i.json", {"kind": "far", "A": [["1", "1"], ["0", "1"]], "b": ["0", "1"]})
    cert = str(tmp_path / "c.json")
    code, _, _ = run(capsys, ["far", inst, "-o", cert])
    assert code == 0
    code, out, _ = run(capsys, ["verify", inst, cert])
    assert code == 0
    assert out == '{"verdict":"accept"}\n'


def test_verify_rejects_hash_mismatch(tmp_path, capsys):
    inst = write(tmp_path, "i.json", {"kind": "far", "A": [["3"]], "b": ["1"]})
    cert = str(tmp_path / "c.json")
    run(capsys, ["far", inst, "-o", cert])
    other = write(tmp_path, "j.json", {"kind": "far", "A": [["3"]], "b": ["2"]})
    code, out, _ = run(capsys, ["verify", other, cert])
    assert code == 1
    assert json.loads(out)["verdict"] == "reject"


def test_verify_rejects_tampered_certificate(tmp_path, capsys):
    inst = write(tmp_path, "i.json", {"kind": "far", "A": [["3"]], "b": ["1"]})
    bad = write(tmp_path, "c.json", {"variant": "combination", "q": ["1"]})
    code, out, _ = run(capsys, ["verify", inst, bad])
    assert code == 1
    assert json.loads(out)["verdict"] == "reject"


def test_verify_rejects_cross_kind(tmp_path, capsys):
    inst = write(tmp_path, "i.json", {"kind": "stiemke", "A": [["1", "-1"]]})
    cert = write(tmp_path, "c.json", {"variant": "separation", "xi": ["1", "0"]})
    code, out, _ = run(capsys, ["verify", inst, cert])
    assert code == 1
    assert "does not apply" in json.loads(out)["reason"]


def test_stability_byte_identical_certificates(tmp_path, capsys):
    inst = write(tmp_path, "i.json", {"kind": "stiemke", "A": [["1", "-1"]]})
    first, second = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    code1, out1, _ = run(capsys, ["stiemke", inst, "-o", first])
    code2, out2, _ = run(capsys, ["stiemke", inst, "-o", second])
    assert (code1, out1) == (code2, out2)
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_game_solve_pennies(tmp_path, capsys):
    inst = write(tmp_path, "g.json", {"kind": "game", "A": [["1", "-1"], ["-1", "1"]]})
    code, out, _ = run(capsys, ["game", "solve", inst])
    assert code == 0
    assert out == '{"value":"0","p":["1/2","1/2"],"q":["1/2","1/2"]}\n'


def test_game_gap_and_unique(tmp_path, capsys):
    inst = write(tmp_path, "g.json", {"kind": "game", "A": [["2", "1"], ["0", "3"]]})
    code, out, _ = run(capsys, ["game", "gap", inst])
    assert code == 0 and out == '{"lower":"3/2","upper":"3/2"}\n'
    code, out, _ = run(capsys, ["game", "unique", inst])
    assert code == 0 and json.loads(out)["variant"] == "unique"
    zero = write(tmp_path, "z.json", {"kind": "game", "A": [["0", "0"], ["0", "0"]]})
    code, out, _ = run(capsys, ["game", "unique", zero])
    assert code == 1 and json.loads(out)["variant"] == "multiple"


def test_lp_solve_and_recover(tmp_path, capsys):
    inst = write(
        tmp_path, "l.json", {"kind": "lp", "A": [["1", "0"], ["0", "1"]], "b": ["1", "1"], "c": ["1", "1"]}
    )
    code, out, _ = run(capsys, ["lp", "solve", inst])
    assert code == 0
    assert out == '{"variant":"optimal","x":["1","1"],"u":["1","1"],"value":"2"}\n'
    dual = write(tmp_path, "d.json", {"u": ["1", "1"]})
    code, out, _ = run(capsys, ["lp", "recover", inst, dual])
    assert code == 0
    assert out == '{"x":["1","1"],"value":"2"}\n'
    bad_dual = write(tmp_path, "d0.json", {"u": ["0", "0"]})
    code, out, err = run(capsys, ["lp", "recover", inst, bad_dual])
    assert code == 3 and out == "" and "not dual optimal" in err


def test_lp_infeasible_and_unbounded_exit_one(tmp_path, capsys):
    inst = write(tmp_path, "l.json", {"kind": "lp", "A": [["1"]], "b": ["-1"], "c": ["1"]})
    code, out, _ = run(capsys, ["lp", "solve", inst])
    assert code == 1 and json.loads(out)["variant"] == "infeasible"
    inst = write(
        tmp_path, "u.json", {"kind": "lp", "A": [["1", "-1"]], "b": ["0"], "c": ["-1", "-1"]}
    )
    code, out, _ = run(capsys, ["lp", "solve", inst])
    assert code == 1 and json.loads(out)["variant"] == "unbounded"


def test_market_commands(tmp_path, capsys):
    inst = write(
        tmp_path,
        "m.json",
        {"kind": "market", "assets": 1, "states": 2, "A": [["1", "-1"]], "claim": ["1", "0"]},
    )
    code, out, _ = run(capsys, ["arbitrage", inst])
    assert code == 1
    assert out == '{"variant":"no_arbitrage","measure":["1/2","1/2"]}\n'
    code, out, _ = run(capsys, ["price", inst])
    assert code == 0
    assert out == '{"price":"1/2","strategy":["1/2"],"measure":["1/2","1/2"]}\n'
    code, out, _ = run(capsys, ["bounds", inst])
    assert code == 0 and out == '{"lower":"1/2","upper":"1/2"}\n'


def test_arbitrage_present_paths(tmp_path, capsys):
    inst = write(
        tmp_path,
        "m.json",
        {"kind": "market", "assets": 1, "states": 2, "A": [["1", "2"]], "claim": ["1", "0"]},
    )
    code, out, _ = run(capsys, ["arbitrage", inst])
    assert code == 0
    assert out == '{"variant":"arbitrage","strategy":["1"]}\n'
    code, out, err = run(capsys, ["price", inst])
    assert code == 3 and out == "" and "arbitrage" in err


def test_arbitrage_certificate_verifies(tmp_path, capsys):
    inst = write(
        tmp_path, "m.json", {"kind": "market", "assets": 1, "states": 2, "A": [["1", "-1"]]}
    )
    cert = str(tmp_path / "c.json")
    run(capsys, ["arbitrage", inst, "-o", cert])
    code, out, _ = run(capsys, ["verify", inst, cert])
    assert code == 0 and out == '{"verdict":"accept"}\n'


def test_malformed_and_missing_files_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("not json", encoding="utf-8")
    code, out, err = run(capsys, ["far", str(bad)])
    assert code == 2 and out == "" and err
    code, out, err = run(capsys, ["far", str(tmp_path / "missing.json")])
    assert code == 2
    inst = write(tmp_path, "i.json", {"kind": "far", "A": [["1"]], "b": ["1", "2"]})
    code, _, err = run(capsys, ["far", inst])
    assert code == 2 and "b length" in err


def test_column_cap_exit_three(tmp_path, capsys):
    inst = write(tmp_path, "w.json", {"kind": "stiemke", "A": [["1"] * 21]})
    code, out, err = run(capsys, ["stiemke", inst])
    assert code == 3 and out == "" and "capped" in err


def test_usage_errors_exit_two(capsys):
    assert main(["nonsense"]) == 2
    assert main([]) == 2
    assert main(["lp"]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "far" in out and "verify" in out
