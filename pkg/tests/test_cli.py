import json
import subprocess
import sys

import pytest

from sdot_lab.cli import EXIT_ERROR, EXIT_FALSE, EXIT_OK, run_command


def run(capsys, *argv):
    code = run_command(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, capsys, name, *gen_args):
    code, out, _ = run(capsys, "gen", *gen_args)
    assert code == EXIT_OK
    path = tmp_path / name
    path.write_text(out)
    return str(path)


def test_gen_w2_dcat(capsys):
    code, out, _ = run(capsys, "gen", "--kind", "W", "--n", "2", "--format", "dcat")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["schema"] == "dcat/v1" and len(doc["sq"]) == 15


def test_gen_default_format_is_dcat(capsys):
    _, out, _ = run(capsys, "gen", "--kind", "W", "--n", "4")
    assert json.loads(out)["schema"] == "dcat/v1"


def test_triangulations(capsys):
    code, out, _ = run(capsys, "triangulations", "--n", "4")
    docs = json.loads(out)
    assert code == EXIT_OK and len(docs) == 5 and all(d["schema"] == "pdec/v1" for d in docs)


def test_check_exit_codes(tmp_path, capsys):
    simplex = write(tmp_path, capsys, "d3.json", "--kind", "simplex", "--n", "3", "--depth", "3")
    code, out, _ = run(capsys, "check", "--property", "segal", "--up-to", "3", simplex)
    assert code == EXIT_OK and json.loads(out)["verdict"] is True
    dp = write(tmp_path, capsys, "dp.json", "--kind", "delta-p", "--n", "3", "--diagonal", "1", "3", "--depth", "2")
    code, out, _ = run(capsys, "check", "--property", "segal", dp)
    assert code == EXIT_FALSE and json.loads(out)["witnesses"]


def test_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": "tss/v1", "bogus": 1}')
    code, _, err = run(capsys, "check", "--property", "segal", str(bad))
    assert code == EXIT_ERROR and "bogus" in err
    code, _, _ = run(capsys, "check", "--property", "segal", str(tmp_path / "missing.json"))
    assert code == EXIT_ERROR
    code, _, _ = run(capsys, "gen", "--kind", "nope")
    assert code == EXIT_ERROR


def test_wrong_document_kind(tmp_path, capsys):
    w2 = write(tmp_path, capsys, "w2.json", "--kind", "W", "--n", "2")
    code, _, _ = run(capsys, "check", "--property", "segal", w2)
    assert code == EXIT_ERROR


def test_double_and_presheaf_verbs(tmp_path, capsys):
    w2 = write(tmp_path, capsys, "w2.json", "--kind", "W", "--n", "2")
    assert run(capsys, "dcheck", "--property", "valid", w2)[0] == EXIT_OK
    assert run(capsys, "dcheck", "--property", "augmented", w2)[0] == EXIT_OK
    box = write(tmp_path, capsys, "box.json", "--kind", "box", "--q", "1", "--r", "1")
    assert run(capsys, "dcheck", "--property", "augmented", box)[0] == EXIT_FALSE
    code, out, _ = run(capsys, "nerve", "--depth", "2", w2)
    assert code == EXIT_OK
    nerve = tmp_path / "nerve.json"
    nerve.write_text(out)
    assert run(capsys, "pcheck", "--property", "double_segal", str(nerve))[0] == EXIT_OK
    code, out, _ = run(capsys, "sdot", "--up-to", "2", w2)
    assert code == EXIT_OK and json.loads(out)["schema"] == "tss/v1"
    code, out, _ = run(capsys, "sdot", "--up-to", "2", str(nerve))
    assert code == EXIT_OK


def test_path_and_roundtrip(tmp_path, capsys):
    d2 = write(tmp_path, capsys, "d2.json", "--kind", "simplex", "--n", "2", "--depth", "5")
    code, out, _ = run(capsys, "path", "--depth", "2", d2)
    assert code == EXIT_OK and json.loads(out)["schema"] == "paug/v1"
    code, out, err = run(capsys, "--verbose", "roundtrip", "--up-to", "2", d2)
    assert code == EXIT_OK and json.loads(out)["verdict"] is True and "unit" in err


def test_seeded_generation_is_deterministic(capsys):
    a = run(capsys, "gen", "--kind", "random-poset", "--size", "4", "--seed", "7")[1]
    b = run(capsys, "gen", "--kind", "random-poset", "--size", "4", "--seed", "7")[1]
    assert a == b


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "sdot_lab.cli", "triangulations", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and len(json.loads(proc.stdout)) == 2
