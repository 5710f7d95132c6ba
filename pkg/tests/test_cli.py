import json

import pytest

from monid import cli
from monid.decomposition import canonical_form, decompose, max_level
from monid.families import kappa, w_pair
from monid.finite_monoids import builtin
from monid.identities import I11, derive
from monid.words import parse_word as p
from monid.words import render


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_word_depth(capsys):
    assert run(capsys, "word", "depth", "x s x t", "x")[:2] == (0, "1")
    assert run(capsys, "word", "depth", "x y x y", "x")[:2] == (0, "inf")


def test_word_ops_match_library(capsys):
    w = "x x1 x x0 x1"
    code, out, _ = run(capsys, "word", "decompose", w)
    assert out.splitlines() == [decompose(p(w), k).render() for k in range(max_level(p(w)) + 1)]
    assert run(capsys, "word", "decompose", w, "1")[1] == "[λ](x)[x1](x)[x0](x1)"
    assert run(capsys, "word", "dividers", "x s x t", "0")[1] == "λ s t"
    assert run(capsys, "word", "max-level", "x y x y")[1] == "0"
    assert run(capsys, "word", "h", "x1 x2 x0 x1", "x1", "2", "0")[1] == "x0"
    assert run(capsys, "word", "ini2", "x x x y z y x")[1] == "x x y z y"
    assert run(capsys, "word", "inisq", "x x x y z y x")[1] == "x x y y z z"
    assert run(capsys, "word", "form", w, "x")[1] == canonical_form(p(w), "x").render()
    assert run(capsys, "word", "classify", "x s x t")[1].splitlines() == ["con: s t x", "sim: s t", "mul: x"]


def test_word_form_without_finite_depth_fails(capsys):
    code, _, err = run(capsys, "word", "form", "x y x y", "x")
    assert code == 1 and "infinite depth" in err


def test_id_commands(capsys):
    assert run(capsys, "id", "check", "--variety", "lrb", "x y = x y x")[:2] == (0, "true")
    assert run(capsys, "id", "check", "--variety", "f:1", "x y = y x")[:2] == (1, "false")
    assert run(capsys, "id", "critical", "x y t x y = x y t y x")[1] == "2x 2y"
    assert run(capsys, "id", "wb", "--level", "0", "x y x y = x x y y")[:2] == (0, "true")


def test_fam_commands(capsys):
    assert run(capsys, "fam", "gen", "kappa", "1")[1] == str(kappa(1))
    assert run(capsys, "fam", "gen", "w_pair", "1", "12", "12")[1] == str(w_pair(1))
    assert run(capsys, "fam", "gen", "b", "2", "1")[1] == "x1 x2 x0 x1"
    assert "kappa k" in run(capsys, "fam", "list")[1].splitlines()


def test_monoid_commands(capsys):
    assert run(capsys, "monoid", "check", "p21", "x y = y x")[:2] == (1, "x=a y=b")
    assert run(capsys, "monoid", "check", "p21", "x s x t = x s x t x")[:2] == (0, "holds")
    code, data = run_json(capsys, "monoid", "show", "b21")
    assert code == 0 and data == builtin("b21").to_json()


def test_monoid_from_file(capsys, tmp_path):
    path = tmp_path / "lz.json"
    path.write_text(json.dumps(builtin("lz2_1").to_json()))
    assert run(capsys, "monoid", "check", str(path), "x y = x y x")[0] == 0


def test_prove_and_replay(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    code, out, _ = run(capsys, "prove", "x s x t x x = x s x t", "--axioms", "I11", "--cert", str(cert))
    assert code == 0
    expected = derive([I11], p("x s x t x x"), p("x s x t"))
    assert out == expected.render()
    code, out, _ = run(capsys, "replay", str(cert))
    assert code == 0 and out.startswith("verified: 2 steps")
    data = json.loads(cert.read_text())
    data["chain"][1] = "x y"
    cert.write_text(json.dumps(data))
    assert run(capsys, "replay", str(cert))[0] == 1


def test_prove_exhaustion_exit_code(capsys):
    code, out, _ = run(capsys, "prove", "x y = y x", "--axioms", "I11", "--max-steps", "2")
    assert code == 2 and "budget" in out


def test_nfb_check(capsys):
    code, data = run_json(capsys, "nfb", "check", "--axioms", "kappa1", "--pattern", "x y t x y",
                          "--samples", "300", "--seed", "42")
    assert code == 0 and data["violations"] == [] and data["steps"] >= 300
    assert data["axioms"][0] == "I11"
    code, out, _ = run(capsys, "nfb", "check", "--axioms", "XYTXY", "--pattern", "x y t x y", "--samples", "300")
    assert code == 1 and out.startswith("violation")


def test_paperlab_run(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "paperlab", "run", "monoid", "--report", str(report))
    assert code == 0 and "monoid:" in out
    data = json.loads(report.read_text())
    assert data["suite"] == "monoid" and data["totals"]["fail"] == 0


@pytest.mark.parametrize("argv", [
    ["word", "depth", "x Y", "x"],
    ["word", "depth", "x y", "z"],
    ["word", "dividers", "x y", "q"],
    ["id", "check", "--variety", "o9", "x = x"],
    ["id", "critical", "x = x x"],
    ["fam", "gen", "kappa", "0"],
    ["monoid", "check", "nope", "x = x"],
    ["prove", "x = x", "--axioms", "bogus9"],
    ["paperlab", "run", "nope"],
    [],
])
def test_usage_errors_exit_64(capsys, argv):
    assert cli.main(argv) == 64


@pytest.mark.parametrize("argv", [["word"], ["frobnicate"], ["word", "depth", "x", "x", "--bogus"]])
def test_argparse_errors_exit_64(capsys, argv):
    with pytest.raises(SystemExit) as err:
        cli.main(argv)
    assert err.value.code == 64


def test_help_documents_grammar(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["--help"])
    assert err.value.code == 0
    assert "token     := [a-z][a-z0-9]*" in capsys.readouterr().out


def test_json_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, "word", "depth", "x s x t", "x", "--json")
    assert json.loads(out) == {"word": "x s x t", "letter": "x", "depth": "1"}
    code, out, _ = run(capsys, "--json", "word", "ini", "x y x")
    assert json.loads(out) == {"ini": render(p("x y"))}


def test_module_entry_point():
    import subprocess
    import sys

    done = subprocess.run([sys.executable, "-m", "monid", "monoid", "check", "p21", "x y = y x"],
                          capture_output=True, text=True)
    assert done.returncode == 1 and done.stdout.strip() == "x=a y=b"
