import io
import subprocess
import sys

import pytest

from cwl_degen.betti import BettiTable, IDEAL, QUOTIENT
from cwl_degen.cli import render_betti_table, run

from conftest import MINORS_TEXT, VERONESE_TEXT

INITIAL_TEXT = "ring 101 [a,b,c,d,e,f] grevlex\nI = b^2, b*c, c^2, c*d, c*e, e^2\n"


@pytest.fixture
def files(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    out = {}
    for name, text in [("veronese", VERONESE_TEXT), ("minors", MINORS_TEXT), ("initial", INITIAL_TEXT),
                       ("empty", "ring 101 [x,y] grevlex\nI = 0\n"),
                       ("lex", "ring 101 [x,y] lex\nI = x^2 - y^2\n"),
                       ("bad", "ring 101 [x,y] grevlex\nI = x + q\n")]:
        p = tmp_path / (name + ".ideal")
        p.write_text(text)
        out[name] = str(p)
    return out


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_render_table_layout():
    t = BettiTable(QUOTIENT, {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3})
    lines = render_betti_table(t).splitlines()
    assert lines[1:] == ["0: 1 . . .", "1: . 6 8 3"]
    t = BettiTable(QUOTIENT, {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 4, (4, 5): 1, (2, 4): 1, (3, 5): 1})
    assert render_betti_table(t).splitlines()[-1] == "2: . . 1 1 ."
    assert render_betti_table(BettiTable(IDEAL, {})) == "(zero ideal)"
    assert render_betti_table(t, "records").splitlines()[:2] == ["beta 0 0 1", "beta 1 2 6"]


def test_betti_command(files):
    code, out, _ = cli("betti", "--of", "quotient", files["veronese"])
    assert code == 0 and out.splitlines()[1:] == ["0: 1 . . .", "1: . 6 8 3"]
    code, out, _ = cli("betti", "--mode", "records", files["veronese"])
    assert out.splitlines() == ["beta 0 0 1", "beta 1 2 6", "beta 2 3 8", "beta 3 4 3"]
    code, out, _ = cli("betti", "--of", "ideal", "--mode", "records", files["initial"])
    assert out.splitlines() == ["beta 0 2 6", "beta 1 3 8", "beta 1 4 1", "beta 2 4 4",
                                "beta 2 5 1", "beta 3 5 1"]


def test_simple_commands(files):
    assert cli("initial", files["veronese"])[1] == "(b^2, b*c, c^2, c*d, c*e, e^2)\n"
    assert cli("gb", files["veronese"])[1].splitlines()[0] == "b^2 - a*d"
    assert cli("reg", files["veronese"])[1] == "regularity: 2\n"
    assert cli("reg", files["initial"])[1] == "regularity: 3\n"
    code, out, _ = cli("hilbert", "--degree", "2", files["veronese"])
    assert out.splitlines() == ["numerator: 1 - 6*t^2 + 8*t^3 - 3*t^4", "HF(R/I, 2) = 15", "HF(I, 2) = 6"]
    assert cli("weight", files["minors"])[0] == 0
    code, out, _ = cli("homogenize", "--weights", "1,1,2,2,1,1", files["minors"])
    assert code == 0 and out.splitlines()[0] == "w = 1,1,2,2,1,1"
    assert len(out.splitlines()) == 4


def test_cwl_command(files):
    code, out, _ = cli("cwl", files["initial"])
    assert code == 0
    assert out.splitlines() == ["componentwise linear: false", "  degree 2: not linear"]
    assert cli("cwl", files["veronese"])[1].startswith("componentwise linear: true")


def test_verdict_exit_codes(files):
    code, out, _ = cli("theorem", files["veronese"])
    assert code == 2 and "[FAIL] squareFree(in) = false: b^2, c^2, e^2" in out
    assert out.rstrip().endswith("verdict: HYPOTHESES_FAIL")
    assert cli("corollary", files["veronese"])[0] == 2
    assert cli("report", files["veronese"])[0] == 2
    for cmd in ("theorem", "corollary", "report"):
        code, out, _ = cli(cmd, files["minors"])
        assert code == 0 and out.rstrip().endswith("verdict: VERIFIED")


def test_lab_commands(files):
    assert cli("lemma2", "--degree", "2", files["veronese"])[1] == "lemma2 d=2: i=true ii=true iii=true\n"
    assert cli("lemma3", "--degree", "1", files["veronese"])[1] == \
        "lemma3 d=1: initialCommutes=true betti0Equal=true\n"
    assert cli("fiberfull", "--h", "3", files["veronese"])[1] == "fiber-full up to 3: true\n"
    assert cli("fiberfull", "--h", "5", files["veronese"])[1] == "fiber-full up to 5: false\n"
    assert cli("fiberfull-equiv", files["veronese"])[1] == "applicable: false\n"
    code, out, _ = cli("probe", files["minors"])
    assert code == 0 and "square-free truncation: true" in out


def test_empty_ideal(files):
    assert cli("gb", files["empty"])[:2] == (0, "(empty basis)\n")
    assert cli("betti", "--of", "ideal", files["empty"])[1] == "(zero ideal)\n"


@pytest.mark.parametrize("argv,needle", [
    (["betti", "--bogus", "VERONESE"], "--bogus"),
    (["frobnicate"], "frobnicate"),
    ([], "command"),
    (["lemma2"], "--degree"),
    (["gb", "missing.ideal"], "missing.ideal"),
    (["gb", "-i", "J", "VERONESE"], "'J'"),
    (["gb", "BAD"], "q"),
    (["theorem", "LEX"], "lex"),
    (["hilbert", "--degree", "-1", "VERONESE"], "--degree"),
    (["homogenize", "--weights", "1,1,1,1,1,1", "VERONESE"], "weight"),
    (["homogenize", "--weights", "a,b", "VERONESE"], "a,b"),
])
def test_errors_exit_one(files, argv, needle):
    argv = [files[a.lower()] if a in ("VERONESE", "BAD", "LEX") else a for a in argv]
    code, out, err = cli(*argv)
    assert code == 1 and out == ""
    assert err.startswith("error:") and needle in err


def test_deterministic(files):
    for cmd in (["report", files["veronese"]], ["betti", files["minors"]], ["homogenize", files["veronese"]]):
        assert cli(*cmd) == cli(*cmd)


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "cwl_degen", "betti", files["veronese"]],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "1: . 6 8 3" in proc.stdout
