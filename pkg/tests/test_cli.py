from __future__ import annotations

import io
import subprocess
import sys

import pytest

from plgroups.cli import main

XI_TEXT = "plmap kind=periodic n=2\n0 5/18\n1/3 1/3\n5/6 5/6\n31/36 1\n1 23/18\n"
TRANSLATION = "plmap kind=periodic n=2\n0 1\n1 2\n"
HALF_PAIR = "subdiv n=2: 1/2 3/4\nsubdiv n=2: 1/4 1/2\n"


def run(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    status = main(argv)
    out, err = capsys.readouterr()
    return status, out, err


def test_xi_output(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["xi", "--n", "2", "--depth", "2"]) == (0, XI_TEXT, "")


def test_rotnum_on_xi(capsys, monkeypatch):
    status, out, _ = run(capsys, monkeypatch, ["rotnum", "--n", "2", "--m", "32"], XI_TEXT)
    assert (status, out) == (0, "exact 0 (p=1,q=0)\n")


def test_orbit_class(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["orbit-class", "--n", "6", "10/36"])[:2] == (0, "O_5\n")


def test_member_gamma_rejects_translation(capsys, monkeypatch):
    status, out, err = run(capsys, monkeypatch, ["member-gamma", "--n", "2"], TRANSLATION)
    assert status == 1 and out == ""
    assert err.splitlines()[0] == "CrossingCountMismatch"


def test_member_gamma_accepts_xi(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["member-gamma"], XI_TEXT)[:2] == (0, "ok\n")


def test_eval_and_compose(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["eval", "0", "1"], XI_TEXT)[1] == "5/18\n23/18\n"
    status, out, _ = run(capsys, monkeypatch, ["compose"], XI_TEXT + "\n" + XI_TEXT)
    assert status == 0 and out.startswith("plmap kind=periodic n=2\n")
    status, inv, _ = run(capsys, monkeypatch, ["invert"], XI_TEXT)
    assert run(capsys, monkeypatch, ["eval", "5/18"], inv)[1] == "0\n"


def test_pair_round_trip(capsys, monkeypatch):
    status, out, _ = run(capsys, monkeypatch, ["pair"], HALF_PAIR)
    assert out == "plmap kind=compact n=2\n0 0\n1/2 1/4\n3/4 1/2\n1 1\n"
    assert run(capsys, monkeypatch, ["pair"], out)[1] == HALF_PAIR
    assert run(capsys, monkeypatch, ["member-f", "--n", "3"], out)[1] == "false\n"


def test_factor_xi(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["factor"], XI_TEXT)[0] == 0
    _, xi_default, _ = run(capsys, monkeypatch, ["xi", "--n", "2"])
    assert run(capsys, monkeypatch, ["factor"], xi_default)[1] == "word n=2\nXI\n"


def test_transport_and_signature(capsys, monkeypatch):
    status, out, _ = run(capsys, monkeypatch, ["transport", "--n", "2", "--s", "1/4", "--t", "3/4"])
    assert status == 0 and out.startswith("# certificate: ")
    assert run(capsys, monkeypatch, ["eval", "1/4"], out)[1] == "3/4\n"
    status, _, err = run(capsys, monkeypatch, ["transport", "--n", "3", "--s", "1/3", "--t", "2/3"])
    assert status == 1 and err.startswith("SignatureMismatch")
    assert run(capsys, monkeypatch, ["signature", "--n", "2", "5/18"])[1] == "(O_5)\n"
    assert run(capsys, monkeypatch, ["signature", "--n", "2"])[1] == "()\n"


def test_contract_too_wide(capsys, monkeypatch):
    status, _, err = run(capsys, monkeypatch, ["contract", "--n", "2", "0", "1", "0", "1/2"])
    assert status == 1 and err.startswith("TooWide")


def test_special_q_and_witness(capsys, monkeypatch):
    status, word, _ = run(capsys, monkeypatch, ["special-q", "--n", "2", "--eps", "1/5"])
    assert status == 0 and word.startswith("word n=2\nCOMM(")
    status, out, _ = run(capsys, monkeypatch, ["witness"], word)
    assert status == 0 and out.count("word n=2\n") == 2
    status, _, err = run(capsys, monkeypatch, ["witness"], "word n=2\nid\n")
    assert status == 1 and err.startswith("TrivialInput")


def test_plot_csv(capsys, monkeypatch):
    _, out, _ = run(capsys, monkeypatch, ["plot"], XI_TEXT)
    rows = out.splitlines()
    assert rows[0] == "x,y,x_decimal,y_decimal"
    assert rows[1].startswith("0,5/18,")
    _, ident, _ = run(capsys, monkeypatch, ["plot"], "plmap kind=compact n=2\n0 0\n1 1\n")
    assert len(ident.splitlines()) == 3
    _, svg, _ = run(capsys, monkeypatch, ["plot", "--format", "svg"], XI_TEXT)
    assert svg.startswith("<svg") or svg.startswith("<?xml")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "breakpoints-mod", "--n", "2", "--depth", "3"],
        ["verify", "relations", "--n", "2", "--max-index", "6"],
    ],
)
def test_verify_suites(capsys, monkeypatch, argv):
    status, out, err = run(capsys, monkeypatch, argv)
    assert status == 0 and ", 0 failures" in out and err.startswith("elapsed:")


def test_verify_unknown(capsys, monkeypatch):
    status, out, err = run(capsys, monkeypatch, ["verify", "unknown"])
    assert status == 2 and out == "" and err.strip() == "UnknownSuite"


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-verb"])
    assert exc.value.code == 2


def test_reruns_are_byte_identical():
    argv = [sys.executable, "-m", "plgroups.cli", "verify", "conj-q", "--n", "2", "--seed", "7"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"conj-q: 100 cases, 0 failures")
