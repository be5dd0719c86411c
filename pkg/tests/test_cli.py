from __future__ import annotations

import io
import sys

import pytest

from forkfree.cli import main
from forkfree.graph import complete_graph
from forkfree.graph6 import to_graph6
from forkfree.patterns import FIXED_PATTERNS, balloon_graph


def run(monkeypatch, capsys, argv, stdin=b""):
    monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin)))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def g6(g) -> bytes:
    return to_graph6(g) + b"\n"


def test_detect_fork(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["detect", "--pattern", "fork"], g6(FIXED_PATTERNS["fork"]))
    assert code == 0
    line, verdict, witness = out.split()
    assert verdict == "CONTAINS" and sorted(map(int, witness.split(","))) == [0, 1, 2, 3, 4]


def test_detect_free_and_balloon(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["detect", "--pattern", "balloon:5"], g6(complete_graph(3)) + g6(balloon_graph(5)))
    assert code == 0
    assert [ln.split()[1] for ln in out.splitlines()] == ["FREE", "CONTAINS"]
    _, out, _ = run(monkeypatch, capsys, ["detect", "--pattern", "odd-balloon"], g6(balloon_graph(5)))
    assert out.split()[2] == "0,1,2,3,4,5,6"


def test_color_k4(monkeypatch, capsys, tmp_path):
    code, out, _ = run(monkeypatch, capsys, ["color", "--class", "fork-gem", "--cert-dir", str(tmp_path)], b"C~\n")
    assert code == 0 and "colors=4 bound=10" in out
    cert = out.split("certificate=")[1].strip()
    code, out, _ = run(monkeypatch, capsys, ["replay", cert])
    assert code == 0 and "VALID" in out


def test_color_out_of_class_is_a_usage_error(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["color", "--class", "fork-gem"], g6(FIXED_PATTERNS["gem"]))
    assert code == 2 and "gem" in err


def test_replay_rejects_tampering(monkeypatch, capsys, tmp_path):
    run(monkeypatch, capsys, ["color", "--class", "fork-gem", "--cert-dir", str(tmp_path)], g6(balloon_graph(5)))
    cert = next(tmp_path.iterdir())
    cert.write_text(cert.read_text().replace("final 0,", "final 1,"))
    code, out, _ = run(monkeypatch, capsys, ["replay", str(cert)])
    assert code == 1 and "INVALID" in out


def test_free_and_divide(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["free", "--class", "fork-gem"], g6(FIXED_PATTERNS["gem"]) + g6(balloon_graph(5)))
    assert code == 0 and [ln.split()[1] for ln in out.splitlines()] == ["NOT-FREE", "FREE"]
    code, out, _ = run(monkeypatch, capsys, ["divide"], b"Dhc\n")
    assert code == 0 and "A=0,2,3 B=1,4 method=vertex-criterion(0)" in out


def test_divide_reports_none(monkeypatch, capsys):
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, (i + 1) % 5) for i in range(5)] + [(5 + i, (i - 1) % 5) for i in range(5)]
    edges += [(10, 5 + i) for i in range(5)]
    from forkfree.graph import from_edges

    code, out, _ = run(monkeypatch, capsys, ["divide"], g6(from_edges(11, edges)))
    assert code == 1 and out.split()[1] == "NONE"


def test_verify_and_report_file(monkeypatch, capsys, tmp_path):
    target = tmp_path / "r.txt"
    code, out, _ = run(monkeypatch, capsys, ["verify", "--campaign", "theorem-1", "--max-n", "6", "--report", str(target)])
    assert code == 0 and out.endswith("verdict PASS\n") and target.read_text() == out


def test_enumerate(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["enumerate", "--n", "5", "--filter", "fork"])
    assert code == 0 and len(out.splitlines()) == 33


@pytest.mark.parametrize(
    "argv,stdin",
    [
        (["detect", "--pattern", "spider"], b"C~\n"),
        (["detect", "--pattern", "fork"], b"C~~\n"),
        (["verify", "--campaign", "nope", "--max-n", "5"], b""),
        (["verify", "--campaign", "theorem-1", "--max-n", "9"], b""),
        (["bogus"], b""),
        ([], b""),
        (["replay", "/nonexistent/cert.txt"], b""),
    ],
)
def test_usage_errors_exit_2(monkeypatch, capsys, argv, stdin):
    assert run(monkeypatch, capsys, argv, stdin)[0] == 2
