import json

import pytest

from torusmagic.cli import (
    EXIT_BUDGET,
    EXIT_ERROR,
    EXIT_OK,
    EXIT_VERDICT,
    main,
)
from torusmagic.construct import construct
from torusmagic.grid import H, V
from torusmagic.serialize import encode


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_then_verify_pipe(tmp_path, capsys):
    out_file = tmp_path / "lab.json"
    code, out, err = run(capsys, "generate", "3", "3", "--out", str(out_file))
    assert code == EXIT_OK
    doc = json.loads(out_file.read_text())
    assert doc["horizontal"] == [[1, 4, 9], [8, 2, 5], [6, 7, 3]]
    assert doc["metadata"]["plan"]["variant"] == "odd-odd"

    code, out, err = run(capsys, "verify", str(out_file))
    assert code == EXIT_OK
    assert "supermagic: True" in out


def test_generate_unsupported_suggests_search(capsys):
    code, out, err = run(capsys, "generate", "3", "4")
    assert code == EXIT_VERDICT
    assert out == ""
    assert "mixed parity" in err
    assert "search 3 4" in err


def test_generate_to_stdout(capsys):
    code, out, err = run(capsys, "generate", "4", "6")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["n"] == 4 and doc["m"] == 6


def test_verify_tampered_lists_vertices(tmp_path, capsys):
    lab = construct(3, 3).with_swapped(H(1, 1), H(1, 2))
    bad_file = tmp_path / "bad.json"
    bad_file.write_text(encode(lab))
    code, out, err = run(capsys, "verify", str(bad_file))
    assert code == EXIT_VERDICT
    assert "supermagic: False" in out
    assert "x_1_" in out  # the perturbed vertices are named


def test_verify_parse_error(tmp_path, capsys):
    bad = tmp_path / "broken.json"
    bad.write_text('{"n": 3')
    code, out, err = run(capsys, "verify", str(bad))
    assert code == EXIT_ERROR
    assert "error:" in err


def test_verify_missing_file(capsys):
    code, out, err = run(capsys, "verify", "/no/such/file.json")
    assert code == EXIT_ERROR
    assert "error:" in err


def test_audit_clean_and_dirty(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(encode(construct(4, 6)))
    code, out, err = run(capsys, "audit", str(good), "--plan", "even-even")
    assert code == EXIT_OK
    assert "clean" in out

    tampered = construct(4, 6).with_swapped(H(1, 1), V(2, 2))
    dirty = tmp_path / "dirty.json"
    dirty.write_text(encode(tampered))
    code, out, err = run(capsys, "audit", str(dirty), "--plan", "even-even")
    assert code == EXIT_VERDICT
    assert "mismatch" in out


def test_audit_wrong_plan_is_usage_error(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text(encode(construct(4, 6)))
    code, out, err = run(capsys, "audit", str(good), "--plan", "odd-odd")
    assert code == EXIT_ERROR


def test_search_found_writes_document(tmp_path, capsys):
    out_file = tmp_path / "found.json"
    code, out, err = run(capsys, "search", "3", "3", "--out", str(out_file))
    assert code == EXIT_OK
    assert "status: found" in err  # diagnostics on stderr
    doc = json.loads(out_file.read_text())
    assert doc["n"] == doc["m"] == 3
    code, out, err = run(capsys, "verify", str(out_file))
    assert code == EXIT_OK


def test_search_budget_exit_code(capsys):
    code, out, err = run(capsys, "search", "3", "6", "--node-budget", "1000")
    assert code == EXIT_BUDGET
    assert out == ""  # no labeling emitted
    assert "budget" in err


def test_search_seed_deterministic_output(capsys):
    code1, out1, err1 = run(capsys, "search", "3", "4", "--seed", "11")
    code2, out2, err2 = run(capsys, "search", "3", "4", "--seed", "11")
    assert code1 == code2 == EXIT_OK
    assert out1 == out2


def test_decompose_output(capsys):
    code, out, err = run(capsys, "decompose", "3", "4")
    assert code == EXIT_OK
    assert "1 diagonals of length 24" in out
    assert "D1 start_col=1:" in out
    assert "H(1,1) V(1,2)" in out


def test_render_from_stdin(tmp_path, capsys, monkeypatch):
    import io
    import sys

    text = encode(construct(3, 3))
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code, out, err = run(capsys, "render", "-", "--format", "dot")
    assert code == EXIT_OK
    assert out.startswith("graph torus_3x3")


def test_render_svg_to_file(tmp_path, capsys):
    src = tmp_path / "lab.json"
    src.write_text(encode(construct(3, 3)))
    dst = tmp_path / "fig.svg"
    code, out, err = run(capsys, "render", str(src), "--format", "svg",
                         "--annotate", "weights", "--out", str(dst))
    assert code == EXIT_OK
    assert dst.read_text().startswith("<svg")


def test_usage_errors_exit_one(capsys):
    assert main(["generate", "three", "3"]) == EXIT_ERROR
    assert main(["nonsense"]) == EXIT_ERROR
    assert main([]) == EXIT_ERROR


def test_help_exits_zero(capsys):
    assert main(["--help"]) == EXIT_OK
    assert main(["search", "--help"]) == EXIT_OK


def test_dimension_too_small_is_an_error(capsys):
    code, out, err = run(capsys, "decompose", "2", "5")
    assert code == EXIT_ERROR
    assert "error:" in err
