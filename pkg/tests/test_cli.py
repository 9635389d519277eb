from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgematch import Border, Instance, Moves, Piece, Solution
from edgematch.cli import main, render, select_variant
from edgematch.formats import ParseError, emit_instance, emit_solution, parse_instance, parse_solution

DATA = Path(__file__).parent / "data"
GOLDEN = sorted(DATA.glob("*.txt"))


@pytest.mark.parametrize("path", GOLDEN, ids=lambda p: p.name)
def test_golden_files_reemit_identically(path):
    text = path.read_text()
    assert emit_instance(parse_instance(text)) == text


def test_example_file_contents():
    inst = parse_instance((DATA / "swapflip_example.txt").read_text())
    assert (inst.rows, inst.cols, inst.num_colors) == (1, 4, 5)
    assert inst.moves == Moves(swap=True, flip=True)
    assert inst.pieces[0] == Piece(1, 0, 2, 0)


@pytest.mark.parametrize("text,line,column,fragment", [
    ("edgematch v2\n", 1, 1, "expected"),
    ("edgematch v1\n1 1\n", 2, 4, "expected 3 integers"),
    ("edgematch v1\n1 x 2\n", 2, 3, "not a non-negative"),
    ("edgematch v1\n1 1 2\nborder round\n", 3, 8, "unknown border"),
    ("edgematch v1\n1 1 2\nborder mono:2\n", 3, 13, "not below K"),
    ("edgematch v1\n1 1 2\nborder free\nmoves swap,spin\n", 4, 12, "unknown manipulation"),
    ("edgematch v1\n1 1 2\nborder free\nmoves\n0 1 2 1\n", 5, 5, "color 2 not below K = 2"),
    ("edgematch v1\n1 2 2\nborder free\nmoves\n0 1 1 1\n", 6, 1, "unexpected end"),
    ("edgematch v1\n1 1 2\nborder free\nmoves\n0 1 1 1\n0 0 0 0\n", 6, 1, "trailing"),
])
def test_parse_errors_carry_positions(text, line, column, fragment):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert fragment in str(info.value)


colors = st.integers(0, 6)


@st.composite
def instances(draw):
    n, m = draw(st.integers(1, 3)), draw(st.integers(1, 4))
    k = draw(st.integers(1, 7))
    pieces = draw(st.lists(st.tuples(*[st.integers(0, k - 1)] * 4), min_size=n * m, max_size=n * m))
    kind = draw(st.sampled_from(["free", "mono", "cyclic", "cyclic-h"]))
    border = Border.mono(draw(st.integers(0, k - 1))) if kind == "mono" else Border(kind)
    moves = Moves(*draw(st.tuples(st.booleans(), st.booleans(), st.booleans())))
    return Instance(n, m, k, border, moves, tuple(pieces))


@given(instances())
def test_instance_roundtrip(inst):
    text = emit_instance(inst)
    assert parse_instance(text) == inst
    assert emit_instance(parse_instance(text)) == text


@given(st.integers(1, 3), st.integers(1, 4), st.data())
def test_solution_roundtrip(n, m, data):
    cells = [[(data.draw(st.integers(0, 20)), data.draw(st.integers(0, 7))) for _ in range(m)] for _ in range(n)]
    sol = Solution(cells)
    text = emit_solution(sol)
    assert parse_solution(text) == sol
    assert emit_solution(parse_solution(text)) == text


def test_solution_parse_errors():
    with pytest.raises(ParseError, match="unknown orientation"):
        parse_solution("edgematch-solution v1\n1 1\n0 0 0 45\n")
    with pytest.raises(ParseError, match="given twice"):
        parse_solution("edgematch-solution v1\n1 2\n0 0 0 0\n0 0 1 0\n")


def test_dispatch_table():
    row = lambda moves, border=Border(): Instance.row([(0, 0, 0, 0)], moves, border)
    assert select_variant(row(Moves(swap=True))) == "swap"
    assert select_variant(row(Moves(swap=True, flip=True))) == "swap-flip"
    assert select_variant(row(Moves(rotate=True))) == "rotations"
    assert select_variant(row(Moves(swap=True, rotate=True), Border("cyclic-h"))) == "swap-rotate"
    assert select_variant(row(Moves())) == "identity"
    grid = Instance(2, 1, 1, Border(), Moves(rotate=True), ((0, 0, 0, 0),) * 2)
    assert select_variant(grid) == "grid"
    other = Instance(2, 1, 1, Border(), Moves(swap=True), ((0, 0, 0, 0),) * 2)
    assert select_variant(other, fallback_brute=True) == "brute"
    with pytest.raises(Exception, match="fallback-brute"):
        select_variant(other)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def test_solve_and_verify_pipeline(tmp_path, capsys):
    sol = tmp_path / "out.sol"
    code, out = run(capsys, "solve", DATA / "swapflip_example.txt", "-o", sol)
    assert code == 0 and out.out == "solvable variant=swap-flip\n"
    code, out = run(capsys, "verify", DATA / "swapflip_example.txt", sol)
    assert code == 0 and out.out.strip() == "valid"
    code, out = run(capsys, "render", DATA / "swapflip_example.txt", "--solution", sol)
    assert out.out.splitlines()[1] == "2   1|1   3|3   4|4   3"


def test_gen_sat_pipeline(tmp_path, capsys):
    inst, sol = tmp_path / "sat.txt", tmp_path / "sat.sol"
    code, _ = run(capsys, "gen", "sat1in3", "--clauses", "1 2 3", "-o", inst, "--solution-out", sol)
    assert code == 0
    parsed = parse_instance(inst.read_text())
    assert (len(parsed.pieces), parsed.num_colors) == (10, 11)
    code, out = run(capsys, "verify", inst, sol)
    assert code == 0 and out.out.strip() == "valid"
    code, out = run(capsys, "solve", inst)
    assert code == 0 and out.out.strip() == "solvable variant=swap-rotate"


def test_gen_3part_pipeline(tmp_path, capsys):
    inst, sol = tmp_path / "p.txt", tmp_path / "p.sol"
    code, _ = run(capsys, "gen", "3part", "--values", "3 3 3 3 3 3", "--border", "mono",
                  "-o", inst, "--solution-out", sol)
    assert code == 0
    assert run(capsys, "verify", inst, sol)[0] == 0
    code, out = run(capsys, "solve", inst, "--fallback-brute", "--cap", 64)
    assert code == 0 and "variant=brute" in out.out


def test_unsolvable_and_invalid_exit_codes(tmp_path, capsys):
    inst = tmp_path / "u.txt"
    run(capsys, "gen", "sat1in3", "--clauses", "1 2 3; 1 2 4; 1 3 4; 2 3 4", "-o", inst)
    code, out = run(capsys, "solve", inst)
    assert code == 1 and out.out.startswith("unsolvable")
    bad = tmp_path / "bad.sol"
    bad.write_text("edgematch-solution v1\n1 4\n0 0 0 0\n0 1 1 0\n0 2 2 0\n0 3 3 0\n")
    code, out = run(capsys, "verify", DATA / "swapflip_example.txt", bad)
    assert code == 1 and out.out.startswith("invalid")


def test_errors_exit_two(tmp_path, capsys, monkeypatch):
    bad = tmp_path / "bad.txt"
    bad.write_text("edgematch v1\n1 1 2\nborder free\nmoves\n0 1 2 1\n")
    code, out = run(capsys, "solve", bad)
    assert code == 2 and out.out.startswith("error line 5, column 5")
    assert run(capsys, "solve", tmp_path / "missing.txt")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    monkeypatch.setenv("EDGEMATCH_BUDGET", "many")
    assert run(capsys, "solve", DATA / "swapflip_example.txt", "--variant", "swap-rotate")[0] == 2


def test_budget_env_var_limits_enumeration(tmp_path, capsys, monkeypatch):
    inst = tmp_path / "r.txt"
    run(capsys, "gen", "random", "--cols", 40, "--colors", 3, "--seed", 1, "-o", inst)
    monkeypatch.setenv("EDGEMATCH_BUDGET", "10")
    code, out = run(capsys, "solve", inst, "--method", "enumerate")
    assert code == 2 and "budget" in out.out


def test_render_without_solution(capsys):
    code, out = run(capsys, "render", DATA / "minimal.txt")
    assert code == 0
    assert out.out == "  0  \n0   0\n  0  \n"
    assert render(parse_instance((DATA / "mono_grid.txt").read_text())).count("\n") == 7


def test_bench_prints_one_line(capsys):
    code, out = run(capsys, "bench", "--pieces", 500, "--colors", 2, "--repeat", 2)
    assert code == 0 and len(out.out.splitlines()) == 1 and "variant=swap-rotate" in out.out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "edgematch", "solve", str(DATA / "minimal.txt")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "solvable variant=identity\n"
