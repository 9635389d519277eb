from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edgematch import (
    CYCLIC,
    CYCLIC_H,
    Border,
    ColorScheme,
    Instance,
    InvalidInstance,
    InvalidSolution,
    Moves,
    Piece,
    Solution,
    canonicalize_scheme,
    flip_piece,
    orient_piece,
    rotate_piece,
    scheme_counts,
    verify_solution,
)

colors = st.integers(0, 5)
pieces = st.tuples(colors, colors, colors, colors).map(lambda t: Piece(*t))


def test_rotation_moves_colors_counterclockwise():
    assert rotate_piece((1, 2, 3, 4)) == (4, 1, 2, 3)
    assert rotate_piece((1, 2, 3, 4), 2) == (3, 4, 1, 2)


@given(pieces)
def test_four_quarter_turns_are_identity(p):
    q = p
    for _ in range(4):
        q = rotate_piece(q)
    assert q == p


@given(pieces)
def test_flips_are_involutions(p):
    assert flip_piece(flip_piece(p)) == p
    assert flip_piece(flip_piece(p, False), False) == p


def test_flip_axes():
    p = Piece(1, 2, 3, 4)
    assert flip_piece(p) == (3, 2, 1, 4)
    assert flip_piece(p, horizontal=False) == (1, 4, 3, 2)
    assert orient_piece(p, 6) == flip_piece(p, horizontal=False)


@given(pieces)
def test_orientations_form_the_dihedral_group(p):
    images = {orient_piece(p, o) for o in range(8)}
    assert len(images) in (1, 2, 4, 8)
    for o in range(8):
        assert orient_piece(orient_piece(p, o), 0) == orient_piece(p, o)


@given(pieces, st.integers(0, 3))
def test_scheme_is_rotation_invariant(p, r):
    assert canonicalize_scheme(rotate_piece(p, r)) == canonicalize_scheme(p)
    assert canonicalize_scheme(p) == min(rotate_piece(p, k) for k in range(4))


def test_color_scheme_pairs():
    s = ColorScheme((0, 1, 0, 1), 3)
    assert s.pairs == ((0, 0), (1, 1))
    assert not s.degenerate
    assert ColorScheme((0, 0, 1, 1), 1).pairs == ((0, 1), (0, 1))
    assert ColorScheme((0, 0, 1, 1), 1).degenerate
    with pytest.raises(ValueError):
        ColorScheme((1, 0, 0, 0), 1)


def test_scheme_counts_groups_rotations():
    out = scheme_counts([(0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 1)])
    assert [(s.colors, s.count) for s in out] == [((0, 0, 0, 1), 2), ((0, 1, 0, 1), 1)]


def test_moves_orientations():
    assert Moves(rotate=True).orientations() == (0, 1, 2, 3)
    assert Moves(swap=True).orientations() == (0,)
    assert Moves(flip=True).orientations() == (0, 4, 6)
    assert Moves.of("rotate", "flip").orientations() == tuple(range(8))
    assert str(Moves.of("flip", "swap")) == "swap,flip"
    with pytest.raises(InvalidInstance):
        Moves.of("teleport")


def test_instance_validation():
    with pytest.raises(InvalidInstance):
        Instance(1, 2, 2, Border(), Moves(), ((0, 0, 0, 0),))
    with pytest.raises(InvalidInstance):
        Instance(1, 1, 2, Border(), Moves(), ((0, 2, 0, 0),))
    with pytest.raises(InvalidInstance):
        Border("mono")
    with pytest.raises(InvalidInstance):
        Instance(1, 1, 2, Border.mono(3), Moves(), ((0, 0, 0, 0),))


def test_verify_free_row():
    inst = Instance.row([(1, 0, 0, 0), (2, 0, 1, 0)], Moves(swap=True))
    assert verify_solution(inst, Solution.from_row([(0, 0), (1, 0)]))
    assert not verify_solution(inst, Solution.from_row([(1, 0), (0, 0)]))


def test_verify_rejects_structural_errors():
    inst = Instance.row([(1, 0, 0, 0), (2, 0, 1, 0)], Moves(rotate=True))
    with pytest.raises(InvalidSolution):
        verify_solution(inst, Solution.from_row([(1, 0), (0, 0)]))  # no swaps allowed
    with pytest.raises(InvalidSolution):
        verify_solution(inst, Solution.from_row([(0, 4), (1, 0)]))  # no flips allowed
    with pytest.raises(InvalidSolution):
        verify_solution(inst, Solution.from_row([(0, 0)]))
    swap = Instance.row([(0, 0, 0, 0)] * 2, Moves(swap=True))
    with pytest.raises(InvalidSolution):
        verify_solution(swap, Solution.from_row([(0, 0), (0, 0)]))


def test_verify_wraparound_and_mono():
    row = Instance.row([(1, 0, 0, 0), (0, 0, 1, 0)], Moves(), CYCLIC_H)
    assert verify_solution(row, Solution.from_row([(0, 0), (1, 0)]))
    bad = Instance.row([(1, 0, 0, 0), (2, 0, 1, 0)], Moves(), CYCLIC_H)
    assert not verify_solution(bad, Solution.from_row([(0, 0), (1, 0)]))
    torus = Instance(1, 1, 2, CYCLIC, Moves(), ((0, 1, 0, 0),))
    assert not verify_solution(torus, Solution((((0, 0),),)))
    mono = Instance(1, 1, 2, Border.mono(1), Moves(rotate=True), ((1, 1, 1, 0),))
    assert not verify_solution(mono, Solution((((0, 0),),)))
    assert verify_solution(Instance(1, 1, 2, Border.mono(1), Moves(), ((1, 1, 1, 1),)), Solution((((0, 0),),)))


def test_relabel_preserves_solutions():
    inst = Instance(1, 2, 3, Border.mono(0), Moves(swap=True), ((1, 0, 0, 0), (0, 0, 1, 0)))
    sol = Solution.from_row([(0, 0), (1, 0)])
    perm = [2, 0, 1]
    assert verify_solution(inst, sol)
    assert verify_solution(inst.relabel(perm), sol)
    assert inst.relabel(perm).border.color == 2
