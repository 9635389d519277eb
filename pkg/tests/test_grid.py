from __future__ import annotations

import random
import warnings

import pytest

from edgematch import Border, Instance, Moves, UnsupportedConfiguration, brute_solve, column_configs, solve_grid_inplace, solve_rotations_only, verify_solution
from edgematch.generate import random_instance
from edgematch.grid import pattern_colors, pattern_index


def test_pattern_roundtrip():
    for idx in range(27):
        assert pattern_index(pattern_colors(idx, 3, 3), 3) == idx


def test_column_configs_need_inner_match():
    configs = column_configs([(0, 0, 0, 1), (0, 0, 0, 0)])
    assert all(len(c.rotations) == 2 for c in configs)
    # the lower piece is all zeros, so the upper one must show 0 at its bottom
    assert {c.rotations[0] for c in configs} == {1, 2, 3}
    assert len(configs) == 12


def test_single_column_board():
    inst = Instance(2, 1, 2, Border(), Moves(rotate=True), ((0, 0, 0, 1), (0, 1, 0, 0)))
    sol = solve_grid_inplace(inst)
    assert verify_solution(inst, sol)


def test_rejects_other_moves():
    inst = Instance(1, 1, 1, Border(), Moves(swap=True), ((0, 0, 0, 0),))
    with pytest.raises(UnsupportedConfiguration):
        solve_grid_inplace(inst)


def test_budget_warning():
    inst = random_instance(3, 2, 4, Moves(rotate=True), rng=random.Random(0))
    with pytest.warns(ResourceWarning):
        solve_grid_inplace(inst, node_budget=10)


def test_frontier_log_has_one_entry_per_column():
    inst = random_instance(2, 4, 2, Moves(rotate=True), rng=random.Random(1))
    log = []
    solve_grid_inplace(inst, frontier_log=log)
    assert 1 <= len(log) <= 4


def test_single_row_matches_sweep():
    rng = random.Random(4)
    for _ in range(200):
        inst = random_instance(1, rng.randint(1, 8), rng.randint(1, 4), Moves(rotate=True), rng=rng)
        assert (solve_grid_inplace(inst) is None) == (solve_rotations_only(inst) is None)


def test_matches_brute_force():
    rng = random.Random(8)
    for _ in range(150):
        inst = random_instance(rng.randint(1, 3), rng.randint(1, 4), rng.randint(1, 3), Moves(rotate=True), rng=rng)
        sol = solve_grid_inplace(inst)
        assert (sol is None) == (brute_solve(inst) is None)
        if sol is not None:
            assert verify_solution(inst, sol)
