"""Solve single-row puzzles under each manipulation set.

Run: python3 demos/row_solvers.py
"""

from __future__ import annotations

import random

from edgematch import Instance, Moves, solve_rotations_only, solve_swap_flip, solve_swap_only, solve_swap_rotate, verify_solution
from edgematch.cli import render
from edgematch.generate import solvable_row
from edgematch.multigraph import trail_nodes

# Four pieces whose left/right colors form the multigraph 1-2, 1-3, 3-4, 3-4.
# Swapping and mirroring is enough: walk an Euler trail through the colors.
pieces = [(1, 0, 2, 0), (1, 0, 3, 0), (4, 0, 3, 0), (4, 0, 3, 0)]
inst = Instance.row(pieces, Moves(swap=True, flip=True))
sol = solve_swap_flip(inst)
print("swap+flip layout (piece, orientation):", sol.grid[0])
print(render(inst, sol))

# Without the mirror the same pieces are directed edges and no trail exists.
print("swap only:", solve_swap_only(Instance.row(pieces, Moves(swap=True))))

rng = random.Random(7)
for name, moves, solver in [
    ("rotate", Moves(rotate=True), solve_rotations_only),
    ("swap+rotate", Moves(swap=True, rotate=True), solve_swap_rotate),
]:
    inst = solvable_row(12, 3, moves, rng=rng)
    sol = solver(inst)
    print(f"{name}: solved={sol is not None} verified={verify_solution(inst, sol)}")
    print(render(inst, sol))
