"""Rotate pieces in place on a small multi-row board.

Run: python3 demos/grid_sweep.py
"""

from __future__ import annotations

import random

from edgematch import Moves, brute_solve, solve_grid_inplace
from edgematch.cli import render
from edgematch.generate import random_instance

rng = random.Random(3)
for trial in range(5):
    inst = random_instance(2, 4, 2, Moves(rotate=True), rng=rng)
    log: list[int] = []
    sol = solve_grid_inplace(inst, frontier_log=log)
    print(f"trial {trial}: reachable patterns per column {log}, solvable={sol is not None}, "
          f"brute agrees={(sol is None) == (brute_solve(inst) is None)}")
    if sol is not None:
        print(render(inst, sol))
