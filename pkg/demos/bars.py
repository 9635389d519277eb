"""Two-row swap puzzle that packs integer bars between separators.

Run: python3 demos/bars.py
"""

from __future__ import annotations

from edgematch import ThreePartitionInstance, brute_solve, threepart_brute
from edgematch.cli import render
from edgematch.reductions import encode_3part, partition_from_solution, solution_from_partition

tp = ThreePartitionInstance((3, 3, 3, 3, 3, 3), 9)
inst, gadgets = encode_3part(tp, border="mono")
print(f"values {tp.values}, target {tp.target}: board {inst.rows} x {inst.cols}, separators at {gadgets.separator_columns}")

groups = threepart_brute(tp)
sol = solution_from_partition(tp, gadgets, groups)
print(render(inst, sol))

# The exhaustive search rediscovers a packing from scratch.
found = brute_solve(inst, cap=64)
print("search decodes to", partition_from_solution(tp, gadgets, found))
