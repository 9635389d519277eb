"""Encode a Monotone 1-in-3-SAT formula as a single cyclic row.

Run: python3 demos/sat_gadgets.py
"""

from __future__ import annotations

from edgematch import SatInstance, sat_brute, solve_swap_rotate, verify_solution
from edgematch.reductions import assignment_from_solution, encode_sat, solution_from_assignment

sat = SatInstance(5, ((1, 2, 3), (3, 4, 5)))
inst, gadgets = encode_sat(sat)
print(f"{sat.m} clauses -> 1 x {inst.cols} board, {inst.num_colors} colors")

for rec in gadgets.records()[:10]:
    print(f"  piece {rec['index']:2d} {rec['role']:2s} {rec['indices']} {rec['colors']}")

assignment = sat_brute(sat)
print("first assignment:", assignment)
sol = solution_from_assignment(sat, gadgets, assignment)
print("constructed layout verifies:", verify_solution(inst, sol))

# The FPT solver finds its own layout; decoding it gives back a valid assignment.
found = solve_swap_rotate(inst)
print("solver assignment:", assignment_from_solution(sat, gadgets, found))

# Every pair of clauses shares variables here, so no 1-in-3 assignment exists.
unsat = SatInstance(4, ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)))
print("unsatisfiable formula solvable as a row?", solve_swap_rotate(encode_sat(unsat)[0]) is not None)

# With all-blank accordance pieces a variable used once can never be true,
# and even the single clause (1, 2, 3) stops being solvable.
single = SatInstance(3, ((1, 2, 3),))
print("all-blank singleton variant solvable?", solve_swap_rotate(encode_sat(single, literal_singletons=True)[0]) is not None)
