"""Edge-matching puzzle solvers, hardness reductions and brute-force oracles."""

from .core import (
    CYCLIC,
    CYCLIC_H,
    FREE,
    Border,
    BudgetExceeded,
    ColorScheme,
    EdgeMatchError,
    Instance,
    InvalidInstance,
    InvalidSolution,
    ORIENTATION_NAMES,
    Moves,
    Piece,
    Solution,
    UnsupportedConfiguration,
    canonicalize_scheme,
    flip_piece,
    orient_piece,
    rotate_piece,
    scheme_counts,
    verify_solution,
)
from .formats import ParseError, emit_instance, emit_solution, parse_instance, parse_solution
from .generate import random_instance, solvable_row
from .grid import column_configs, solve_grid_inplace
from .multigraph import (
    MultiGraph,
    find_euler_circuit,
    find_euler_trail,
    has_euler_circuit,
    has_euler_trail,
)
from .oracle import SatInstance, ThreePartitionInstance, brute_solve, sat_brute, threepart_brute
from .reductions import (
    assignment_from_solution,
    encode_3part,
    encode_sat,
    partition_from_solution,
    solution_from_assignment,
    solution_from_partition,
)
from .rowsolvers import (
    enumerate_partitions,
    reduce_scheme_counts,
    solve_rotations_only,
    solve_swap_flip,
    solve_swap_only,
    solve_swap_rotate,
)

__version__ = "0.1.0"
