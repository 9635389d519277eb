"""In-place rotation solver for N x M boards with few rows and colors.

A column of N pieces has 4**N rotation configurations. Those whose internal
edges match connect a left color pattern to a right color pattern; the board
is solvable iff some chain of configurations links column 0 to column M-1
with equal patterns at every column boundary. The layered path graph is
walked forward one column at a time, keeping only reachable right patterns.
"""

from __future__ import annotations

import itertools
import warnings
from typing import NamedTuple, Sequence

from .core import Instance, Moves, Solution, UnsupportedConfiguration, rotate_piece

DEFAULT_NODE_BUDGET = 10**6


def pattern_index(colors: Sequence[int], num_colors: int) -> int:
    """Position of an N-color pattern in ``[0, K**N)`` (first color most significant)."""
    idx = 0
    for c in colors:
        idx = idx * num_colors + c
    return idx


def pattern_colors(index: int, n: int, num_colors: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        index, c = divmod(index, num_colors)
        out.append(c)
    return tuple(reversed(out))


class ColumnConfig(NamedTuple):
    left: tuple[int, ...]
    right: tuple[int, ...]
    rotations: tuple[int, ...]


def column_configs(column_pieces: Sequence[Sequence[int]]) -> list[ColumnConfig]:
    """All rotation tuples of a column whose N-1 inner edges match.

    Listed in lexicographic order of the rotation tuple.
    """
    rotated = [[rotate_piece(p, r) for r in range(4)] for p in column_pieces]
    out = []
    for rots in itertools.product(range(4), repeat=len(column_pieces)):
        col = [rotated[i][r] for i, r in enumerate(rots)]
        if all(a.bottom == b.top for a, b in zip(col, col[1:])):
            out.append(ColumnConfig(
                tuple(p.left for p in col), tuple(p.right for p in col), rots,
            ))
    return out


def solve_grid_inplace(
    inst: Instance,
    node_budget: int = DEFAULT_NODE_BUDGET,
    frontier_log: list | None = None,
) -> Solution | None:
    """Forward sweep over columns; ``frontier_log`` (if given) receives the
    number of reachable right patterns after each column."""
    if inst.moves != Moves(rotate=True):
        raise UnsupportedConfiguration(f"grid solver needs moves {{rotate}}, got {{{inst.moves}}}")
    if inst.border.kind != "free":
        raise UnsupportedConfiguration(f"unsupported border rule {inst.border}")
    n, m = inst.rows, inst.cols
    if inst.num_colors ** n > node_budget:
        warnings.warn(
            f"{inst.num_colors}**{n} color patterns per layer exceed node budget {node_budget}",
            ResourceWarning,
            stacklevel=2,
        )

    back: list[dict[tuple, ColumnConfig]] = []
    reach: dict[tuple, ColumnConfig] | None = None
    for j in range(m):
        configs = column_configs([inst.pieces[r * m + j] for r in range(n)])
        cur: dict[tuple, ColumnConfig] = {}
        for cfg in configs:
            if cfg.right not in cur and (reach is None or cfg.left in reach):
                cur[cfg.right] = cfg
        if frontier_log is not None:
            frontier_log.append(len(cur))
        if not cur:
            return None
        back.append(cur)
        reach = cur

    grid = [[None] * m for _ in range(n)]
    pattern = min(back[-1])
    for j in range(m - 1, -1, -1):
        cfg = back[j][pattern]
        for r in range(n):
            grid[r][j] = (r * m + j, cfg.rotations[r])
        pattern = cfg.left
    return Solution(grid)
