"""Exhaustive reference solvers used as ground truth by the test-suite."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import BudgetExceeded, Instance, InvalidInstance, Piece, Solution, orient_piece

DEFAULT_CELL_CAP = 30


@dataclass(frozen=True)
class SatInstance:
    """Monotone 1-in-3-SAT: clauses are triples of variable indices in ``1..n``."""

    n: int
    clauses: tuple[tuple[int, int, int], ...]
    allow_repeats: bool = False

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.n < 1:
            raise InvalidInstance("need at least one variable")
        for c in self.clauses:
            if len(c) != 3:
                raise InvalidInstance(f"clause {c} does not have exactly 3 entries")
            if any(not 1 <= v <= self.n for v in c):
                raise InvalidInstance(f"clause {c} references a variable outside 1..{self.n}")
            if not self.allow_repeats and len(set(c)) != 3:
                raise InvalidInstance(f"clause {c} repeats a variable")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        """Per variable, its ``(clause, position)`` occurrences (1-based) in order."""
        occ: dict[int, list[tuple[int, int]]] = {i: [] for i in range(1, self.n + 1)}
        for j, c in enumerate(self.clauses, 1):
            for q, v in enumerate(c, 1):
                occ[v].append((j, q))
        return occ

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(sum(bool(assignment[v - 1]) for v in c) == 1 for c in self.clauses)


@dataclass(frozen=True)
class ThreePartitionInstance:
    values: tuple[int, ...]
    target: int
    check_range: bool = True

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values or len(self.values) % 3:
            raise InvalidInstance("need 3m values")
        if any(v <= 0 for v in self.values):
            raise InvalidInstance("values must be positive")
        if sum(self.values) != self.m * self.target:
            raise InvalidInstance(f"values sum to {sum(self.values)}, expected {self.m} * {self.target}")
        if self.check_range:
            for v in self.values:
                if not self.target < 4 * v < 2 * self.target:
                    raise InvalidInstance(f"value {v} outside ({self.target}/4, {self.target}/2)")

    @property
    def m(self) -> int:
        return len(self.values) // 3


def sat_brute(sat: SatInstance, max_vars: int = 24) -> tuple[bool, ...] | None:
    """First 1-in-3 assignment in lexicographic order with ``False < True``."""
    if sat.n > max_vars:
        raise BudgetExceeded(f"{sat.n} variables exceed the cap of {max_vars}")
    for assignment in itertools.product((False, True), repeat=sat.n):
        if sat.satisfied_by(assignment):
            return assignment
    return None


def threepart_brute(tp: ThreePartitionInstance, max_groups: int = 4) -> list[tuple[int, int, int]] | None:
    """First partition of value indices into triples that each sum to the target."""
    if tp.m > max_groups:
        raise BudgetExceeded(f"m = {tp.m} exceeds the cap of {max_groups}")
    vals = tp.values

    def rec(rest: tuple[int, ...]):
        if not rest:
            return []
        i, others = rest[0], rest[1:]
        for a, b in itertools.combinations(range(len(others)), 2):
            j, k = others[a], others[b]
            if vals[i] + vals[j] + vals[k] == tp.target:
                left = tuple(x for t, x in enumerate(others) if t not in (a, b))
                sub = rec(left)
                if sub is not None:
                    return [(i, j, k)] + sub
        return None

    return rec(tuple(range(len(vals))))


def brute_solve(inst: Instance, cap: int = DEFAULT_CELL_CAP, prune: bool = True) -> Solution | None:
    """Depth-first placement in column-major order.

    Every cell tries every still-available piece (any piece when swapping,
    otherwise only its own) in every allowed orientation and backtracks on
    the first violated edge. ``prune`` merges interchangeable pieces and
    identical orientations and remembers failed search states; the answer
    is the same either way.
    """
    n, m = inst.rows, inst.cols
    if n * m > cap:
        raise BudgetExceeded(f"{n * m} cells exceed the brute-force cap of {cap}")
    border = inst.border
    mono = border.color if border.kind == "mono" else None
    wrap_h, wrap_v = border.wraps_horizontally, border.wraps_vertically
    orients = inst.moves.orientations()
    swap = inst.moves.swap

    forms = []
    for p in inst.pieces:
        f = [(o, orient_piece(p, o)) for o in orients]
        if prune:
            first: dict[Piece, int] = {}
            for o, q in f:
                first.setdefault(q, o)
            f = [(o, q) for q, o in first.items()]
        forms.append(f)

    # interchangeable pieces share a class (only meaningful when swapping)
    if swap and prune:
        keys = [frozenset(q for _, q in f) for f in forms]
        class_of: dict[frozenset, int] = {}
        members: list[list[int]] = []
        for i, key in enumerate(keys):
            if key not in class_of:
                class_of[key] = len(members)
                members.append([])
            members[class_of[key]].append(i)
    else:
        members = [[i] for i in range(n * m)]
    counts = [len(c) for c in members]
    taken = [0] * len(members)

    board: list[list[Piece | None]] = [[None] * m for _ in range(n)]
    cells: list[tuple[int, int] | None] = [None] * (n * m)
    failed: set = set()

    def fits(q: Piece, r: int, c: int) -> bool:
        if c > 0 and q.left != board[r][c - 1].right:
            return False
        if r > 0 and q.top != board[r - 1][c].bottom:
            return False
        if c == m - 1 and wrap_h and q.right != (q.left if m == 1 else board[r][0].left):
            return False
        if r == n - 1 and wrap_v and q.bottom != (q.top if n == 1 else board[0][c].top):
            return False
        if mono is not None:
            if (r == 0 and q.top != mono) or (r == n - 1 and q.bottom != mono):
                return False
            if (c == 0 and q.left != mono) or (c == m - 1 and q.right != mono):
                return False
        return True

    def state_key(k: int) -> tuple:
        r, c = k % n, k // n
        exposed = [board[i % n][i // n].right for i in range(max(0, k - n), k)]
        if r > 0:
            exposed.append(board[r - 1][c].bottom)
            if wrap_v:
                exposed.append(board[0][c].top)
        if wrap_h and k >= n:
            exposed.extend(board[i][0].left for i in range(n))
        return k, tuple(taken) if swap else (), tuple(exposed)

    def dfs(k: int) -> bool:
        if k == n * m:
            return True
        if prune:
            key = state_key(k)
            if key in failed:
                return False
        r, c = k % n, k // n
        if not swap:
            candidates = (r * m + c,)  # pieces are listed row-major
        elif k == 0 and n == 1 and wrap_h:
            # every cyclic shift of a solution is one: piece 0 may go first
            candidates = (0,)
        else:
            candidates = range(len(members))
        for cls in candidates:
            if taken[cls] == counts[cls]:
                continue
            idx = members[cls][taken[cls]]
            for o, q in forms[idx]:
                if not fits(q, r, c):
                    continue
                board[r][c] = q
                cells[k] = (idx, o)
                taken[cls] += 1
                if dfs(k + 1):
                    return True
                taken[cls] -= 1
            board[r][c] = None
        if prune:
            failed.add(key)
        return False

    if not dfs(0):
        return None
    grid = [[cells[c * n + r] for c in range(m)] for r in range(n)]
    return Solution(grid)
