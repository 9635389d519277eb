"""Pieces, boards, manipulations and the solution verifier.

Edge order is always ``(right, top, left, bottom)``. Orientations are small
integers: ``0..3`` are counter-clockwise quarter turns, ``4..7`` are a
horizontal mirror followed by ``0..3`` quarter turns (so ``6`` is the
vertical mirror).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence


class EdgeMatchError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInstance(EdgeMatchError, ValueError):
    pass


class InvalidSolution(EdgeMatchError, ValueError):
    """A solution that is structurally malformed for its instance.

    Raised instead of returning ``False`` from :func:`verify_solution`.
    """


class UnsupportedConfiguration(EdgeMatchError):
    """A solver was handed a board/move/border combination it does not cover."""


class BudgetExceeded(EdgeMatchError):
    pass


class ReductionError(EdgeMatchError, ValueError):
    """Input to an encoding or construction violates its precondition."""


class DecodingError(ReductionError):
    """A puzzle solution could not be mapped back to the source problem."""


class Piece(NamedTuple):
    right: int
    top: int
    left: int
    bottom: int


def rotate_piece(p: Sequence[int], r: int = 1) -> Piece:
    """Rotate ``p`` by ``r`` counter-clockwise quarter turns."""
    r %= 4
    if r == 0:
        return Piece(*p)
    # one CCW turn: old right edge ends up on top
    return Piece(*(p[(i - r) % 4] for i in range(4)))


def flip_piece(p: Sequence[int], horizontal: bool = True) -> Piece:
    r, t, l, b = p
    if horizontal:
        return Piece(l, t, r, b)
    return Piece(r, b, l, t)


ORIENTATION_NAMES = ("0", "90", "180", "270", "H", "H90", "V", "H270")


def orient_piece(p: Sequence[int], o: int) -> Piece:
    if o < 4:
        return rotate_piece(p, o)
    return rotate_piece(flip_piece(p, True), o - 4)


def canonicalize_scheme(p: Sequence[int]) -> tuple[int, int, int, int]:
    """Lexicographically smallest cyclic rotation of the edge tuple."""
    p = tuple(p)
    return min(p[i:] + p[:i] for i in range(4))


@dataclass(frozen=True)
class ColorScheme:
    colors: tuple[int, int, int, int]
    count: int = 1

    def __post_init__(self):
        if canonicalize_scheme(self.colors) != tuple(self.colors):
            raise ValueError(f"{self.colors} is not in canonical cyclic order")
        if self.count < 0:
            raise ValueError("scheme count must be non-negative")

    @property
    def pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two opposing-edge color pairs ``({a,c}, {b,d})``, each sorted."""
        a, b, c, d = self.colors
        return tuple(sorted((a, c))), tuple(sorted((b, d)))

    @property
    def degenerate(self) -> bool:
        ac, bd = self.pairs
        return ac == bd


def scheme_counts(pieces: Iterable[Sequence[int]]) -> list[ColorScheme]:
    """Group pieces by color scheme, sorted by scheme."""
    counts = Counter(canonicalize_scheme(p) for p in pieces)
    return [ColorScheme(x, n) for x, n in sorted(counts.items())]


@dataclass(frozen=True)
class Border:
    kind: str = "free"
    color: int | None = None

    KINDS = ("free", "mono", "cyclic", "cyclic-h")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise InvalidInstance(f"unknown border rule {self.kind!r}")
        if (self.kind == "mono") != (self.color is not None):
            raise InvalidInstance("only a monochrome border carries a color")

    @classmethod
    def mono(cls, color: int) -> "Border":
        return cls("mono", color)

    @property
    def wraps_horizontally(self) -> bool:
        return self.kind in ("cyclic", "cyclic-h")

    @property
    def wraps_vertically(self) -> bool:
        return self.kind == "cyclic"

    def __str__(self):
        return f"mono:{self.color}" if self.kind == "mono" else self.kind


FREE = Border("free")
CYCLIC = Border("cyclic")
CYCLIC_H = Border("cyclic-h")


@dataclass(frozen=True)
class Moves:
    swap: bool = False
    rotate: bool = False
    flip: bool = False

    NAMES = ("swap", "rotate", "flip")

    @classmethod
    def of(cls, *names: str) -> "Moves":
        bad = set(names) - set(cls.NAMES)
        if bad:
            raise InvalidInstance(f"unknown manipulation(s): {sorted(bad)}")
        return cls(**{n: True for n in names})

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n in self.NAMES if getattr(self, n))

    def orientations(self) -> tuple[int, ...]:
        """Orientation codes a single piece may take under these moves.

        With flipping both mirror axes are available.
        """
        if self.rotate and self.flip:
            return tuple(range(8))
        if self.rotate:
            return (0, 1, 2, 3)
        if self.flip:
            return (0, 4, 6)
        return (0,)

    def __str__(self):
        return ",".join(self.names)


@dataclass(frozen=True)
class Instance:
    rows: int
    cols: int
    num_colors: int
    border: Border
    moves: Moves
    pieces: tuple[Piece, ...] = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(Piece(*p) for p in self.pieces))
        if self.rows < 1 or self.cols < 1 or self.num_colors < 1:
            raise InvalidInstance("rows, cols and num_colors must be positive")
        if len(self.pieces) != self.rows * self.cols:
            raise InvalidInstance(
                f"expected {self.rows * self.cols} pieces, got {len(self.pieces)}"
            )
        for i, p in enumerate(self.pieces):
            if any(not 0 <= c < self.num_colors for c in p):
                raise InvalidInstance(f"piece {i} {tuple(p)} has a color outside [0, {self.num_colors})")
        if self.border.kind == "mono" and not 0 <= self.border.color < self.num_colors:
            raise InvalidInstance("monochrome border color out of range")

    @classmethod
    def row(cls, pieces, moves: Moves, border: Border = FREE, num_colors: int | None = None):
        """Convenience constructor for a ``1 x M`` board."""
        pieces = [Piece(*p) for p in pieces]
        if num_colors is None:
            num_colors = 1 + max(max(p) for p in pieces)
        return cls(1, len(pieces), num_colors, border, moves, tuple(pieces))

    def relabel(self, perm: Sequence[int]) -> "Instance":
        """Apply the color permutation ``perm`` to every piece and the border."""
        border = Border.mono(perm[self.border.color]) if self.border.kind == "mono" else self.border
        pieces = tuple(Piece(*(perm[c] for c in p)) for p in self.pieces)
        return Instance(self.rows, self.cols, self.num_colors, border, self.moves, pieces)


Cell = tuple[int, int]  # (piece_index, orientation)


@dataclass(frozen=True)
class Solution:
    grid: tuple[tuple[Cell, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "grid", tuple(tuple((int(i), int(o)) for i, o in row) for row in self.grid)
        )

    @classmethod
    def from_row(cls, cells: Iterable[Cell]) -> "Solution":
        return cls((tuple(cells),))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.grid), len(self.grid[0]) if self.grid else 0

    def placed(self, inst: Instance) -> list[list[Piece]]:
        """Oriented pieces as they sit on the board."""
        return [[orient_piece(inst.pieces[i], o) for i, o in row] for row in self.grid]


def check_structure(inst: Instance, sol: Solution) -> None:
    """Raise :class:`InvalidSolution` unless ``sol`` is well-formed for ``inst``."""
    if len(sol.grid) != inst.rows or any(len(row) != inst.cols for row in sol.grid):
        raise InvalidSolution(f"solution shape {sol.shape} != board {inst.rows}x{inst.cols}")
    allowed = set(inst.moves.orientations())
    seen = []
    for r, row in enumerate(sol.grid):
        for c, (idx, o) in enumerate(row):
            if o not in allowed:
                raise InvalidSolution(f"orientation {o} at ({r},{c}) not allowed by moves {inst.moves}")
            if not inst.moves.swap and idx != r * inst.cols + c:
                raise InvalidSolution(f"piece {idx} moved to ({r},{c}) but swaps are not allowed")
            seen.append(idx)
    if sorted(seen) != list(range(inst.rows * inst.cols)):
        raise InvalidSolution("piece indices are not a permutation of the piece list")


def verify_solution(inst: Instance, sol: Solution) -> bool:
    check_structure(inst, sol)
    board = sol.placed(inst)
    n, m = inst.rows, inst.cols
    border = inst.border
    for r in range(n):
        for c in range(m):
            p = board[r][c]
            if c + 1 < m:
                if p.right != board[r][c + 1].left:
                    return False
            elif border.wraps_horizontally:
                if p.right != board[r][0].left:
                    return False
            if r + 1 < n:
                if p.bottom != board[r + 1][c].top:
                    return False
            elif border.wraps_vertically:
                if p.bottom != board[0][c].top:
                    return False
    if border.kind == "mono":
        k = border.color
        for c in range(m):
            if board[0][c].top != k or board[n - 1][c].bottom != k:
                return False
        for r in range(n):
            if board[r][0].left != k or board[r][m - 1].right != k:
                return False
    return True
