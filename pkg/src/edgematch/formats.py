"""Plain-text instance and solution files.

Instance file::

    edgematch v1
    N M K
    border free|mono:<c>|cyclic|cyclic-h
    moves <comma list of swap,rotate,flip>   (empty list allowed)
    r t l b                                  (N*M lines, row-major)

Solution file::

    edgematch-solution v1
    N M
    row col piece orientation                (N*M lines, row-major)

Orientations are written as ``0 90 180 270 H H90 V H270``.
"""

from __future__ import annotations

from .core import (
    ORIENTATION_NAMES,
    Border,
    Instance,
    InvalidInstance,
    Moves,
    Piece,
    Solution,
)

INSTANCE_MAGIC = "edgematch v1"
SOLUTION_MAGIC = "edgematch-solution v1"


class ParseError(InvalidInstance):
    """Malformed file; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class _Lines:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next(self, what: str) -> tuple[int, str]:
        if self.pos >= len(self.lines):
            raise ParseError(f"unexpected end of file, expected {what}", self.pos + 1)
        self.pos += 1
        return self.pos, self.lines[self.pos - 1]

    def finish(self) -> None:
        for i in range(self.pos, len(self.lines)):
            if self.lines[i].strip():
                raise ParseError("unexpected trailing content", i + 1)


def _fields(line: str) -> list[tuple[int, str]]:
    """Whitespace-separated tokens with their 1-based start columns."""
    out, i = [], 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        out.append((i + 1, line[i:j]))
        i = j
    return out


def _ints(lineno: int, line: str, count: int, what: str) -> list[int]:
    toks = _fields(line)
    if len(toks) != count:
        col = toks[count][0] if len(toks) > count else len(line) + 1
        raise ParseError(f"expected {count} integers ({what}), got {len(toks)}", lineno, col)
    out = []
    for col, tok in toks:
        if not tok.isdigit():
            raise ParseError(f"not a non-negative integer: {tok!r}", lineno, col)
        out.append(int(tok))
    return out


def parse_instance(text: str) -> Instance:
    src = _Lines(text)
    ln, line = src.next("header")
    if line.strip() != INSTANCE_MAGIC:
        raise ParseError(f"expected {INSTANCE_MAGIC!r}", ln)

    ln, line = src.next("dimensions")
    n, m, k = _ints(ln, line, 3, "N M K")
    for (col, _), v, name in zip(_fields(line), (n, m, k), "NMK"):
        if v < 1:
            raise ParseError(f"{name} must be positive", ln, col)

    ln, line = src.next("border line")
    toks = _fields(line)
    if len(toks) != 2 or toks[0][1] != "border":
        raise ParseError("expected 'border <rule>'", ln)
    col, rule = toks[1]
    if rule.startswith("mono:"):
        c = rule[5:]
        if not c.isdigit():
            raise ParseError(f"bad monochrome color {c!r}", ln, col + 5)
        if int(c) >= k:
            raise ParseError(f"border color {c} not below K = {k}", ln, col + 5)
        border = Border.mono(int(c))
    elif rule in ("free", "cyclic", "cyclic-h"):
        border = Border(rule)
    else:
        raise ParseError(f"unknown border rule {rule!r}", ln, col)

    ln, line = src.next("moves line")
    toks = _fields(line)
    if not toks or toks[0][1] != "moves" or len(toks) > 2:
        raise ParseError("expected 'moves <list>'", ln)
    names: list[str] = []
    if len(toks) == 2:
        col, listing = toks[1]
        for name in listing.split(","):
            if name not in Moves.NAMES:
                raise ParseError(f"unknown manipulation {name!r}", ln, col)
            if name in names:
                raise ParseError(f"manipulation {name!r} listed twice", ln, col)
            names.append(name)
            col += len(name) + 1
    moves = Moves.of(*names)

    pieces = []
    for _ in range(n * m):
        ln, line = src.next(f"piece {len(pieces)}")
        colors = _ints(ln, line, 4, "r t l b")
        for (col, _), c in zip(_fields(line), colors):
            if c >= k:
                raise ParseError(f"color {c} not below K = {k}", ln, col)
        pieces.append(Piece(*colors))
    src.finish()
    return Instance(n, m, k, border, moves, tuple(pieces))


def emit_instance(inst: Instance) -> str:
    lines = [
        INSTANCE_MAGIC,
        f"{inst.rows} {inst.cols} {inst.num_colors}",
        f"border {inst.border}",
        f"moves {inst.moves}".rstrip(),
    ]
    lines += [" ".join(map(str, p)) for p in inst.pieces]
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> Solution:
    src = _Lines(text)
    ln, line = src.next("header")
    if line.strip() != SOLUTION_MAGIC:
        raise ParseError(f"expected {SOLUTION_MAGIC!r}", ln)
    ln, line = src.next("dimensions")
    n, m = _ints(ln, line, 2, "N M")
    grid = [[None] * m for _ in range(n)]
    for _ in range(n * m):
        ln, line = src.next("cell record")
        toks = _fields(line)
        if len(toks) != 4:
            raise ParseError("expected 'row col piece orientation'", ln)
        vals = []
        for col, tok in toks[:3]:
            if not tok.isdigit():
                raise ParseError(f"not a non-negative integer: {tok!r}", ln, col)
            vals.append(int(tok))
        r, c, idx = vals
        col, name = toks[3]
        if name not in ORIENTATION_NAMES:
            raise ParseError(f"unknown orientation {name!r}", ln, col)
        if r >= n or c >= m:
            raise ParseError(f"cell ({r},{c}) outside {n}x{m}", ln)
        if grid[r][c] is not None:
            raise ParseError(f"cell ({r},{c}) given twice", ln)
        grid[r][c] = (idx, ORIENTATION_NAMES.index(name))
    src.finish()
    return Solution(grid)


def emit_solution(sol: Solution) -> str:
    n, m = sol.shape
    lines = [SOLUTION_MAGIC, f"{n} {m}"]
    for r, row in enumerate(sol.grid):
        for c, (idx, o) in enumerate(row):
            lines.append(f"{r} {c} {idx} {ORIENTATION_NAMES[o]}")
    return "\n".join(lines) + "\n"
