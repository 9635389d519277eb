"""Random instance generators for tests, benchmarks and the command line."""

from __future__ import annotations

import random
from typing import Sequence

from .core import FREE, Border, Instance, Moves, Piece, rotate_piece


def random_piece(rng: random.Random, num_colors: int) -> Piece:
    return Piece(*(rng.randrange(num_colors) for _ in range(4)))


def random_instance(
    rows: int,
    cols: int,
    num_colors: int,
    moves: Moves,
    border: Border = FREE,
    rng: random.Random | None = None,
) -> Instance:
    """Uniformly random edge colors; usually unsolvable for larger boards."""
    rng = rng or random.Random()
    pieces = tuple(random_piece(rng, num_colors) for _ in range(rows * cols))
    return Instance(rows, cols, num_colors, border, moves, pieces)


def solvable_row(
    cols: int,
    num_colors: int,
    moves: Moves,
    border: Border = FREE,
    rng: random.Random | None = None,
) -> Instance:
    """A single row built as a matching chain, then scrambled by ``moves``.

    Pieces are rotated randomly when rotation is allowed and shuffled when
    swapping is allowed, so the result always has a solution.
    """
    rng = rng or random.Random()
    seams = [rng.randrange(num_colors) for _ in range(cols + 1)]
    if border.wraps_horizontally:
        seams[-1] = seams[0]
    pieces = [
        Piece(seams[j + 1], rng.randrange(num_colors), seams[j], rng.randrange(num_colors))
        for j in range(cols)
    ]
    if moves.rotate:
        pieces = [rotate_piece(p, rng.randrange(4)) for p in pieces]
    if moves.swap:
        rng.shuffle(pieces)
    return Instance(1, cols, num_colors, border, moves, tuple(pieces))


def parse_clauses(text: str) -> list[tuple[int, ...]]:
    """``"1 2 3; 2 3 4"`` (or one clause per line) into integer triples."""
    out = []
    for chunk in text.replace("\n", ";").split(";"):
        if chunk.strip():
            out.append(tuple(int(v) for v in chunk.replace(",", " ").split()))
    return out


def parse_values(text: str | Sequence[int]) -> list[int]:
    if isinstance(text, str):
        return [int(v) for v in text.replace(",", " ").split()]
    return list(text)
