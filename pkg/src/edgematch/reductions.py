"""Hardness gadgets: Monotone 1-in-3-SAT to a single row with swaps and
rotations, and 3-partition to a two-row board with swaps only.

Both directions are constructive: a certificate of the source problem is
turned into a verified placement, and any verified placement is decoded back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import (
    CYCLIC_H,
    FREE,
    Border,
    DecodingError,
    Instance,
    Moves,
    Piece,
    ReductionError,
    Solution,
    orient_piece,
    verify_solution,
)
from .oracle import SatInstance, ThreePartitionInstance


@dataclass
class GadgetMap:
    """Provenance of every generated piece and the name of every color id."""

    instance: Instance | None = None
    colors: dict[str, int] = field(default_factory=dict)
    roles: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)
    index: dict[tuple[str, tuple[int, ...]], int] = field(default_factory=dict)

    def color(self, name: str) -> int:
        if name not in self.colors:
            self.colors[name] = len(self.colors)
        return self.colors[name]

    def add_piece(self, pieces: list, role: str, indices: tuple[int, ...], piece) -> None:
        self.index[(role, indices)] = len(pieces)
        self.roles.append((role, indices))
        pieces.append(Piece(*piece))

    @property
    def num_colors(self) -> int:
        return 1 + max(self.colors.values(), default=-1)

    def records(self) -> list[dict]:
        """One record per piece: index, role, role indices and named edge colors."""
        names = {}
        for name, cid in self.colors.items():
            names.setdefault(cid, name)
        out = []
        for i, (role, idx) in enumerate(self.roles):
            p = self.instance.pieces[i]
            out.append({
                "index": i,
                "role": role,
                "indices": list(idx),
                "colors": {side: names[c] for side, c in zip(Piece._fields, p)},
            })
        return out

    def sidecar(self) -> str:
        """Annotation sidecar: JSON lines, one per piece."""
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records())


@dataclass
class SatGadgetMap(GadgetMap):
    pass


@dataclass
class BarGadgetMap(GadgetMap):
    bar_pieces: list[list[int]] = field(default_factory=list)
    separator_columns: list[int] = field(default_factory=list)


def _positions(sol: Solution) -> dict[int, tuple[int, int, int]]:
    """piece index -> (row, col, orientation)"""
    return {idx: (r, c, o) for r, row in enumerate(sol.grid) for c, (idx, o) in enumerate(row)}


# --- Monotone 1-in-3-SAT -------------------------------------------------


def encode_sat(sat: SatInstance, literal_singletons: bool = False) -> tuple[Instance, SatGadgetMap]:
    """Build the ``1 x 10m`` swap+rotate board with cyclic left/right border.

    Colors: ``l`` = 0, then per clause ``f``, ``t``, ``t'`` (three each) and
    ``s``, then the ``a`` chain colors variable by variable. A variable that
    occurs once gets the accordance piece ``(t', l, t, l)``; pass
    ``literal_singletons=True`` for the all-``l`` variant, which cannot be
    set true.
    """
    if sat.allow_repeats and any(len(set(c)) != 3 for c in sat.clauses):
        raise ReductionError("the gadget needs three distinct variables per clause")
    g = SatGadgetMap()
    ell = g.color("l")
    for j in range(1, sat.m + 1):
        for name in ("f", "t", "t'"):
            for q in (1, 2, 3):
                g.color(f"{name}[{j},{q}]")
        g.color(f"s[{j}]")
    occ = sat.occurrences()
    for i in range(1, sat.n + 1):
        for k in range(1, len(occ[i])):
            g.color(f"a[{i},{k}]")

    pieces: list[Piece] = []
    for j in range(1, sat.m + 1):
        s = g.colors[f"s[{j}]"]
        for q in (1, 2, 3):
            f, t = g.colors[f"f[{j},{q}]"], g.colors[f"t[{j},{q}]"]
            g.add_piece(pieces, "V", (j, q), (f, t, s, ell))
        for q in (1, 2, 3):
            f, tp = g.colors[f"f[{j},{q}]"], g.colors[f"t'[{j},{q}]"]
            g.add_piece(pieces, "V'", (j, q), (ell, tp, f, ell))
        g.add_piece(pieces, "S", (j,), (s, s, s, s))
    for i in range(1, sat.n + 1):
        mi = len(occ[i])
        if mi == 1 and literal_singletons:
            g.add_piece(pieces, "A", (i, 1), (ell, ell, ell, ell))
            continue
        for k, (j, q) in enumerate(occ[i], 1):
            prev = ell if k == 1 else g.colors[f"a[{i},{k - 1}]"]
            nxt = ell if k == mi else g.colors[f"a[{i},{k}]"]
            t, tp = g.colors[f"t[{j},{q}]"], g.colors[f"t'[{j},{q}]"]
            g.add_piece(pieces, "A", (i, k), (tp, prev, t, nxt))

    inst = Instance(1, len(pieces), g.num_colors, CYCLIC_H, Moves(swap=True, rotate=True), tuple(pieces))
    g.instance = inst
    return inst, g


def solution_from_assignment(sat: SatInstance, gmap: SatGadgetMap, assignment) -> Solution:
    """Lay the pieces out clause by clause from a 1-in-3 assignment."""
    if len(assignment) != sat.n or not sat.satisfied_by(assignment):
        raise ReductionError("assignment does not set exactly one variable per clause")
    occ = sat.occurrences()
    at = gmap.index
    cells: list[tuple[int, int]] = []
    chained: set[int] = set()
    for j, clause in enumerate(sat.clauses, 1):
        q = next(q for q in (1, 2, 3) if assignment[clause[q - 1] - 1])
        i = clause[q - 1]
        k = occ[i].index((j, q)) + 1
        cells += [(at["V", (j, q)], 3), (at["A", (i, k)], 0), (at["V'", (j, q)], 1)]
        q1, q2 = (x for x in (1, 2, 3) if x != q)
        cells += [
            (at["V'", (j, q1)], 2), (at["V", (j, q1)], 2), (at["S", (j,)], 0),
            (at["V", (j, q2)], 0), (at["V'", (j, q2)], 0),
        ]
        for x in (q1, q2):
            r = clause[x - 1]
            if r not in chained:
                chained.add(r)
                cells += [(at["A", (r, kk)], 1) for kk in range(1, len(occ[r]) + 1)]
    return Solution.from_row(cells)


def clause_states(gmap: SatGadgetMap, sol: Solution) -> dict[int, tuple[bool, bool, bool]]:
    """Per clause, which value pieces ``V[j,q]`` sit in the true state
    (their ``f`` color faces the free top/bottom border)."""
    inst = gmap.instance
    pos = _positions(sol)
    out = {}
    for (role, idx), pi in gmap.index.items():
        if role != "V":
            continue
        j, q = idx
        o = pos[pi][2]
        p = orient_piece(inst.pieces[pi], o)
        f = gmap.colors[f"f[{j},{q}]"]
        out.setdefault(j, [None] * 3)[q - 1] = f not in (p.left, p.right)
    return {j: tuple(v) for j, v in sorted(out.items())}


def false_pairs_adjacent(gmap: SatGadgetMap, sol: Solution) -> dict[int, list[int]]:
    """Per clause, the ``q`` whose ``V[j,q]`` and ``V'[j,q]`` touch through ``f[j,q]``."""
    row = sol.placed(gmap.instance)[0]
    order = [idx for idx, _ in sol.grid[0]]
    m = len(order)
    out: dict[int, list[int]] = {}
    for a in range(m):
        b = (a + 1) % m
        ra, ia = gmap.roles[order[a]]
        rb, ib = gmap.roles[order[b]]
        if {ra, rb} == {"V", "V'"} and ia == ib and row[a].right == gmap.colors[f"f[{ia[0]},{ia[1]}]"]:
            out.setdefault(ia[0], []).append(ia[1])
    return {j: sorted(v) for j, v in sorted(out.items())}


def assignment_from_solution(sat: SatInstance, gmap: SatGadgetMap, sol: Solution) -> tuple[bool, ...]:
    if not verify_solution(gmap.instance, sol):
        raise DecodingError("solution does not solve the encoded board")
    states = clause_states(gmap, sol)
    value: dict[int, bool] = {}
    for j, clause in enumerate(sat.clauses, 1):
        if sum(states[j]) != 1:
            raise DecodingError(f"clause {j} has {sum(states[j])} value pieces in the true state")
        for q, v in enumerate(clause, 1):
            if value.setdefault(v, states[j][q - 1]) != states[j][q - 1]:
                raise DecodingError(f"variable x{v} is decoded inconsistently")
    return tuple(value.get(i, False) for i in range(1, sat.n + 1))


# --- 3-partition -----------------------------------------------------------


def encode_3part(tp: ThreePartitionInstance, border: str = "free") -> tuple[Instance, BarGadgetMap]:
    """Build the ``2 x (mS + m - 1)`` swap-only board.

    The upper row is a chain of pieces linked by colors ``u[0..M]`` that
    occur nowhere else, so its layout is forced; its bottom edges read ``%``
    except above the ``m - 1`` separator columns (``@``). The lower row takes
    one bar per value (left end ``$``, inner color ``x[i]``, right end
    ``$``) and the separators ``($, @, $, .)``.

    ``border="free"`` uses distinct blank colors on the top and bottom of
    the board so the two rows cannot trade places. ``border="mono"`` makes
    blank, ``$`` and the outer chain ends all color 0 and uses a
    monochrome border of that color.
    """
    if border not in ("free", "mono"):
        raise ReductionError(f"unsupported border {border!r}")
    m, S = tp.m, tp.target
    width = m * S + m - 1
    seps = [k * (S + 1) + S for k in range(m - 1)]
    g = BarGadgetMap()
    g.separator_columns = seps
    if border == "free":
        top, bottom, dollar = g.color("top"), g.color("bottom"), g.color("$")
        pct, at = g.color("%"), g.color("@")
        u = [g.color(f"u[{j}]") for j in range(width + 1)]
    else:
        top = bottom = dollar = g.color("blank")
        g.colors["$"] = dollar
        pct, at = g.color("%"), g.color("@")
        u = [top] + [g.color(f"u[{j}]") for j in range(1, width)] + [top]
    x = {i: g.color(f"x[{i}]") for i, v in enumerate(tp.values) if v > 1}

    pieces: list[Piece] = []
    sepset = set(seps)
    for j in range(width):
        g.add_piece(pieces, "upper", (j,), (u[j + 1], top, u[j], at if j in sepset else pct))
    for k in range(m - 1):
        g.add_piece(pieces, "separator", (k,), (dollar, at, dollar, bottom))
    for i, v in enumerate(tp.values):
        span = []
        for pos in range(v):
            left = dollar if pos == 0 else x[i]
            right = dollar if pos == v - 1 else x[i]
            span.append(len(pieces))
            g.add_piece(pieces, "bar", (i, pos), (right, pct, left, bottom))
        g.bar_pieces.append(span)

    b = FREE if border == "free" else Border.mono(top)
    inst = Instance(2, width, g.num_colors, b, Moves(swap=True), tuple(pieces))
    g.instance = inst
    return inst, g


def _check_partition(tp: ThreePartitionInstance, partition) -> list[tuple[int, ...]]:
    groups = [tuple(sorted(t)) for t in partition]
    flat = sorted(i for t in groups for i in t)
    if flat != list(range(len(tp.values))) or any(len(t) != 3 for t in groups):
        raise ReductionError("partition must split all value indices into triples")
    if any(sum(tp.values[i] for i in t) != tp.target for t in groups):
        raise ReductionError("every triple must sum to the target")
    if len(groups) != tp.m:
        raise ReductionError("partition has the wrong number of groups")
    return groups


def solution_from_partition(tp: ThreePartitionInstance, gmap: BarGadgetMap, partition) -> Solution:
    groups = _check_partition(tp, partition)
    width = gmap.instance.cols
    upper = [(gmap.index["upper", (j,)], 0) for j in range(width)]
    lower: list[tuple[int, int]] = []
    for k, group in enumerate(groups):
        for i in group:
            lower += [(pi, 0) for pi in gmap.bar_pieces[i]]
        if k < len(groups) - 1:
            lower.append((gmap.index["separator", (k,)], 0))
    return Solution((upper, lower))


def partition_from_solution(tp: ThreePartitionInstance, gmap: BarGadgetMap, sol: Solution) -> list[tuple[int, int, int]]:
    """Read the bars between separators on the lower row."""
    if not verify_solution(gmap.instance, sol):
        raise DecodingError("solution does not solve the encoded board")
    areas: list[list[int]] = [[]]
    current: list[int] | None = None  # [bar, pieces seen so far]
    for idx, _ in sol.grid[1]:
        role, ri = gmap.roles[idx]
        if role == "separator":
            if current:
                raise DecodingError("separator cuts through a bar")
            areas.append([])
            continue
        if role != "bar":
            raise DecodingError(f"piece {idx} ({role}) found in the lower row")
        i, pos = ri
        # interior pieces of one bar are identical, so only the ends are pinned
        if current is None:
            if pos != 0:
                raise DecodingError(f"bar {i} does not start with its left end")
            current = [i, 0]
        elif current[0] != i or pos == 0:
            raise DecodingError(f"bar {current[0]} is not laid out contiguously")
        current[1] += 1
        if pos == tp.values[i] - 1:
            if current[1] != tp.values[i]:
                raise DecodingError(f"bar {i} ends early")
            areas[-1].append(i)
            current = None
    if current:
        raise DecodingError("a bar runs off the edge of the board")
    groups = [tuple(sorted(a)) for a in areas]
    try:
        return sorted(_check_partition(tp, groups))
    except ReductionError as exc:
        raise DecodingError(str(exc)) from exc
