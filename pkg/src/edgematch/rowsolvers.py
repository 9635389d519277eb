"""Polynomial and FPT solvers for single-row boards.

=====================  ==================  ==============================
moves                  border              method
=====================  ==================  ==============================
swap, flip             free / cyclic-h     undirected Euler trail/circuit
swap                   free / cyclic-h     directed Euler trail/circuit
rotate                 free                left-to-right fit sets, O(M)
swap, rotate           free / cyclic-h     scheme partitions, FPT in K
=====================  ==================  ==============================
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .core import (
    BudgetExceeded,
    ColorScheme,
    Instance,
    Moves,
    Solution,
    UnsupportedConfiguration,
    canonicalize_scheme,
    orient_piece,
    rotate_piece,
)
from .multigraph import (
    MultiGraph,
    find_euler_circuit,
    find_euler_trail,
    has_euler_circuit,
    has_euler_trail,
)

DEFAULT_BUDGET = 10**7


def _require(inst: Instance, moves: Moves, borders: Sequence[str]) -> None:
    if inst.rows != 1:
        raise UnsupportedConfiguration(f"single-row solver got {inst.rows} rows")
    if inst.moves != moves:
        raise UnsupportedConfiguration(f"solver needs moves {{{moves}}}, instance has {{{inst.moves}}}")
    if inst.border.kind not in borders:
        raise UnsupportedConfiguration(f"unsupported border rule {inst.border}")


def _euler(g: MultiGraph, closed: bool):
    return find_euler_circuit(g) if closed else find_euler_trail(g)


def solve_swap_flip(inst: Instance) -> Solution | None:
    """Each piece is an undirected edge between its left and right colors."""
    _require(inst, Moves(swap=True, flip=True), ("free", "cyclic-h"))
    g = MultiGraph(inst.num_colors, directed=False, edges=((p.left, p.right) for p in inst.pieces))
    trail = _euler(g, inst.border.kind == "cyclic-h")
    if trail is None:
        return None
    cells = []
    for e, u, v in trail:
        p = inst.pieces[e]
        cells.append((e, 0 if (p.left, p.right) == (u, v) else 4))
    return Solution.from_row(cells)


def solve_swap_only(inst: Instance) -> Solution | None:
    """Each piece is a directed edge ``left -> right``."""
    _require(inst, Moves(swap=True), ("free", "cyclic-h"))
    g = MultiGraph(inst.num_colors, directed=True, edges=((p.left, p.right) for p in inst.pieces))
    trail = _euler(g, inst.border.kind == "cyclic-h")
    if trail is None:
        return None
    return Solution.from_row((s.edge, 0) for s in trail)


@dataclass(frozen=True)
class FitSets:
    L: frozenset
    R: frozenset


def fit_sets(p: Sequence[int], incoming: frozenset | None = None) -> FitSets:
    """Colors ``p`` can show on its left edge, and on its right edge given
    that its left edge must be one of ``incoming`` (``None``: unconstrained).
    """
    left = frozenset(p)
    if incoming is None:
        return FitSets(left, left)
    right = set()
    for r in range(4):
        q = rotate_piece(p, r)
        if q.left in incoming:
            right.add(q.right)
    return FitSets(left, frozenset(right))


def solve_rotations_only(inst: Instance) -> Solution | None:
    """Linear sweep keeping, per piece, the reachable right-edge colors."""
    _require(inst, Moves(rotate=True), ("free",))
    # back[i][color] = rotation + 4 * (left color + 1), the rotation that puts
    # `color` on the right of piece i and the color it then shows on its left
    # (0 for the first piece). Plain ints keep the dicts out of the cyclic GC.
    back: list[dict[int, int]] = []
    reach: dict[int, int] | None = None
    for p in inst.pieces:
        cur: dict[int, int] = {}
        for r in range(4):
            right, left = p[-r % 4], p[(2 - r) % 4]
            if right in cur:
                continue
            if reach is None:
                cur[right] = r
            elif left in reach:
                cur[right] = r + 4 * (left + 1)
        if not cur:
            return None
        back.append(cur)
        reach = cur
    rots = [0] * len(back)
    color = min(back[-1])
    for i in range(len(back) - 1, -1, -1):
        code = back[i][color]
        rots[i], color = code % 4, code // 4 - 1
    return Solution.from_row(enumerate(rots))


# --- swap + rotate -------------------------------------------------------


@dataclass(frozen=True)
class SchemePartition:
    """How many pieces of ``scheme`` become ``{a,c}`` resp. ``{b,d}`` edges."""

    scheme: ColorScheme
    n_ac: int
    n_bd: int

    def __post_init__(self):
        if self.n_ac + self.n_bd != self.scheme.count or min(self.n_ac, self.n_bd) < 0:
            raise ValueError(f"invalid split ({self.n_ac}, {self.n_bd}) of {self.scheme}")


def reduce_scheme_counts(schemes: Sequence[ColorScheme]) -> list[ColorScheme]:
    """Cap counts at 4 (even) or 3 (odd); parity and positivity survive."""
    out = []
    for x in schemes:
        n = x.count
        if n > 4:
            n = 4 if n % 2 == 0 else 3
        out.append(ColorScheme(x.colors, n))
    return out


def enumerate_partitions(scheme: ColorScheme) -> list[SchemePartition]:
    if scheme.degenerate:
        return [SchemePartition(scheme, scheme.count, 0)]
    n = scheme.count
    return [SchemePartition(scheme, i, n - i) for i in range(n + 1)]


def _scheme_order(schemes: Sequence[ColorScheme]) -> list[int]:
    """Greedy processing order that keeps few colors open at a time.

    Picks, among the remaining schemes, the one opening the fewest new
    colors net of the colors it finishes; ties go to the lower index.
    """
    remaining_uses = defaultdict(int)
    for x in schemes:
        for a in set(x.colors):
            remaining_uses[a] += 1
    seen: set[int] = set()
    todo = list(range(len(schemes)))
    order = []
    while todo:
        def cost(i):
            cols = set(schemes[i].colors)
            return len(cols - seen) - sum(remaining_uses[a] == 1 for a in cols), i

        i = min(todo, key=cost)
        todo.remove(i)
        order.append(i)
        for a in set(schemes[i].colors):
            seen.add(a)
            remaining_uses[a] -= 1
    return order


class _Frontier:
    """Transition function of the connectivity/parity DP.

    A state records, for every open color (seen but not finished), whether
    it has an edge yet, which component it is in and its degree parity;
    plus the number of finished odd colors and whether a component has
    already been closed off.
    """

    def __init__(self, schemes, order, max_odd):
        self.max_odd = max_odd
        last = {}
        for step, i in enumerate(order):
            for a in schemes[i].colors:
                last[a] = step
        self.open_before = []
        self.open_after = []
        opened: list[int] = []
        for step, i in enumerate(order):
            self.open_before.append(tuple(opened))
            for a in sorted(set(schemes[i].colors)):
                if a not in opened:
                    opened.append(a)
            opened = [a for a in opened if last[a] > step]
            self.open_after.append(tuple(opened))

    def step(self, k, state, edges):
        codes, odd_done, closed = state
        if closed and edges:
            return None
        label: dict[int, int] = {}
        parity: dict[int, int] = {}
        for a, code in zip(self.open_before[k], codes):
            if code >= 0:
                label[a], parity[a] = divmod(code, 2)
        fresh = len(codes) + 1
        for a, c, odd in edges:
            la, lc = label.get(a), label.get(c)
            if la is None and lc is None:
                label[a] = label[c] = fresh
                fresh += 1
            elif la is None:
                label[a] = lc
            elif lc is None or la == lc:
                label[c] = la
            else:
                for x, l in label.items():
                    if l == lc:
                        label[x] = la
            if odd:
                parity[a] = parity.get(a, 0) ^ 1
                parity[c] = parity.get(c, 0) ^ 1
        keep = self.open_after[k]
        kept_labels = {label[a] for a in keep if a in label}
        for a in label:
            if a in keep:
                continue
            if parity.get(a, 0):
                odd_done += 1
        if odd_done > self.max_odd:
            return None
        gone = {label[a] for a in label if a not in keep} - kept_labels
        if gone:
            if closed or len(gone) > 1 or kept_labels:
                return None
            closed = True
        relabel: dict[int, int] = {}
        out = []
        for a in keep:
            if a in label:
                l = relabel.setdefault(label[a], len(relabel))
                out.append(2 * l + parity.get(a, 0))
            else:
                out.append(-1)
        return tuple(out), odd_done, closed


def _edge_effects(part: SchemePartition) -> tuple[tuple[int, int, bool], ...]:
    return tuple(
        (a, c, bool(k % 2) and a != c)
        for (a, c), k in zip(part.scheme.pairs, (part.n_ac, part.n_bd))
        if k
    )


def _euler_ok(edges, closed: bool) -> bool:
    g = MultiGraph(1 + max((max(a, c) for a, c, _ in edges), default=0))
    for a, c, odd in edges:
        g.add_edge(a, c)
        if not odd:
            g.add_edge(a, c)
    return has_euler_circuit(g) if closed else has_euler_trail(g)


def swap_rotate_decision(
    schemes: Sequence[ColorScheme],
    closed: bool = False,
    method: str = "states",
    budget: int = DEFAULT_BUDGET,
) -> list[SchemePartition] | None:
    """Search split choices for every scheme so that the induced multigraph
    has an Euler trail (``closed=False``) or circuit.

    Only parity and positivity of each split matter, so every split is
    stood in for by one edge (odd count) or a doubled edge (even count).

    ``method="enumerate"`` walks the full product of splits in
    lexicographic order. ``method="states"`` runs a dynamic program over
    the schemes in :func:`_scheme_order` that forgets finished colors; the
    witness is the first successful choice in that processing order.
    Returns one split per input scheme, or ``None``.
    """
    schemes = list(schemes)
    if any(x.count <= 0 for x in schemes):
        raise ValueError("scheme counts must be positive")
    options = [enumerate_partitions(x) for x in schemes]
    effects = [[_edge_effects(p) for p in opts] for opts in options]
    if method == "enumerate":
        total = 1
        for opts in options:
            total *= len(opts)
        if total > budget:
            raise BudgetExceeded(f"{total} partition combinations exceed budget {budget}")
        for combo in itertools.product(*(range(len(o)) for o in options)):
            edges = [e for i, k in enumerate(combo) for e in effects[i][k]]
            if _euler_ok(edges, closed):
                return [options[i][k] for i, k in enumerate(combo)]
        return None
    if method != "states":
        raise ValueError(f"unknown method {method!r}")

    order = _scheme_order(schemes)
    fr = _Frontier(schemes, order, 0 if closed else 2)
    start = ((), 0, False)
    layers = [{start}]
    work = 0
    for k, i in enumerate(order):
        nxt = set()
        for state in layers[-1]:
            for eff in effects[i]:
                s2 = fr.step(k, state, eff)
                if s2 is not None:
                    nxt.add(s2)
        work += len(layers[-1]) * len(effects[i])
        if work > budget:
            raise BudgetExceeded(f"state search exceeded budget {budget}")
        if not nxt:
            return None
        layers.append(nxt)
    # every color is finished at the end, so any surviving state is a success
    alive = layers[-1]
    alive_at = [None] * len(layers)
    alive_at[-1] = alive
    for k in range(len(order) - 1, -1, -1):
        i = order[k]
        alive_at[k] = {
            s for s in layers[k]
            if any(fr.step(k, s, eff) in alive_at[k + 1] for eff in effects[i])
        }
    choice: list[SchemePartition | None] = [None] * len(schemes)
    state = start
    for k, i in enumerate(order):
        for opt, eff in zip(options[i], effects[i]):
            s2 = fr.step(k, state, eff)
            if s2 is not None and s2 in alive_at[k + 1]:
                choice[i] = opt
                state = s2
                break
    return choice


def _lift(part: SchemePartition, count: int) -> tuple[int, int]:
    """Spread the removed (even) surplus onto a side that is already used."""
    extra = count - part.scheme.count
    if part.n_ac > 0:
        return part.n_ac + extra, part.n_bd
    return part.n_ac, part.n_bd + extra


def solve_swap_rotate(
    inst: Instance,
    method: str = "states",
    budget: int = DEFAULT_BUDGET,
) -> Solution | None:
    """Decide on reduced scheme counts, then build a witness on the full set."""
    _require(inst, Moves(swap=True, rotate=True), ("free", "cyclic-h"))
    closed = inst.border.kind == "cyclic-h"
    keys = [canonicalize_scheme(p) for p in inst.pieces]
    members = defaultdict(list)
    for i, x in enumerate(keys):
        members[x].append(i)
    full = [ColorScheme(x, len(members[x])) for x in sorted(members)]
    choice = swap_rotate_decision(reduce_scheme_counts(full), closed, method, budget)
    if choice is None:
        return None

    g = MultiGraph(inst.num_colors)
    owner = []
    for x, part in zip(full, choice):
        n_ac, _ = _lift(part, x.count)
        a, b, c, d = x.colors
        for j, idx in enumerate(members[x.colors]):
            g.add_edge(*((a, c) if j < n_ac else (b, d)))
            owner.append(idx)
    trail = _euler(g, closed)
    if trail is None:  # pragma: no cover - guarded by the decision
        raise AssertionError("lifted partition lost its Euler property")
    cells = []
    for e, u, v in trail:
        idx = owner[e]
        p = inst.pieces[idx]
        r = next(r for r in range(4) if (q := orient_piece(p, r)).left == u and q.right == v)
        cells.append((idx, r))
    return Solution.from_row(cells)
