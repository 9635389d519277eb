"""Multigraphs over color nodes and Euler trails / circuits.

Loops are allowed and count twice towards an undirected node's degree.
Nodes without any incident edge are ignored when checking connectivity.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, NamedTuple


class Step(NamedTuple):
    """One edge instance of a trail, walked from ``tail`` to ``head``."""

    edge: int
    tail: int
    head: int


Trail = list  # list[Step]


class MultiGraph:
    def __init__(self, node_count: int, directed: bool = False, edges: Iterable[tuple[int, int]] = ()):
        self.node_count = node_count
        self.directed = directed
        self.edges: list[tuple[int, int]] = []
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> int:
        if not (0 <= u < self.node_count and 0 <= v < self.node_count):
            raise ValueError(f"edge ({u}, {v}) outside node range [0, {self.node_count})")
        self.edges.append((u, v))
        return len(self.edges) - 1

    def __len__(self):
        return len(self.edges)

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"MultiGraph({self.node_count}, {kind}, edges={self.edges})"

    def multiplicity(self) -> Counter:
        """Edge multiplicities keyed by node pair (sorted pair when undirected)."""
        if self.directed:
            return Counter(self.edges)
        return Counter((min(u, v), max(u, v)) for u, v in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.node_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def in_out(self) -> tuple[list[int], list[int]]:
        ins = [0] * self.node_count
        outs = [0] * self.node_count
        for u, v in self.edges:
            outs[u] += 1
            ins[v] += 1
        return ins, outs

    def is_connected(self) -> bool:
        """Weak connectivity over nodes that carry at least one edge."""
        parent = list(range(self.node_count))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        roots = {find(a) for e in self.edges for a in e}
        return len(roots) <= 1

    def _imbalance(self) -> list[int]:
        ins, outs = self.in_out()
        return [o - i for i, o in zip(ins, outs)]


def has_euler_trail(g: MultiGraph) -> bool:
    if not g.edges:
        return True
    if not g.is_connected():
        return False
    if g.directed:
        diff = sorted(d for d in g._imbalance() if d)
        return diff == [] or diff == [-1, 1]
    return sum(d % 2 for d in g.degrees()) in (0, 2)


def has_euler_circuit(g: MultiGraph) -> bool:
    if not g.edges:
        return True
    if not g.is_connected():
        return False
    if g.directed:
        return not any(g._imbalance())
    return not any(d % 2 for d in g.degrees())


def _hierholzer(g: MultiGraph, start: int) -> Trail:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.node_count)]
    for e, (u, v) in enumerate(g.edges):
        adj[u].append((e, v))
        if not g.directed and u != v:
            adj[v].append((e, u))
    used = [False] * len(g.edges)
    ptr = [0] * g.node_count
    stack: list[tuple[int, Step | None]] = [(start, None)]
    out: Trail = []
    while stack:
        u, via = stack[-1]
        nbrs = adj[u]
        i = ptr[u]
        while i < len(nbrs) and used[nbrs[i][0]]:
            i += 1
        ptr[u] = i
        if i < len(nbrs):
            e, v = nbrs[i]
            used[e] = True
            stack.append((v, Step(e, u, v)))
        else:
            stack.pop()
            if via is not None:
                out.append(via)
    out.reverse()
    return out


def _trail_start(g: MultiGraph) -> int:
    if g.directed:
        for a, d in enumerate(g._imbalance()):
            if d == 1:
                return a
        return min(u for u, _ in g.edges)
    deg = g.degrees()
    for a, d in enumerate(deg):
        if d % 2:
            return a
    return min(a for a, d in enumerate(deg) if d)


def find_euler_trail(g: MultiGraph) -> Trail | None:
    """An Euler trail of ``g`` or ``None``.

    Starts at the smallest admissible node and always takes the unused edge
    with the smallest index, so the result is deterministic.
    """
    if not has_euler_trail(g):
        return None
    if not g.edges:
        return []
    return _hierholzer(g, _trail_start(g))


def find_euler_circuit(g: MultiGraph) -> Trail | None:
    if not has_euler_circuit(g):
        return None
    if not g.edges:
        return []
    return _hierholzer(g, min(min(e) for e in g.edges))


def is_valid_trail(g: MultiGraph, trail: Trail, closed: bool = False) -> bool:
    """Check that ``trail`` walks every edge of ``g`` exactly once."""
    if sorted(s.edge for s in trail) != list(range(len(g.edges))):
        return False
    for s in trail:
        u, v = g.edges[s.edge]
        if (s.tail, s.head) != (u, v) and (g.directed or (s.tail, s.head) != (v, u)):
            return False
    for a, b in zip(trail, trail[1:]):
        if a.head != b.tail:
            return False
    if closed and trail and trail[0].tail != trail[-1].head:
        return False
    return True


def trail_nodes(trail: Trail) -> list[int]:
    """Node sequence visited by ``trail``."""
    if not trail:
        return []
    return [trail[0].tail] + [s.head for s in trail]
