from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _support import all_multigraphs, trail_exists_brute
from edgematch import MultiGraph, find_euler_circuit, find_euler_trail, has_euler_circuit, has_euler_trail
from edgematch.multigraph import is_valid_trail, trail_nodes


def test_four_color_example_trail():
    g = MultiGraph(5, edges=[(1, 2), (1, 3), (3, 4), (3, 4)])
    assert has_euler_trail(g) and not has_euler_circuit(g)
    trail = find_euler_trail(g)
    assert is_valid_trail(g, trail)
    assert trail_nodes(trail) == [2, 1, 3, 4, 3]


def test_loops_count_twice():
    g = MultiGraph(2, edges=[(0, 0)])
    assert g.degrees() == [2, 0]
    assert has_euler_circuit(g)
    assert trail_nodes(find_euler_circuit(g)) == [0, 0]


def test_disconnected_graph_has_no_trail():
    g = MultiGraph(4, edges=[(0, 1), (2, 3)])
    assert not has_euler_trail(g)
    assert find_euler_trail(g) is None


def test_directed_trail_starts_at_surplus_node():
    g = MultiGraph(3, directed=True, edges=[(1, 0), (0, 2), (2, 0)])
    trail = find_euler_trail(g)
    assert trail[0].tail == 1
    assert is_valid_trail(g, trail)
    assert find_euler_circuit(g) is None


def test_empty_graph():
    g = MultiGraph(3)
    assert has_euler_trail(g) and has_euler_circuit(g)
    assert find_euler_trail(g) == []


def test_bad_edge():
    with pytest.raises(ValueError):
        MultiGraph(2, edges=[(0, 2)])


@pytest.mark.parametrize("directed", [False, True])
def test_exhaustive_small_graphs(directed):
    count = 0
    for g in all_multigraphs(4, 5 if not directed else 4, directed):
        count += 1
        trail = find_euler_trail(g)
        circuit = find_euler_circuit(g)
        assert has_euler_trail(g) == trail_exists_brute(g) == (trail is not None)
        assert has_euler_circuit(g) == trail_exists_brute(g, closed=True) == (circuit is not None)
        if trail is not None:
            assert is_valid_trail(g, trail)
        if circuit is not None:
            assert is_valid_trail(g, circuit, closed=True)
    assert count > 1000


edges = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=14)


@given(edges, st.booleans())
def test_constructed_trails_are_valid(es, directed):
    g = MultiGraph(6, directed, es)
    trail = find_euler_trail(g)
    assert (trail is not None) == has_euler_trail(g)
    if trail is not None:
        assert is_valid_trail(g, trail)
        assert sorted(s.edge for s in trail) == list(range(len(es)))
