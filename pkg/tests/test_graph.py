from __future__ import annotations

import pytest
from hypothesis import given

from conftest import brute_chi, brute_omega, graphs
from forkfree.graph import (
    Graph,
    GraphError,
    add_vertex,
    complement,
    complete_graph,
    components,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    empty_graph,
    from_edges,
    induced,
    is_connected,
    join,
    path_graph,
    petersen_graph,
    relabel,
)


def test_rejects_loops_and_bad_endpoints():
    with pytest.raises(GraphError):
        from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        from_edges(65, [])


def test_constructor_validates_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))  # loop
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0))  # out of range
    assert Graph(2, (0b10, 0b01)).edge_count() == 1


def test_basic_queries():
    g = path_graph(4)
    assert g.neighbors(1) == [0, 2]
    assert g.degrees() == [1, 2, 2, 1]
    assert g.non_neighbors(0) == 0b1100
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.is_clique(0b0011) and not g.is_clique(0b0111)
    assert g.is_independent(0b0101)


def test_induced_relabels_in_index_order():
    g = cycle_graph(5)
    h = induced(g, [0, 2, 3])
    assert h.edges() == [(1, 2)]
    assert induced(g, 0b00111) == path_graph(3)
    with pytest.raises(GraphError):
        induced(g, 1 << 7)


def test_products_and_components():
    k2 = complete_graph(2)
    assert join(k2, empty_graph(2)).edge_count() == 5
    u = disjoint_union(k2, path_graph(3))
    assert components(u) == [0b00011, 0b11100]
    assert not is_connected(u)
    assert is_connected(join(empty_graph(2), empty_graph(2)))
    assert add_vertex(k2, 0b01).edges() == [(0, 1), (0, 2)]
    assert delete_vertex(cycle_graph(4), 0) == path_graph(3)


def test_petersen_invariants():
    p = petersen_graph()
    assert p.n == 10 and p.edge_count() == 15 and set(p.degrees()) == {3}
    assert brute_omega(p) == 2 and brute_chi(p) == 3


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g
    assert g.edge_count() + complement(g).edge_count() == g.n * (g.n - 1) // 2


@given(graphs(min_n=1))
def test_relabel_reverse_preserves_structure(g):
    order = list(reversed(range(g.n)))
    h = relabel(g, order)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert relabel(h, order) == g
