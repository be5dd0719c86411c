from __future__ import annotations

from hypothesis import given, settings

from conftest import brute_chi, brute_omega, graphs
from forkfree.graph import complete_graph, cycle_graph, empty_graph, petersen_graph
from forkfree.solvers import chromatic_number, clique_number, exact_coloring, is_k_colorable, is_proper, maximum_clique


def test_small_known_values():
    assert clique_number(empty_graph(0)) == 0 and chromatic_number(empty_graph(0)) == 0
    assert chromatic_number(empty_graph(4)) == 1
    assert chromatic_number(cycle_graph(5)) == 3 and clique_number(cycle_graph(5)) == 2
    assert chromatic_number(complete_graph(6)) == 6
    assert chromatic_number(petersen_graph()) == 3
    assert maximum_clique(complete_graph(4)) == [0, 1, 2, 3]


def test_clique_within_mask():
    g = cycle_graph(5)
    assert clique_number(g, 0b00101) == 1
    assert clique_number(g, 0b00011) == 2


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_against_subset_dynamic_programming(g):
    assert clique_number(g) == brute_omega(g)
    colors = exact_coloring(g)
    assert is_proper(g, colors)
    assert (max(colors) + 1 if colors else 0) == brute_chi(g) == chromatic_number(g)
    clique = maximum_clique(g)
    assert len(clique) == brute_omega(g) and g.is_clique(sum(1 << v for v in clique))


@given(graphs(max_n=7))
def test_k_colorable_threshold(g):
    chi = chromatic_number(g)
    assert is_k_colorable(g, chi)
    assert chi == 0 or not is_k_colorable(g, chi - 1)


@given(graphs(max_n=8))
def test_coloring_is_deterministic(g):
    assert exact_coloring(g) == exact_coloring(g)
