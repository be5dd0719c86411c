from __future__ import annotations

from hypothesis import given, settings

from conftest import graphs, perfect_by_definition
from forkfree.classes import get_class
from forkfree.divisibility import (
    check_division,
    examine_counterexample,
    find_perfect_division,
    search_minimal_non_pd,
    verify_perfectly_divisible,
)
from forkfree.graph import complement, complete_graph, cycle_graph, from_edges, induced, petersen_graph
from forkfree.patterns import balloon_graph
from forkfree.solvers import clique_number


def test_perfect_graph_divides_as_a_whole():
    div = find_perfect_division(complete_graph(4))
    assert div.A == frozenset(range(4)) and div.B == frozenset() and div.method == "whole-graph"


def test_c5_uses_the_vertex_criterion():
    div = find_perfect_division(cycle_graph(5))
    assert (sorted(div.A), sorted(div.B), div.vertex) == ([0, 2, 3], [1, 4], 0)
    assert check_division(cycle_graph(5), div.A, div.B)


def test_check_division_rejects_bad_splits():
    g = cycle_graph(5)
    assert not check_division(g, range(5), [])  # C5 is not perfect
    assert not check_division(g, [0, 1], [2, 3])  # not a partition
    assert not check_division(g, [0, 2], [1, 3, 4])  # B holds an edge, omega(B) = omega


def test_odd_balloon_and_antihole():
    for g in (balloon_graph(5), balloon_graph(7), complement(cycle_graph(7))):
        div = find_perfect_division(g)
        assert div is not None and check_division(g, div.A, div.B)
    assert verify_perfectly_divisible(balloon_graph(5))


def test_petersen_graph_has_a_division():
    g = petersen_graph()
    div = find_perfect_division(g)
    assert check_division(g, div.A, div.B)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_divisions_are_valid_by_definition(g):
    div = find_perfect_division(g)
    if div is None:
        return
    a = sum(1 << v for v in div.A)
    assert perfect_by_definition(induced(g, a))
    omega = clique_number(g)
    assert not div.B or clique_number(g, sum(1 << v for v in div.B)) < omega


def test_search_finds_no_counterexample_in_class():
    from forkfree.canon import enumerate_up_to

    assert search_minimal_non_pd(get_class("fork-odd-balloon"), 6, enumerate_up_to(6)) is None


def test_mycielski_graph_is_not_divisible():
    # the Grotzsch graph: triangle-free with chi = 4, so no division exists
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, (i + 1) % 5) for i in range(5)] + [(5 + i, (i - 1) % 5) for i in range(5)]
    edges += [(10, 5 + i) for i in range(5)]
    g = from_edges(11, edges)
    assert find_perfect_division(g) is None
    cx = search_minimal_non_pd(None, 11, [cycle_graph(5), g])
    assert cx is not None and cx.graph == g
    assert examine_counterexample(g).reason in {"no-division", "non-minimal-flag"}


def test_verifier_examples():
    from forkfree.graph import empty_graph, join, path_graph

    assert verify_perfectly_divisible(cycle_graph(5))
    assert verify_perfectly_divisible(path_graph(6))
    wheel = join(empty_graph(1), cycle_graph(5))
    assert verify_perfectly_divisible(wheel)
    div = find_perfect_division(empty_graph(1))
    assert div.A == frozenset({0}) and div.B == frozenset()
