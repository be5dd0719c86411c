"""Perfect divisions and the hunt for minimal graphs that lack them.

A perfect division of G is a partition (A, B) of V(G) with G[A] perfect and
omega(G[B]) < omega(G).  G is perfectly divisible when every induced
subgraph has one.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from itertools import combinations

from .canon import CANONICAL_LIMIT, canonical_form
from .graph import Graph, GraphError, bits, delete_vertex, induced, to_mask
from .graph6 import to_graph6
from .patterns import is_perfect
from .solvers import clique_number
from .structure import HomogeneousWitness, find_homogeneous_set

log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 24
VERIFY_LIMIT = 12

WHOLE_GRAPH = "whole-graph"
VERTEX_CRITERION = "vertex-criterion"
EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class PerfectDivision:
    A: frozenset[int]
    B: frozenset[int]
    method: str
    vertex: int | None = None

    @property
    def label(self) -> str:
        return f"{self.method}({self.vertex})" if self.vertex is not None else self.method


def check_division(g: Graph, A: Iterable[int], B: Iterable[int]) -> bool:
    """Recompute every PerfectDivision invariant from scratch."""
    a, b = to_mask(A), to_mask(B)
    if a & b or a | b != g.vertex_mask:
        return False
    if not is_perfect(induced(g, a)):
        return False
    omega = clique_number(g)
    return omega == 0 or clique_number(g, b) < omega


def _exhaustive(g: Graph, omega: int) -> PerfectDivision | None:
    if g.n > EXHAUSTIVE_LIMIT:
        raise GraphError(f"exhaustive division search refuses n > {EXHAUSTIVE_LIMIT}")
    full = g.vertex_mask
    for size in range(g.n + 1):
        for chosen in combinations(range(g.n), size):
            b = to_mask(chosen)
            if clique_number(g, b) >= omega:
                continue
            if is_perfect(induced(g, full & ~b)):
                return PerfectDivision(frozenset(bits(full & ~b)), frozenset(chosen), EXHAUSTIVE)
    return None


def find_perfect_division(g: Graph, exhaustive: bool = True) -> PerfectDivision | None:
    """Whole graph if perfect; else the first vertex v (by index) whose
    non-neighbourhood M(v) induces a perfect graph, giving A = {v} + M(v) and
    B = N(v); else, optionally, exhaustive search by increasing |B|."""
    if is_perfect(g):
        return PerfectDivision(frozenset(g.vertices()), frozenset(), WHOLE_GRAPH)
    for v in range(g.n):
        m = g.non_neighbors(v)
        if is_perfect(induced(g, m)):
            # v is isolated in G[A], and every clique of N(v) extends by v
            div = PerfectDivision(frozenset(bits(m | (1 << v))), frozenset(bits(g.adj[v])), VERTEX_CRITERION, v)
            if not check_division(g, div.A, div.B):
                raise AssertionError(f"vertex criterion unsound at {v} on {to_graph6(g)!r}")
            return div
    if not exhaustive:
        return None
    return _exhaustive(g, clique_number(g))


def verify_perfectly_divisible(g: Graph) -> bool:
    """Check every non-empty induced subgraph for a perfect division."""
    if g.n > VERIFY_LIMIT:
        raise GraphError(f"verify_perfectly_divisible refuses n > {VERIFY_LIMIT}")
    for mask in range(1, 1 << g.n):
        if find_perfect_division(induced(g, mask)) is None:
            return False
    return True


@dataclass(frozen=True)
class Counterexample:
    graph: Graph
    reason: str  # "no-division" or "non-minimal-flag"
    homogeneous_set: HomogeneousWitness | None = None
    detail: str = ""


def sort_key(g: Graph) -> tuple[int, bytes]:
    return (g.n, canonical_form(g) if g.n <= CANONICAL_LIMIT else to_graph6(g))


def examine_counterexample(g: Graph) -> Counterexample:
    """Classify a graph with no perfect division.

    A genuine minimal counterexample has no homogeneous set; one with a
    homogeneous set, or with a deletion that is itself not perfectly
    divisible, is flagged rather than reported as minimal.
    """
    hom = find_homogeneous_set(g)
    if hom is not None:
        log.error("counterexample %s has a homogeneous set %s", to_graph6(g), sorted(hom.X))
        return Counterexample(g, "non-minimal-flag", hom, "homogeneous set present")
    if g.n - 1 <= VERIFY_LIMIT:
        for v in range(g.n):
            if not verify_perfectly_divisible(delete_vertex(g, v)):
                return Counterexample(g, "non-minimal-flag", None, f"G-{v} is not perfectly divisible")
    return Counterexample(g, "no-division")


def search_minimal_non_pd(
    class_filter: Callable[[Graph], bool] | None,
    n_max: int,
    source: Iterable[Graph],
) -> Counterexample | None:
    """Scan class members of ``source`` (n <= n_max) for a graph without a
    perfect division and return the least one by (size, canonical form).

    Minimality of the result is inherited from size-ordered scanning of a
    hereditary class; it is re-checked directly for n <= 13.
    """
    failures = []
    for g in source:
        if g.n > n_max:
            continue
        if class_filter is not None and not class_filter(g):
            continue
        if find_perfect_division(g) is None:
            failures.append(g)
    if not failures:
        return None
    return examine_counterexample(min(failures, key=sort_key))
