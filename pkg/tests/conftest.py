"""Shared oracles and fixtures.

The oracles here are deliberately naive and share no code with the
package beyond the ``Graph`` value type, so agreement is meaningful.
"""

from __future__ import annotations

import gzip
from functools import lru_cache
from itertools import combinations, permutations
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from forkfree.canon import enumerate_levels
from forkfree.graph import Graph, from_edges
from forkfree.graph6 import parse_graph6, to_graph6
from forkfree.patterns import is_fork_free

DATA = Path(__file__).resolve().parent.parent / "data"
GRAPHS8 = DATA / "graphs8.g6.gz"
GRAPHS9 = DATA / "graphs9.g6.gz"

# OEIS A000088, graphs on n unlabelled vertices
GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}


def adjacency_matrix(g: Graph) -> np.ndarray:
    m = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges():
        m[u, v] = m[v, u] = True
    return m


def subset_tables(g: Graph) -> tuple[list[int], list[int]]:
    """omega and chi of g[S] for every subset S, by dynamic programming over
    subsets.  Independent of the branch-and-bound solvers."""
    n = g.n
    size = 1 << n
    omega = [0] * size
    indep = [False] * size
    indep[0] = True
    for s in range(1, size):
        v = (s & -s).bit_length() - 1
        rest = s & (s - 1)
        omega[s] = max(omega[rest], 1 + omega[rest & g.adj[v]])
        indep[s] = indep[rest] and not (g.adj[v] & rest)
    chi = [0] * size
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        best = n + 1
        # the colour class of the lowest vertex: low plus an independent subset of rest
        sub = rest
        while True:
            cls = sub | low
            if indep[cls]:
                best = min(best, 1 + chi[s ^ cls])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
    return omega, chi


def brute_omega(g: Graph) -> int:
    return subset_tables(g)[0][-1] if g.n else 0


def brute_chi(g: Graph) -> int:
    return subset_tables(g)[1][-1] if g.n else 0


def perfect_by_definition(g: Graph) -> bool:
    omega, chi = subset_tables(g)
    return omega == chi


@lru_cache(maxsize=None)
def _injections(n: int, k: int) -> np.ndarray:
    return np.array(list(permutations(range(n), k)), dtype=np.intp).reshape(-1, k)


def naive_induced_map(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Lexicographically least injective map that is an induced embedding,
    by checking every injection at once."""
    k = pattern.n
    if k > host.n:
        return None
    if k == 0:
        return ()
    maps = _injections(host.n, k)
    a = adjacency_matrix(host)
    p = adjacency_matrix(pattern)
    ok = np.ones(len(maps), dtype=bool)
    for i, j in combinations(range(k), 2):
        ok &= a[maps[:, i], maps[:, j]] == p[i, j]
    hits = np.flatnonzero(ok)
    return tuple(int(x) for x in maps[hits[0]]) if len(hits) else None


def brute_canonical(g: Graph) -> tuple[int, ...]:
    """Minimum sorted edge list over all n! relabellings."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or key < best:
            best = key
    return (g.n,) + tuple(x for e in best for x in e)


def labelled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield from_edges(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


@lru_cache(maxsize=None)
def _levels(n_max: int) -> tuple[tuple[Graph, ...], ...]:
    return tuple(tuple(level) for level in enumerate_levels(n_max))


@pytest.fixture(scope="session")
def all_graphs_7() -> list[Graph]:
    """Every isomorphism class on 1..7 vertices."""
    return [g for level in _levels(7)[1:] for g in level]


@pytest.fixture(scope="session")
def fork_free_9(tmp_path_factory) -> Path:
    """Fork-free nine-vertex graphs, filtered once from the external stream."""
    out = tmp_path_factory.mktemp("ingest") / "fork-free-9.g6"
    with gzip.open(GRAPHS9, "rb") as src, open(out, "wb") as dst:
        for line in src:
            if line.strip():
                g = parse_graph6(line)
                if is_fork_free(g):
                    dst.write(to_graph6(g) + b"\n")
    return out


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [e for e, keep in zip(pairs, picks) if keep])


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
