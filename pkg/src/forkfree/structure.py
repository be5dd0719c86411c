"""Homogeneous sets, anticonnectivity, bisimplicial/trisimplicial vertices,
and the neighbourhood audit of vertices hanging off odd holes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, bits, complement, components, induced, to_mask
from .patterns import iter_odd_holes
from .solvers import chromatic_number, exact_coloring


@dataclass(frozen=True)
class HomogeneousWitness:
    X: frozenset[int]
    complete_side: frozenset[int]
    anti_side: frozenset[int]

    def verify(self, g: Graph) -> bool:
        xmask = to_mask(self.X)
        if not 1 < len(self.X) < g.n:
            return False
        if self.complete_side & self.anti_side or self.X & (self.complete_side | self.anti_side):
            return False
        if self.complete_side | self.anti_side | self.X != frozenset(g.vertices()):
            return False
        return all(g.adj[v] & xmask == xmask for v in self.complete_side) and all(
            not g.adj[v] & xmask for v in self.anti_side
        )


def _splitters(g: Graph, xmask: int) -> int:
    """Vertices outside X with both a neighbour and a non-neighbour in X."""
    out = 0
    for v in bits(g.vertex_mask & ~xmask):
        hit = g.adj[v] & xmask
        if hit and hit != xmask:
            out |= 1 << v
    return out


def is_homogeneous_set(g: Graph, X) -> bool:
    xmask = X if isinstance(X, int) else to_mask(X)
    if not 1 < xmask.bit_count() < g.n:
        return False
    return _splitters(g, xmask) == 0


def expand_homogeneous_mask(g: Graph, xmask: int) -> int:
    while True:
        split = _splitters(g, xmask)
        if not split:
            return xmask
        xmask |= split & -split


def expand_homogeneous(g: Graph, X0) -> frozenset[int]:
    """Grow X0 by repeatedly adding the lowest-index vertex that has both a
    neighbour and a non-neighbour in the current set.

    The result is the least superset of X0 that no outside vertex splits, so
    it does not depend on the order in which vertices are added.
    """
    xmask = X0 if isinstance(X0, int) else to_mask(X0)
    if xmask.bit_count() < 2:
        raise ValueError("expand_homogeneous needs a seed of at least two vertices")
    return frozenset(bits(expand_homogeneous_mask(g, xmask)))


def homogeneous_witness(g: Graph, X) -> HomogeneousWitness:
    xmask = X if isinstance(X, int) else to_mask(X)
    rest = g.vertex_mask & ~xmask
    complete = frozenset(v for v in bits(rest) if g.adj[v] & xmask == xmask)
    return HomogeneousWitness(frozenset(bits(xmask)), complete, frozenset(bits(rest)) - complete)


def find_homogeneous_set(g: Graph) -> HomogeneousWitness | None:
    """Homogeneous set grown from the first seed pair whose closure is proper.

    Any homogeneous set H contains a pair, and the closure of that pair stays
    inside H, so trying every pair decides existence.
    """
    for u, v in combinations(range(g.n), 2):
        xmask = expand_homogeneous_mask(g, (1 << u) | (1 << v))
        if xmask != g.vertex_mask:
            return homogeneous_witness(g, xmask)
    return None


def anticonnected_components(g: Graph, X) -> list[frozenset[int]]:
    xmask = X if isinstance(X, int) else to_mask(X)
    return [frozenset(bits(c)) for c in components(complement(g), xmask)]


def _is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for start in range(g.n):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_bisimplicial(g: Graph, v: int) -> bool:
    """N(v) splits into two cliques iff the complement of G[N(v)] is bipartite."""
    return _is_bipartite(complement(induced(g, g.adj[v])))


def is_trisimplicial(g: Graph, v: int) -> bool:
    return chromatic_number(complement(induced(g, g.adj[v]))) <= 3


def clique_cover(g: Graph, v: int, parts: int) -> list[list[int]] | None:
    """Split N(v) into at most ``parts`` cliques (a proper colouring of the
    complement of G[N(v)]), or None."""
    nbrs = g.neighbors(v)
    colors = exact_coloring(complement(induced(g, g.adj[v])))
    if colors and max(colors) + 1 > parts:
        return None
    cover: list[list[int]] = [[] for _ in range(parts)]
    for w, c in zip(nbrs, colors):
        cover[c].append(w)
    return cover


@dataclass(frozen=True)
class Lemma24Violation:
    hole: tuple[int, ...]
    u: int
    v: int
    neighborhood: frozenset[int]


def _consecutive_pair(hole: tuple[int, ...], nbrs: frozenset[int]) -> bool:
    if len(nbrs) != 2:
        return False
    k = len(hole)
    return any({hole[i], hole[(i + 1) % k]} == nbrs for i in range(k))


def audit_lemma_2_4(g: Graph) -> list[Lemma24Violation]:
    """Report every odd hole C and edge uv off C where v sees nothing of C,
    u sees part of C, and N(u) on C is neither two consecutive hole vertices
    nor the whole hole.  On fork-free input the list must be empty."""
    found = []
    for hole in iter_odd_holes(g):
        hmask = to_mask(hole)
        for u in bits(g.vertex_mask & ~hmask):
            nu = g.adj[u] & hmask
            if not nu or nu == hmask:
                continue
            nset = frozenset(bits(nu))
            if _consecutive_pair(hole, nset):
                continue
            for v in bits(g.adj[u] & ~hmask):
                if not g.adj[v] & hmask:
                    found.append(Lemma24Violation(hole, u, v, nset))
    return found
