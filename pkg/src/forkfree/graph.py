"""Immutable simple graphs on at most 64 vertices with bitset adjacency rows."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph input (loops, bad endpoints, size limits)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``u ~ v``.  Instances are
    validated on construction and never mutated, so they can be shared freely
    between worker processes.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} uses bits outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def non_neighbors(self, v: int) -> int:
        """Bitset of M(v) = V minus the closed neighbourhood of v."""
        return self.vertex_mask & ~self.adj[v] & ~(1 << v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[v] | (1 << v)) & mask == mask for v in bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(not self.adj[v] & mask for v in bits(mask))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _trusted(n: int, rows) -> Graph:
    # skip validation for rows that are symmetric and loop-free by construction
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(rows))
    return g


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _trusted(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return _trusted(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return _trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return _trusted(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced(g: Graph, vertices: Iterable[int] | int) -> Graph:
    """Subgraph induced by ``vertices`` (a bitset or an iterable), relabelled
    to 0..k-1 in increasing order of the original indices."""
    mask = vertices if isinstance(vertices, int) else to_mask(vertices)
    if mask & ~g.vertex_mask:
        raise GraphError("induced() called with vertices outside the graph")
    keep = list(bits(mask))
    return relabel(g, keep)


def relabel(g: Graph, order: list[int]) -> Graph:
    """Graph on len(order) vertices where new vertex i is old vertex order[i]."""
    pos = {old: new for new, old in enumerate(order)}
    rows = []
    for old in order:
        row = 0
        for u in bits(g.adj[old]):
            p = pos.get(u)
            if p is not None:
                row |= 1 << p
        rows.append(row)
    return _trusted(len(order), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced(g, g.vertex_mask & ~(1 << v))


def add_vertex(g: Graph, neighbors: int) -> Graph:
    """Append vertex ``g.n`` adjacent to the bitset ``neighbors``."""
    new = g.n
    rows = [row | ((neighbors >> v & 1) << new) for v, row in enumerate(g.adj)]
    rows.append(neighbors)
    return _trusted(g.n + 1, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    rows = list(g.adj) + [row << shift for row in h.adj]
    return _trusted(g.n + h.n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    shift = g.n
    gmask = g.vertex_mask
    hmask = h.vertex_mask << shift
    rows = [row | hmask for row in g.adj] + [(row << shift) | gmask for row in h.adj]
    return _trusted(g.n + h.n, tuple(rows))


def components(g: Graph, mask: int | None = None) -> list[int]:
    """Connected components of g[mask] as bitsets, ordered by least vertex."""
    remaining = g.vertex_mask if mask is None else mask
    out = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            grow &= remaining & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph, mask: int | None = None) -> bool:
    m = g.vertex_mask if mask is None else mask
    return m == 0 or len(components(g, m)) == 1
