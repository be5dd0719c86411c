"""Canonical forms and exhaustive enumeration of small graphs.

The canonical form is the minimum upper-triangle adjacency code over every
vertex ordering compatible with an isomorphism-invariant ordered partition
(degree classes refined to an equitable partition, then individualisation).
Twins inside a cell are interchangeable, so only one of them is branched on.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator

from .graph import Graph, GraphError, add_vertex, empty_graph, relabel

CANONICAL_LIMIT = 9
ENUMERATION_LIMIT = 8

CanonicalForm = bytes
GraphFilter = Callable[[Graph], bool]


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_of = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            changed = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if not changed:
            return new_cells
        cells = new_cells


def _leaf_code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _search(g: Graph) -> tuple[int, list[int]]:
    adj = g.adj
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    start = _refine(adj, [by_degree[d] for d in sorted(by_degree)])

    best_code = -1
    best_order: list[int] = []

    def visit(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        seen_twins: list[int] = []
        for v in cell:
            bv = 1 << v
            if any((adj[v] & ~(1 << w)) == (adj[w] & ~bv) for w in seen_twins):
                continue
            seen_twins.append(v)
            rest = [w for w in cell if w != v]
            visit(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1:]))

    if g.n == 0:
        return 0, []
    visit(start)
    return best_code, best_order


def _pack(n: int, code: int) -> CanonicalForm:
    nbits = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_labeling(g: Graph) -> tuple[CanonicalForm, list[int]]:
    """Canonical key together with an ordering realising it."""
    if g.n > CANONICAL_LIMIT:
        raise GraphError(f"canonical_form supports n <= {CANONICAL_LIMIT}, got {g.n}")
    code, order = _search(g)
    return _pack(g.n, code), order


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_labeling(g)[1])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count() == h.edge_count() and canonical_form(g) == canonical_form(h)


def enumerate_levels(n_max: int, graph_filter: GraphFilter | None = None) -> Iterator[list[Graph]]:
    """Yield, for k = 0..n_max, one canonical representative per isomorphism
    class of k-vertex graphs accepted by the (hereditary) filter.

    Level k is grown from level k-1 by adding a vertex with every possible
    neighbourhood; rejected prefixes are never extended, which is only sound
    because the filter is hereditary.  Each level is sorted by canonical form.
    """
    if n_max > ENUMERATION_LIMIT:
        raise GraphError(
            f"internal enumeration is limited to n <= {ENUMERATION_LIMIT}; ingest graph6 for larger n"
        )
    level = [empty_graph(0)]
    if graph_filter is not None and not graph_filter(level[0]):
        level = []
    yield level
    for k in range(1, n_max + 1):
        found: dict[CanonicalForm, Graph] = {}
        for h in level:
            for nbrs in range(1 << (k - 1)):
                g = add_vertex(h, nbrs)
                if graph_filter is not None and not graph_filter(g):
                    continue
                key, order = canonical_labeling(g)
                if key not in found:
                    found[key] = relabel(g, order)
        level = [found[key] for key in sorted(found)]
        yield level


def enumerate_graphs(n: int, graph_filter: GraphFilter | None = None) -> Iterator[Graph]:
    level: list[Graph] = []
    for level in enumerate_levels(n, graph_filter):
        pass
    yield from level


def enumerate_up_to(n_max: int, graph_filter: GraphFilter | None = None, n_min: int = 1) -> Iterator[Graph]:
    """All accepted graphs with n_min <= n <= n_max, ordered by size then key."""
    for k, level in enumerate(enumerate_levels(n_max, graph_filter)):
        if k >= n_min:
            yield from level
