"""Exact clique number and chromatic number by branch and bound.

Both solvers are deterministic: every tie is broken by the lowest vertex
index, so certificates that re-run them replay bit-identically.
"""

from __future__ import annotations

from .graph import Graph, bits

Coloring = list[int]


def _color_sort(g: Graph, pmask: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of g[pmask] (Tomita-style).

    Returns vertices ordered by colour class and, parallel to it, the colour
    number (1-based) of each vertex; the colour number bounds the size of any
    clique containing that vertex and only earlier vertices.
    """
    order: list[int] = []
    bounds: list[int] = []
    uncolored = pmask
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            v = (available & -available).bit_length() - 1
            available &= ~g.adj[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def maximum_clique(g: Graph, within: int | None = None) -> list[int]:
    """A maximum clique of g (restricted to ``within`` if given), sorted."""
    pmask = g.vertex_mask if within is None else within
    best: list[int] = []

    def expand(current: list[int], p: int) -> None:
        nonlocal best
        order, bounds = _color_sort(g, p)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + bounds[idx] <= len(best):
                return
            v = order[idx]
            current.append(v)
            newp = p & g.adj[v]
            if newp:
                expand(current, newp)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            p &= ~(1 << v)

    if pmask:
        expand([], pmask)
    return sorted(best)


def clique_number(g: Graph, within: int | None = None) -> int:
    return len(maximum_clique(g, within))


def is_proper(g: Graph, colors: Coloring) -> bool:
    if len(colors) != g.n:
        raise ValueError(f"coloring has {len(colors)} entries for {g.n} vertices")
    return all(colors[u] != colors[v] for u, v in g.edges())


def colors_used(colors: Coloring) -> int:
    return len(set(colors))


def _dsatur_greedy(g: Graph, precolored: dict[int, int]) -> Coloring:
    colors = [-1] * g.n
    sat = [0] * g.n
    for v, c in precolored.items():
        colors[v] = c
        for u in bits(g.adj[v]):
            sat[u] |= 1 << c
    degrees = g.degrees()
    for _ in range(g.n - len(precolored)):
        v = max(
            (w for w in range(g.n) if colors[w] < 0),
            key=lambda w: (sat[w].bit_count(), degrees[w], -w),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in bits(g.adj[v]):
            sat[u] |= 1 << c
    return colors


def exact_coloring(g: Graph) -> Coloring:
    """An optimal proper colouring with colours 0..chi-1.

    DSATUR branch and bound seeded with a maximum clique (its vertices get
    colours 0..omega-1, which loses no generality) and a greedy upper bound.
    """
    n = g.n
    if n == 0:
        return []
    clique = maximum_clique(g)
    lower = len(clique)
    pre = {v: i for i, v in enumerate(clique)}
    best = _dsatur_greedy(g, pre)
    best_k = max(best) + 1
    if best_k == lower:
        return best

    colors = [-1] * n
    sat = [0] * n
    degrees = g.degrees()
    for v, c in pre.items():
        colors[v] = c
        for u in bits(g.adj[v]):
            sat[u] |= 1 << c

    done = False

    def search(used: int, remaining: int) -> None:
        nonlocal best, best_k, done
        if remaining == 0:
            best = list(colors)
            best_k = used
            done = best_k == lower
            return
        v = -1
        key = (-1, -1)
        for w in range(n):
            if colors[w] < 0:
                k = (sat[w].bit_count(), degrees[w])
                if k > key:
                    key, v = k, w
        for c in range(min(used + 1, best_k - 1)):
            if sat[v] >> c & 1:
                continue
            colors[v] = c
            saved = []
            for u in bits(g.adj[v]):
                if colors[u] < 0 and not sat[u] >> c & 1:
                    sat[u] |= 1 << c
                    saved.append(u)
            search(max(used, c + 1), remaining - 1)
            for u in saved:
                sat[u] &= ~(1 << c)
            colors[v] = -1
            if done:
                return

    search(lower, n - lower)
    return best


def chromatic_number(g: Graph) -> int:
    colors = exact_coloring(g)
    return max(colors) + 1 if colors else 0


def is_k_colorable(g: Graph, k: int) -> bool:
    return chromatic_number(g) <= k
