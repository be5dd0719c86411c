"""Induced-subgraph detection for the named configurations, holes and
antiholes, perfection by forbidden odd holes/antiholes, and odd balloons."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph import (
    Graph,
    GraphError,
    bits,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    induced,
    is_connected,
    join,
    path_graph,
    to_mask,
)

FAMILIES = ("hole", "antihole", "balloon")


def _fork() -> Graph:
    # claw centred at 0 with leaves 1, 2, 3; the edge 0-3 subdivided by 4
    return from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def _paw() -> Graph:
    return from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])


def _diamond() -> Graph:
    return join(empty_graph(1), path_graph(3))


FIXED_PATTERNS: dict[str, Graph] = {
    "claw": from_edges(4, [(0, 1), (0, 2), (0, 3)]),
    "fork": _fork(),
    "paw": _paw(),
    "dart": join(empty_graph(1), disjoint_union(empty_graph(1), path_graph(3))),
    "banner": from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
    "co-dart": disjoint_union(empty_graph(1), _paw()),
    "bull": from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
    "diamond": _diamond(),
    "co-cricket": disjoint_union(empty_graph(1), _diamond()),
    "hammer": from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]),
    "gem": join(empty_graph(1), path_graph(4)),
    "butterfly": join(empty_graph(1), disjoint_union(complete_graph(2), complete_graph(2))),
    "antifork": complement(_fork()),
    "P4": path_graph(4),
    "P6": path_graph(6),
    "C4": cycle_graph(4),
    "K4": complete_graph(4),
}


@dataclass(frozen=True, order=True)
class PatternId:
    name: str
    k: int | None = None

    def __post_init__(self) -> None:
        if self.name in FAMILIES:
            if self.k is None or self.k < 4:
                raise GraphError(f"{self.name}(k) requires k >= 4")
        elif self.name in FIXED_PATTERNS:
            if self.k is not None:
                raise GraphError(f"{self.name} takes no size parameter")
        else:
            raise GraphError(f"unknown pattern {self.name!r}")

    @classmethod
    def parse(cls, text: str) -> PatternId:
        """Accept ``fork``, ``balloon:7``, ``hole:5`` or ``hole(5)``."""
        m = re.fullmatch(r"([A-Za-z0-9-]+)(?:[:(](\d+)\)?)?", text.strip())
        if not m:
            raise GraphError(f"cannot parse pattern {text!r}")
        name, k = m.group(1), m.group(2)
        if name not in FIXED_PATTERNS and name.lower() in FIXED_PATTERNS:
            name = name.lower()
        return cls(name, int(k) if k is not None else None)

    def __str__(self) -> str:
        return self.name if self.k is None else f"{self.name}:{self.k}"


def balloon_graph(k: int) -> Graph:
    """Hole 0..k-1, centre k adjacent to 0 and 1, leaf k+1 pendant on k."""
    hole = [(i, (i + 1) % k) for i in range(k)]
    return from_edges(k + 2, hole + [(k, 0), (k, 1), (k, k + 1)])


@lru_cache(maxsize=None)
def pattern_graph(pid: PatternId) -> Graph:
    if pid.name == "hole":
        return cycle_graph(pid.k)
    if pid.name == "antihole":
        return complement(cycle_graph(pid.k))
    if pid.name == "balloon":
        return balloon_graph(pid.k)
    return FIXED_PATTERNS[pid.name]


@dataclass(frozen=True)
class Occurrence:
    pattern: PatternId | None
    map: tuple[int, ...]

    @property
    def vertices(self) -> list[int]:
        return sorted(self.map)


def match_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Lexicographically least injective map pattern -> host that preserves
    edges and non-edges, or None.

    Pattern vertices are placed in index order; the candidate set of each one
    is cut down with the host rows of the already placed vertices and by
    degree, so the first complete map found is the least one.
    """
    k = pattern.n
    if k > host.n:
        return None
    if k == 0:
        return ()
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    full = host.vertex_mask
    by_degree = [0] * (k and max(pdeg) + 2)
    for d in range(len(by_degree)):
        by_degree[d] = to_mask(v for v in range(host.n) if hdeg[v] >= d)
    padj = pattern.adj
    hadj = host.adj
    mapping = [0] * k

    def extend(i: int, used: int) -> bool:
        cand = full & ~used & by_degree[pdeg[i]]
        for j in range(i):
            if padj[i] >> j & 1:
                cand &= hadj[mapping[j]]
            else:
                cand &= ~hadj[mapping[j]]
            if not cand:
                return False
        while cand:
            low = cand & -cand
            mapping[i] = low.bit_length() - 1
            if i + 1 == k or extend(i + 1, used | low):
                return True
            cand ^= low
        return False

    return tuple(mapping) if extend(0, 0) else None


def contains_induced(host: Graph, pattern: Graph | PatternId) -> Occurrence | None:
    pid = pattern if isinstance(pattern, PatternId) else None
    pg = pattern_graph(pid) if pid is not None else pattern
    found = match_induced(host, pg)
    if found is None:
        return None
    return Occurrence(pid, found)


def is_free(g: Graph, pid: PatternId | str) -> bool:
    if isinstance(pid, str):
        pid = PatternId.parse(pid)
    return match_induced(g, pattern_graph(pid)) is None


def is_fork_free(g: Graph) -> bool:
    return is_free(g, PatternId("fork"))


def is_claw_free(g: Graph) -> bool:
    return is_free(g, PatternId("claw"))


def is_gem_free(g: Graph) -> bool:
    return is_free(g, PatternId("gem"))


def is_butterfly_free(g: Graph) -> bool:
    return is_free(g, PatternId("butterfly"))


# -- holes and antiholes ---------------------------------------------------


def induces_cycle(g: Graph, mask: int) -> bool:
    if mask.bit_count() < 3:
        return False
    if any((g.adj[v] & mask).bit_count() != 2 for v in bits(mask)):
        return False
    return is_connected(g, mask)


def cycle_order(g: Graph, mask: int) -> tuple[int, ...]:
    """Vertices of an induced cycle in cyclic order, starting at the least
    vertex and stepping to its lower-indexed neighbour first."""
    start = (mask & -mask).bit_length() - 1
    first, _ = bits(g.adj[start] & mask)
    order = [start, first]
    prev, cur = start, first
    while True:
        nxt = next(bits(g.adj[cur] & mask & ~(1 << prev)))
        if nxt == start:
            return tuple(order)
        order.append(nxt)
        prev, cur = cur, nxt


def iter_odd_holes(g: Graph, min_len: int = 5, max_len: int | None = None):
    """All induced odd cycles of length >= min_len as cyclic vertex tuples,
    by increasing length and lexicographic vertex subset."""
    if min_len < 5 or min_len % 2 == 0:
        raise GraphError("min_len must be odd and at least 5")
    top = g.n if max_len is None else min(max_len, g.n)
    eligible = [v for v in range(g.n) if g.degree(v) >= 2]
    for k in range(min_len, top + 1, 2):
        for subset in combinations(eligible, k):
            mask = to_mask(subset)
            if induces_cycle(g, mask):
                yield cycle_order(g, mask)


def find_odd_hole(g: Graph, min_len: int = 5) -> tuple[int, ...] | None:
    return next(iter_odd_holes(g, min_len), None)


def find_odd_antihole(g: Graph, min_len: int = 7) -> tuple[int, ...] | None:
    """Odd antihole found as an odd hole of the complement.

    The default lower bound of 7 reports C5 only once (as a hole); pass
    ``min_len=5`` to see it from this side as well.
    """
    return find_odd_hole(complement(g), min_len)


def is_perfect(g: Graph) -> bool:
    return find_odd_hole(g) is None and find_odd_antihole(g) is None


def is_perfect_mask(g: Graph, mask: int) -> bool:
    return is_perfect(induced(g, mask))


# -- odd balloons ------------------------------------------------------------


@dataclass(frozen=True)
class OddBalloon:
    """An induced odd balloon in a host graph.

    ``hole`` is in cyclic order and rotated so that the centre is adjacent to
    exactly ``hole[0]`` and ``hole[1]``.
    """

    hole: tuple[int, ...]
    center: int
    leaf: int

    @property
    def size(self) -> int:
        return len(self.hole) + 2

    @property
    def vertices(self) -> list[int]:
        return sorted((*self.hole, self.center, self.leaf))


def _rotate_to_pair(hole: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    """Rotate/reflect the cycle so it reads min(a,b), max(a,b), ..."""
    lo, hi = min(a, b), max(a, b)
    if hole[(hole.index(lo) + 1) % len(hole)] != hi:
        hole = tuple(reversed(hole))
    i = hole.index(lo)
    if hole[(i + 1) % len(hole)] != hi:
        raise GraphError("vertices are not consecutive on the hole")
    return hole[i:] + hole[:i]


def is_odd_balloon(g: Graph, b: OddBalloon) -> bool:
    """Independent re-check of the OddBalloon invariants in g."""
    k = len(b.hole)
    if k < 5 or k % 2 == 0:
        return False
    members = set(b.hole) | {b.center, b.leaf}
    if len(members) != k + 2 or any(not 0 <= v < g.n for v in members):
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(b.hole[i], b.hole[j]) != consecutive:
                return False
    hole_mask = to_mask(b.hole)
    if g.adj[b.center] & hole_mask != (1 << b.hole[0]) | (1 << b.hole[1]):
        return False
    return g.has_edge(b.center, b.leaf) and not g.adj[b.leaf] & hole_mask


def iter_odd_balloons(g: Graph, max_hole: int | None = None):
    """Induced odd balloons by increasing hole length, then hole subset, then
    centre, then leaf."""
    for hole in iter_odd_holes(g, 5, max_hole):
        hmask = to_mask(hole)
        outside = g.vertex_mask & ~hmask
        for u in bits(outside):
            nbrs = g.adj[u] & hmask
            if nbrs.bit_count() != 2:
                continue
            a, b = bits(nbrs)
            if not g.has_edge(a, b):
                continue
            for s in bits(g.adj[u] & outside & ~(1 << u)):
                if g.adj[s] & hmask:
                    continue
                balloon = OddBalloon(_rotate_to_pair(hole, a, b), u, s)
                if not is_odd_balloon(g, balloon):
                    raise AssertionError(f"balloon search produced an invalid witness {balloon}")
                yield balloon


def minimum_odd_balloon(g: Graph) -> OddBalloon | None:
    """Odd balloon with the shortest hole; ties broken lexicographically."""
    return next(iter_odd_balloons(g), None)


def find_odd_balloon(g: Graph) -> OddBalloon | None:
    # scanning holes by increasing length already yields a minimum witness
    return minimum_odd_balloon(g)


def is_odd_balloon_free(g: Graph) -> bool:
    return find_odd_balloon(g) is None
