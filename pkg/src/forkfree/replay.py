"""Independent certificate replayer.

Uses only the graph substrate (graph values, exact omega/chi solvers,
canonical forms); every structural fact a certificate claims is re-derived
here by brute force rather than by the code that produced it.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .canon import CANONICAL_LIMIT, canonical_form
from .certificate import ColoringCertificate, Divide, ExactFallback, Peel
from .graph import Graph, bits, from_edges, induced, to_mask
from .solvers import chromatic_number, clique_number, exact_coloring

PERFECTION_LIMIT = 12
SMALL_OMEGA_CHI = {0: 0, 1: 1, 2: 3, 3: 4}


def _perfect_by_definition(g: Graph, mask: int) -> bool:
    """chi == omega on every induced subgraph of g[mask]."""
    if mask.bit_count() > PERFECTION_LIMIT:
        raise ValueError("replay perfection check is limited to 12 vertices")
    h = induced(g, mask)
    full = h.vertex_mask
    sub = full
    while sub:
        k = induced(h, sub)
        if chromatic_number(k) != clique_number(k):
            return False
        sub = (sub - 1) & full
    return True


def _clique_cover_exists(g: Graph, verts: list[int], parts: int) -> bool:
    groups: list[int] = []

    def place(i: int) -> bool:
        if i == len(verts):
            return True
        v = verts[i]
        for idx, grp in enumerate(groups):
            if g.adj[v] & grp == grp:
                groups[idx] = grp | (1 << v)
                if place(i + 1):
                    return True
                groups[idx] = grp
        if len(groups) < parts:
            groups.append(1 << v)
            if place(i + 1):
                return True
            groups.pop()
        return False

    return place(0)


def _balloon(k: int) -> Graph:
    return from_edges(k + 2, [(i, (i + 1) % k) for i in range(k)] + [(k, 0), (k, 1), (k, k + 1)])


def _check_balloon(g: Graph, alive: int, step: Peel, errors: list[str]) -> None:
    hole = step.hole
    k = len(hole)
    members = set(hole) | {step.vertex, step.leaf}
    if k < 5 or k % 2 == 0 or len(members) != k + 2:
        errors.append(f"peel {step.vertex}: hole of length {k} is not an odd hole witness")
        return
    if to_mask(members) & ~alive:
        errors.append(f"peel {step.vertex}: balloon uses removed vertices")
        return
    for i, j in combinations(range(k), 2):
        if g.has_edge(hole[i], hole[j]) != (j == i + 1 or (i == 0 and j == k - 1)):
            errors.append(f"peel {step.vertex}: hole is not a chordless cycle")
            return
    hmask = to_mask(hole)
    if g.adj[step.vertex] & hmask != (1 << hole[0]) | (1 << hole[1]):
        errors.append(f"peel {step.vertex}: centre does not see exactly hole[0], hole[1]")
    if not g.has_edge(step.vertex, step.leaf) or g.adj[step.leaf] & hmask:
        errors.append(f"peel {step.vertex}: leaf is not a pendant of the centre off the hole")
    n_alive = alive.bit_count()
    if n_alive <= CANONICAL_LIMIT:
        h = induced(g, alive)
        for smaller in range(5, k, 2):
            target = canonical_form(_balloon(smaller))
            for subset in combinations(range(h.n), smaller + 2):
                if canonical_form(induced(h, subset)) == target:
                    errors.append(f"peel {step.vertex}: a smaller odd balloon ({smaller}-hole) exists")
                    return


def replay(cert: ColoringCertificate) -> tuple[list[int], list[str]]:
    """Rebuild the colouring the certificate describes and list every broken
    invariant.  An empty error list means the certificate is valid."""
    g = cert.graph
    errors: list[str] = []
    omega_g = clique_number(g)
    if cert.omega != omega_g:
        errors.append(f"header omega {cert.omega} != {omega_g}")
    if cert.bound != comb(omega_g + 1, 2):
        errors.append(f"header bound {cert.bound} != C({omega_g}+1, 2)")
    colors = [-1] * g.n
    alive = g.vertex_mask
    peels: list[tuple[int, int]] = []
    steps = list(cert.steps)
    i = 0
    while i < len(steps) and isinstance(steps[i], Peel):
        step = steps[i]
        i += 1
        if not alive >> step.vertex & 1:
            errors.append(f"peel {step.vertex}: vertex already removed")
            continue
        omega = clique_number(g, alive)
        nbrs = g.adj[step.vertex] & alive
        degree = nbrs.bit_count()
        if step.omega != omega or step.degree != degree:
            errors.append(f"peel {step.vertex}: recorded omega/degree {step.omega}/{step.degree} != {omega}/{degree}")
        parts = {"bisimplicial": 2, "trisimplicial": 3}.get(step.kind)
        if parts is None:
            errors.append(f"peel {step.vertex}: unknown kind {step.kind!r}")
        else:
            if cert.cls == "fork-gem" and parts != 2 or cert.cls == "fork-butterfly" and parts != 3:
                errors.append(f"peel {step.vertex}: kind {step.kind} does not match class {cert.cls}")
            if not _clique_cover_exists(g, list(bits(nbrs)), parts):
                errors.append(f"peel {step.vertex}: neighbourhood is not a union of {parts} cliques")
            if degree > parts * omega - parts:
                errors.append(f"peel {step.vertex}: degree {degree} > {parts}*omega-{parts}")
        _check_balloon(g, alive, step, errors)
        peels.append((step.vertex, comb(omega + 1, 2)))
        alive &= ~(1 << step.vertex)

    rest = steps[i:]
    if rest and isinstance(rest[0], ExactFallback):
        fb = rest[0]
        if len(rest) != 1:
            errors.append("exact-fallback must be the last step")
        if to_mask(fb.vertices) != alive:
            errors.append("exact-fallback does not cover the remaining vertices")
        h = induced(g, alive)
        omega = clique_number(h)
        part = exact_coloring(h)
        chi = max(part) + 1 if part else 0
        if (fb.omega, fb.chi) != (omega, chi):
            errors.append(f"exact-fallback records omega/chi {fb.omega}/{fb.chi} != {omega}/{chi}")
        if omega > 3 or chi > SMALL_OMEGA_CHI.get(omega, -1):
            errors.append(f"exact-fallback outside its range: omega={omega} chi={chi}")
        for v, c in zip(bits(alive), part):
            colors[v] = c
        alive = 0
    else:
        offset = 0
        for step in rest:
            if not isinstance(step, Divide):
                errors.append(f"unexpected step {step!r} after the division phase began")
                break
            a, b = to_mask(step.A), to_mask(step.B)
            if a & b or a | b != alive:
                errors.append("divide: A and B do not partition the current vertex set")
                break
            omega = clique_number(g, alive)
            if step.omega != omega:
                errors.append(f"divide: recorded omega {step.omega} != {omega}")
            if not _perfect_by_definition(g, a):
                errors.append(f"divide: A={list(step.A)} is not perfect")
            if b and clique_number(g, b) >= omega:
                errors.append("divide: omega(B) is not below omega of the current graph")
            part = exact_coloring(induced(g, a))
            used = max(part) + 1 if part else 0
            if used != step.colors or used > omega:
                errors.append(f"divide: A uses {used} colours, recorded {step.colors}, omega {omega}")
            for v, c in zip(bits(a), part):
                colors[v] = offset + c
            offset += used
            alive = b
    if alive:
        errors.append(f"vertices {list(bits(alive))} were never coloured")

    for u, palette in reversed(peels):
        taken = {colors[w] for w in bits(g.adj[u]) if colors[w] >= 0}
        c = 0
        while c in taken:
            c += 1
        if c >= palette:
            errors.append(f"peel {u}: no colour below {palette} left")
        colors[u] = c

    if colors != list(cert.final):
        errors.append("replayed colouring differs from the recorded final colouring")
    if any(colors[u] == colors[v] for u, v in g.edges()):
        errors.append("replayed colouring is not proper")
    if colors and max(colors) + 1 > cert.bound:
        errors.append(f"{max(colors) + 1} colours exceed the bound {cert.bound}")
    return colors, errors


def validate(cert: ColoringCertificate) -> list[str]:
    return replay(cert)[1]
