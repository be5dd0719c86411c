"""Certified colourings within C(omega+1, 2) colours.

Two strategies are combined.  While the current graph contains an induced
odd balloon, the centre of a minimum one is peeled off; in (fork, gem)-free
graphs that centre is bisimplicial, in (fork, butterfly)-free graphs it is
trisimplicial, which bounds its degree and lets it be coloured greedily
afterwards.  Once no odd balloon is left the graph is fork-free and odd
balloon-free, hence perfectly divisible, and is coloured level by level: a
perfect part with fresh colours, then recurse on the rest whose clique
number is strictly smaller.
"""

from __future__ import annotations

import logging
from math import comb

from .certificate import ColoringCertificate, Divide, ExactFallback, Peel
from .classes import get_class
from .divisibility import find_perfect_division
from .graph import Graph, bits, induced
from .graph6 import to_graph6
from .patterns import is_perfect, minimum_odd_balloon
from .solvers import Coloring, clique_number, exact_coloring, is_proper
from .structure import is_bisimplicial, is_trisimplicial

log = logging.getLogger(__name__)

# chi bound for fork-free graphs of small clique number, checked, not assumed
SMALL_OMEGA_CHI = {0: 0, 1: 1, 2: 3, 3: 4}


class OutOfClassError(ValueError):
    pass


class DivisionNotFound(RuntimeError):
    pass


class LemmaViolation(RuntimeError):
    """A published structural claim failed on a concrete graph.

    Never caught inside the package: it is either an implementation bug or a
    counterexample, and both need a human.
    """

    def __init__(self, message: str, graph: Graph):
        self.graph6 = to_graph6(graph).decode("ascii")
        super().__init__(f"{message} [graph6 {self.graph6}]")
        log.error("%s", self)


def binding_bound(omega: int) -> int:
    return comb(omega + 1, 2)


def color_perfect(g: Graph) -> Coloring:
    if not is_perfect(g):
        raise OutOfClassError(f"color_perfect needs a perfect graph, got {to_graph6(g)!r}")
    colors = exact_coloring(g)
    used = max(colors) + 1 if colors else 0
    if used != clique_number(g):
        raise LemmaViolation(f"perfect graph coloured with {used} colours", g)
    return colors


def greedy_extend(g: Graph, partial: Coloring, u: int, palette: int) -> Coloring:
    """Give u the least colour not used on its coloured neighbours.

    Entries of ``partial`` equal to -1 are uncoloured and ignored.
    """
    if len(partial) != g.n:
        raise ValueError("partial colouring has the wrong length")
    taken = {partial[w] for w in bits(g.adj[u]) if partial[w] >= 0}
    c = 0
    while c in taken:
        c += 1
    if c >= palette:
        raise ValueError(f"no free colour for vertex {u} within a palette of {palette}")
    out = list(partial)
    out[u] = c
    return out


def _divide_levels(g: Graph, alive: int, colors: list[int]) -> list[Divide]:
    steps = []
    offset = 0
    cur = alive
    while cur:
        verts = list(bits(cur))
        h = induced(g, cur)
        omega = clique_number(h)
        div = find_perfect_division(h)
        if div is None:
            raise DivisionNotFound(f"no perfect division of {to_graph6(h)!r}")
        a = [verts[i] for i in sorted(div.A)]
        b = [verts[i] for i in sorted(div.B)]
        part = color_perfect(induced(g, a))
        used = max(part) + 1 if part else 0
        if used > omega:
            raise LemmaViolation(f"division level uses {used} > omega={omega} colours", h)
        for v, c in zip(a, part):
            colors[v] = offset + c
        steps.append(Divide(tuple(a), tuple(b), used, omega))
        offset += used
        cur = 0
        for v in b:
            cur |= 1 << v
    return steps


def divide_and_color(g: Graph) -> tuple[Coloring, ColoringCertificate]:
    colors = [-1] * g.n
    steps = _divide_levels(g, g.vertex_mask, colors)
    omega = clique_number(g)
    cert = ColoringCertificate(g, "perfectly-divisible", omega, binding_bound(omega), list(steps), colors)
    _final_checks(g, cert)
    return colors, cert


def _final_checks(g: Graph, cert: ColoringCertificate) -> None:
    if not is_proper(g, cert.final):
        raise LemmaViolation("produced colouring is not proper", g)
    used = max(cert.final) + 1 if cert.final else 0
    if used > cert.bound:
        raise LemmaViolation(f"{used} colours exceed the bound {cert.bound}", g)


def _peel_and_color(g: Graph, cls: str) -> tuple[Coloring, ColoringCertificate]:
    gem = cls == "fork-gem"
    kind = "bisimplicial" if gem else "trisimplicial"
    factor = 2 if gem else 3
    omega_g = clique_number(g)
    steps: list = []
    palettes: list[tuple[int, int]] = []
    colors = [-1] * g.n
    alive = g.vertex_mask
    finished = False
    while alive:
        verts = list(bits(alive))
        h = induced(g, alive)
        omega = clique_number(h)
        if not gem and omega <= 3:
            part = exact_coloring(h)
            chi = max(part) + 1 if part else 0
            if chi > SMALL_OMEGA_CHI[omega]:
                raise LemmaViolation(f"fork-free graph with omega={omega} needs {chi} colours", h)
            for v, c in zip(verts, part):
                colors[v] = c
            steps.append(ExactFallback(tuple(verts), omega, chi))
            finished = True
            break
        balloon = minimum_odd_balloon(h)
        if balloon is None:
            break
        u = balloon.center
        degree = h.degree(u)
        simplicial = is_bisimplicial(h, u) if gem else is_trisimplicial(h, u)
        if not simplicial:
            raise LemmaViolation(f"centre {verts[u]} of a minimum odd balloon is not {kind}", h)
        if degree > factor * omega - factor:
            raise LemmaViolation(f"{kind} centre has degree {degree} > {factor}*omega-{factor}", h)
        steps.append(Peel(verts[u], kind, degree, omega, tuple(verts[i] for i in balloon.hole), verts[balloon.leaf]))
        palettes.append((verts[u], binding_bound(omega)))
        alive &= ~(1 << verts[u])
    if not finished:
        steps.extend(_divide_levels(g, alive, colors))
    for u, palette in reversed(palettes):
        colors = greedy_extend(g, colors, u, palette)
    cert = ColoringCertificate(g, cls, omega_g, binding_bound(omega_g), steps, colors)
    _final_checks(g, cert)
    return colors, cert


def color_fork_gem(g: Graph) -> tuple[Coloring, ColoringCertificate]:
    if not get_class("fork-gem")(g):
        raise OutOfClassError("input is not (fork, gem)-free")
    return _peel_and_color(g, "fork-gem")


def color_fork_butterfly(g: Graph) -> tuple[Coloring, ColoringCertificate]:
    """As color_fork_gem with trisimplicial centres; any current graph with
    omega <= 3 is coloured exactly and checked against chi <= 3 (omega 2) or
    chi <= 4 (omega 3) instead of peeling."""
    if not get_class("fork-butterfly")(g):
        raise OutOfClassError("input is not (fork, butterfly)-free")
    return _peel_and_color(g, "fork-butterfly")


COLORERS = {
    "fork-gem": color_fork_gem,
    "fork-butterfly": color_fork_butterfly,
    "pd": divide_and_color,
    "perfectly-divisible": divide_and_color,
}
