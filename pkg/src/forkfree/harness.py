"""Verification campaigns over exhaustive graph streams.

A campaign pairs a hereditary class with a per-graph check and runs the
check on every class member of a source (internal enumeration or graph6
files).  Results are reduced in (size, canonical form) order, so a report
does not depend on worker count or arrival order.
"""

from __future__ import annotations

import time
from collections import Counter
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .canon import ENUMERATION_LIMIT, enumerate_levels
from .classes import GraphClass, get_class
from .coloring import LemmaViolation, binding_bound, color_fork_butterfly, color_fork_gem
from .divisibility import check_division, examine_counterexample, find_perfect_division, sort_key
from .graph import Graph, GraphError
from .graph6 import parse_graph6, read_graph6_file, to_graph6
from .patterns import iter_odd_holes, minimum_odd_balloon
from .replay import validate
from .solvers import chromatic_number, clique_number
from .structure import audit_lemma_2_4, is_bisimplicial, is_trisimplicial

REPORT_HEADER = "# forkfree campaign report v1"

Outcome = tuple[str | None, dict[str, int]]


def _check_divisible(g: Graph) -> Outcome:
    div = find_perfect_division(g)
    if div is None:
        cx = examine_counterexample(g)
        return f"no perfect division ({cx.reason})", {}
    if not check_division(g, div.A, div.B):
        return f"division {div.label} fails re-verification", {}
    return None, {f"division.{div.method}": 1}


def _check_coloring(g: Graph, gem: bool) -> Outcome:
    try:
        colors, cert = color_fork_gem(g) if gem else color_fork_butterfly(g)
    except LemmaViolation as exc:
        return str(exc).split(" [graph6")[0], {}
    errors = validate(cert)
    if errors:
        return "certificate rejected: " + "; ".join(errors), {}
    omega = clique_number(g)
    bound = binding_bound(omega)
    chi = chromatic_number(g)
    if chi > bound:
        return f"chi={chi} exceeds C(omega+1,2)={bound}", {}
    used = len(set(colors))
    stats = {
        "peels": len(cert.peels),
        "graphs.peeled": int(bool(cert.peels)),
        "colors.equal-chi": int(used == chi),
        "colors.slack-total": bound - used,
    }
    if cert.uses_fallback:
        stats["exact-fallback"] = 1
    return None, stats


def _check_gem_coloring(g: Graph) -> Outcome:
    return _check_coloring(g, gem=True)


def _check_butterfly_coloring(g: Graph) -> Outcome:
    return _check_coloring(g, gem=False)


def _check_hole_neighbours(g: Graph) -> Outcome:
    found = audit_lemma_2_4(g)
    if found:
        v = found[0]
        return f"{len(found)} violations, first hole={list(v.hole)} u={v.u} v={v.v} N(u)={sorted(v.neighborhood)}", {}
    return None, {"odd-holes": sum(1 for _ in iter_odd_holes(g))}


def _check_center(g: Graph, parts: int) -> Outcome:
    balloon = minimum_odd_balloon(g)
    if balloon is None:
        return None, {}
    u = balloon.center
    omega = clique_number(g)
    ok = is_bisimplicial(g, u) if parts == 2 else is_trisimplicial(g, u)
    kind = "bisimplicial" if parts == 2 else "trisimplicial"
    if not ok:
        has_any = any(
            (is_bisimplicial(g, v) if parts == 2 else is_trisimplicial(g, v)) for v in range(g.n)
        )
        return f"minimum balloon centre {u} is not {kind} (some {kind} vertex exists: {has_any})", {}
    if g.degree(u) > parts * omega - parts:
        return f"centre {u} has degree {g.degree(u)} > {parts}*omega-{parts}", {}
    return None, {"graphs.with-odd-balloon": 1, f"balloon.hole-{len(balloon.hole)}": 1}


def _check_bisimplicial_centre(g: Graph) -> Outcome:
    return _check_center(g, 2)


def _check_trisimplicial_centre(g: Graph) -> Outcome:
    return _check_center(g, 3)


def _check_small_omega(g: Graph) -> Outcome:
    omega = clique_number(g)
    if omega not in (2, 3):
        return None, {}
    chi = chromatic_number(g)
    limit = 3 if omega == 2 else 4
    if chi > limit:
        return f"omega={omega} but chi={chi} > {limit}", {}
    return None, {f"omega-{omega}": 1, f"omega-{omega}.chi-{chi}": 1}


@dataclass(frozen=True)
class Campaign:
    id: str
    default_class: str
    check: Callable[[Graph], Outcome]
    summary: str


CAMPAIGNS: dict[str, Campaign] = {
    c.id: c
    for c in [
        Campaign("theorem-1", "fork-odd-balloon", _check_divisible, "every class member has a perfect division"),
        Campaign("theorem-2", "fork-gem", _check_gem_coloring, "certified colouring within C(omega+1,2)"),
        Campaign("theorem-3", "fork-butterfly", _check_butterfly_coloring, "certified colouring within C(omega+1,2)"),
        Campaign("lemma-2-4", "fork", _check_hole_neighbours, "vertices next to an odd hole see a consecutive pair or all of it"),
        Campaign("lemma-3-1", "fork-gem", _check_bisimplicial_centre, "minimum odd balloon centre is bisimplicial"),
        Campaign("lemma-4-1", "fork-butterfly", _check_trisimplicial_centre, "minimum odd balloon centre is trisimplicial"),
        Campaign("rb93-small-omega", "fork", _check_small_omega, "chi <= 3 at omega 2 and chi <= 4 at omega 3"),
    ]
}

# campaigns whose check is a perfect-division search accept any sub-class of fork-odd-balloon
CLASS_OVERRIDABLE = {"theorem-1"}


@dataclass
class CampaignReport:
    campaign: str
    graph_class: str
    source: str
    n_min: int
    n_max: int
    scanned: int = 0
    per_size: dict[int, int] = field(default_factory=dict)
    failures: list[tuple[str, str]] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def render(self, timing: bool = False) -> str:
        lines = [
            REPORT_HEADER,
            f"campaign {self.campaign}",
            f"class {self.graph_class}",
            f"source {self.source}",
            f"sizes {self.n_min}..{self.n_max}",
            f"scanned {self.scanned}",
        ]
        lines += [f"size {n} {self.per_size[n]}" for n in sorted(self.per_size)]
        lines += [f"stat {k} {self.stats[k]}" for k in sorted(self.stats)]
        lines.append(f"failures {len(self.failures)}")
        lines += [f"failure {g6} {reason}" for g6, reason in self.failures]
        if timing:
            lines.append(f"wall-time {self.wall_time:.2f}s")
        lines.append(f"verdict {self.verdict}")
        return "\n".join(lines) + "\n"


def internal_source(graph_class: GraphClass, n_max: int, n_min: int = 1) -> Iterator[Graph]:
    if n_max > ENUMERATION_LIMIT:
        raise GraphError(f"internal enumeration stops at n={ENUMERATION_LIMIT}; pass graph6 input for larger n")
    for k, level in enumerate(enumerate_levels(n_max, graph_class)):
        if k >= n_min:
            yield from level


def file_source(paths: Iterable[str | Path]) -> Iterator[Graph]:
    for p in paths:
        yield from read_graph6_file(p)


def _run_one(args: tuple[str, str, Graph]) -> tuple[bool, str | None, dict[str, int]]:
    campaign_id, class_name, g = args
    if not get_class(class_name)(g):
        return False, None, {}
    reason, stats = CAMPAIGNS[campaign_id].check(g)
    return True, reason, stats


def run_campaign(
    campaign: str,
    n_max: int,
    source: str | Path | Iterable[str | Path] = "internal",
    *,
    graph_class: str | None = None,
    n_min: int = 1,
    workers: int = 1,
    fail_fast: bool = False,
) -> CampaignReport:
    """Run one campaign and return its report.

    ``source`` is ``"internal"`` (exhaustive enumeration, n_max <= 8) or one
    or more graph6 paths (plain or gzipped); graphs outside [n_min, n_max] or
    outside the class are skipped.
    """
    if campaign not in CAMPAIGNS:
        raise KeyError(f"unknown campaign {campaign!r}; choose from {', '.join(CAMPAIGNS)}")
    entry = CAMPAIGNS[campaign]
    class_name = graph_class or entry.default_class
    if class_name != entry.default_class and campaign not in CLASS_OVERRIDABLE:
        raise ValueError(f"campaign {campaign} is defined only for class {entry.default_class}")
    cls = get_class(class_name)
    started = time.perf_counter()

    if source == "internal":
        graphs: Iterable[Graph] = internal_source(cls, n_max, n_min)
        label = "internal"
        prefiltered = True
    else:
        paths = [source] if isinstance(source, (str, Path)) else list(source)
        graphs = (g for g in file_source(paths) if n_min <= g.n <= n_max)
        label = ",".join(Path(p).name for p in paths)
        prefiltered = False

    report = CampaignReport(campaign, class_name, label, n_min, n_max)
    stats: Counter[str] = Counter()
    failed: list[tuple[Graph, str]] = []

    def consume(g: Graph, member: bool, reason: str | None, st: dict[str, int]) -> bool:
        if not member:
            return False
        report.scanned += 1
        report.per_size[g.n] = report.per_size.get(g.n, 0) + 1
        stats.update(st)
        if reason is not None:
            failed.append((g, reason))
            return fail_fast
        return False

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batch = ((campaign, "all" if prefiltered else class_name, g) for g in graphs)
            # only the reduction below fixes the report order
            for (_, _, g), out in _zip_map(pool, batch):
                if consume(g, *out):
                    break
    else:
        for g in graphs:
            if prefiltered:
                member, (reason, st) = True, entry.check(g)
            else:
                member, reason, st = _run_one((campaign, class_name, g))
            if consume(g, member, reason, st):
                break

    failed.sort(key=lambda item: sort_key(item[0]))
    report.failures = [(to_graph6(g).decode("ascii"), reason) for g, reason in failed]
    report.stats = dict(stats)
    report.wall_time = time.perf_counter() - started
    return report


def _zip_map(pool: ProcessPoolExecutor, batch: Iterable[tuple[str, str, Graph]], chunk: int = 256):
    items: list[tuple[str, str, Graph]] = []
    for item in batch:
        items.append(item)
        if len(items) >= chunk * 16:
            yield from zip(items, pool.map(_run_one, items, chunksize=chunk))
            items = []
    if items:
        yield from zip(items, pool.map(_run_one, items, chunksize=chunk))


def rerun_failure(campaign: str, graph6_line: str, graph_class: str | None = None) -> str | None:
    """Re-run one reported graph in isolation; returns the failure reason."""
    entry = CAMPAIGNS[campaign]
    g = parse_graph6(graph6_line)
    if not get_class(graph_class or entry.default_class)(g):
        return None
    return entry.check(g)[0]
