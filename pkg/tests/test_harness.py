from __future__ import annotations

from pathlib import Path

import pytest

from forkfree.graph import from_edges
from forkfree.graph6 import to_graph6
from forkfree.harness import CAMPAIGNS, REPORT_HEADER, rerun_failure, run_campaign

GOLDEN = Path(__file__).parent / "golden" / "theorem-1-max6.txt"

GROTZSCH_EDGES = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, (i - 1) % 5) for i in range(5)]
    + [(10, 5 + i) for i in range(5)]
)


def test_golden_report():
    report = run_campaign("theorem-1", 6)
    assert report.passed
    assert report.render() == GOLDEN.read_text()


def test_report_is_independent_of_worker_count():
    one = run_campaign("lemma-3-1", 7).render()
    two = run_campaign("lemma-3-1", 7, workers=2).render()
    assert one == two


def test_file_source_matches_internal(tmp_path):
    from forkfree.canon import enumerate_up_to

    path = tmp_path / "all6.g6"
    path.write_bytes(b"".join(to_graph6(g) + b"\n" for g in enumerate_up_to(6)))
    internal = run_campaign("lemma-2-4", 6)
    ingested = run_campaign("lemma-2-4", 6, path)
    assert internal.per_size == ingested.per_size and internal.stats == ingested.stats
    assert ingested.render().startswith(REPORT_HEADER)


def test_failures_are_sorted_and_reproducible(tmp_path):
    # the theorem-1 check is class-agnostic; run it on everything to provoke failures
    c5 = from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    grotzsch = from_edges(11, GROTZSCH_EDGES)
    path = tmp_path / "mixed.g6"
    path.write_bytes(to_graph6(grotzsch) + b"\n" + to_graph6(c5) + b"\n")
    report = run_campaign("theorem-1", 11, path, graph_class="all")
    assert not report.passed and report.verdict == "FAIL"
    assert [g6 for g6, _ in report.failures] == [to_graph6(grotzsch).decode()]
    g6, reason = report.failures[0]
    assert rerun_failure("theorem-1", g6, graph_class="all") == reason
    assert "failure " + g6 in report.render()


def test_fail_fast_stops_early(tmp_path):
    grotzsch = to_graph6(from_edges(11, GROTZSCH_EDGES))
    path = tmp_path / "twice.g6"
    path.write_bytes(grotzsch + b"\n" + grotzsch + b"\n")
    assert len(run_campaign("theorem-1", 11, path, graph_class="all", fail_fast=True).failures) == 1
    assert len(run_campaign("theorem-1", 11, path, graph_class="all").failures) == 2


def test_argument_errors():
    with pytest.raises(KeyError):
        run_campaign("nope", 5)
    with pytest.raises(ValueError):
        run_campaign("theorem-2", 5, graph_class="all")
    with pytest.raises(ValueError):
        run_campaign("theorem-1", 9)


def test_timing_is_opt_in():
    report = run_campaign("rb93-small-omega", 5)
    assert "wall-time" not in report.render()
    assert "wall-time" in report.render(timing=True)


@pytest.mark.parametrize("campaign", sorted(CAMPAIGNS))
def test_every_campaign_passes_at_six(campaign):
    assert run_campaign(campaign, 6).passed
