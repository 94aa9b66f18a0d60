"""
Tests for Group Structure Statistics
====================================

Summaries, coverage percentages, histograms and run aggregation on a
hand-built extraction result.
"""

import math

import numpy as np
import pytest

from src.core.analysis import (
    aggregate_runs,
    check_provenance,
    collect_values,
    coverage,
    graph_profile,
    histogram,
    rescale_w,
    summarize,
)
from src.core.errors import ContractViolation, ProvenanceMismatchError
from src.core.groups import ExtractionResult, GroupType
from tests.helpers import hand_result, make_graph


def empty_result(graph):
    return ExtractionResult(groups=[], background=graph, provenance={"fingerprint": graph.fingerprint()})


class TestSummary:
    def test_counts_and_means(self):
        _, result = hand_result()
        report = summarize(result)
        assert report.group_count == 2
        assert report.mean_s == pytest.approx(2.0)
        assert report.mean_t == pytest.approx(2.0)
        assert report.mean_tau == pytest.approx(0.5)
        assert report.type_summary(GroupType.COMMUNITY).count == 1
        assert report.type_summary(GroupType.COMMUNITY).mean_s == pytest.approx(3.0)
        assert report.type_summary(GroupType.MODULE).mean_s == pytest.approx(1.0)
        assert report.type_summary(GroupType.MIXTURE).count == 0
        assert not report.empty

    def test_no_groups(self, triangle):
        report = summarize(empty_result(triangle))
        assert report.empty
        assert report.group_count == 0
        assert report.mean_tau == 0.0

    def test_row_layout(self):
        _, result = hand_result()
        row = summarize(result).to_row("toy")
        assert list(row) == [
            "network", "groups", "mean_s", "mean_t", "mean_tau",
            "communities", "community_mean_s", "mixtures", "mixture_mean_s", "modules", "module_mean_s",
        ]
        assert row["network"] == "toy"
        assert row["modules"] == 1


class TestCoverage:
    def test_percentages(self):
        graph, result = hand_result()
        report = coverage(result, graph)
        assert report.nodes_pct[GroupType.COMMUNITY] == pytest.approx(60.0)
        assert report.links_pct[GroupType.COMMUNITY] == pytest.approx(60.0)
        assert report.nodes_pct[GroupType.MODULE] == pytest.approx(20.0)
        assert report.links_pct[GroupType.MODULE] == pytest.approx(20.0)
        assert report.nodes_pct[GroupType.MIXTURE] == 0.0
        assert report.background_nodes_pct == pytest.approx(20.0)
        assert report.background_links_pct == pytest.approx(20.0)

    def test_link_shares_sum_to_100(self):
        graph, result = hand_result()
        report = coverage(result, graph)
        total = math.fsum(report.links_pct.values()) + report.background_links_pct
        assert total == pytest.approx(100.0, abs=1e-9)

    def test_no_groups_is_all_background(self, two_triangles):
        report = coverage(empty_result(two_triangles), two_triangles)
        assert report.background_nodes_pct == 100.0
        assert report.background_links_pct == 100.0

    def test_wrong_graph(self, triangle):
        _, result = hand_result()
        with pytest.raises(ProvenanceMismatchError):
            check_provenance(result, triangle)
        with pytest.raises(ProvenanceMismatchError):
            coverage(result, triangle)

    def test_rounded(self):
        graph, result = hand_result()
        rounded = coverage(result, graph).rounded(0)
        assert rounded.background_links_pct == 20.0


class TestDistributions:
    def test_rescale_w(self):
        assert rescale_w([1.5, 3.0], 0.15) == pytest.approx([10.0, 20.0])
        with pytest.raises(ContractViolation):
            rescale_w([1.0], 0.0)

    def test_histogram_fixed_range(self):
        hist = histogram([0.0, 0.5, 1.0], 2, (0.0, 1.0))
        assert hist.counts.tolist() == [1, 2]
        assert hist.centers.tolist() == [0.25, 0.75]
        assert float(np.sum(hist.density) * hist.width) == pytest.approx(1.0, abs=1e-9)

    def test_histogram_integrates_to_one(self):
        values = np.random.default_rng(0).random(200)
        hist = histogram(values, 17)
        assert float(np.sum(hist.density) * hist.width) == pytest.approx(1.0, abs=1e-9)

    def test_constant_values(self):
        hist = histogram([2.0, 2.0], 4)
        assert hist.edges[0] == 1.5
        assert hist.edges[-1] == 2.5
        assert hist.counts.sum() == 2

    def test_out_of_range_values_are_clamped(self):
        hist = histogram([-1.0, 0.5, 2.0], 2, (0.0, 1.0))
        assert hist.clamped == 2
        assert hist.counts.tolist() == [1, 2]

    def test_empty(self):
        hist = histogram([], 3, (0.0, 1.0))
        assert hist.empty
        assert hist.density.tolist() == [0.0, 0.0, 0.0]

    def test_bad_bins(self):
        with pytest.raises(ContractViolation):
            histogram([1.0], 0)

    def test_collect_values(self):
        _, result = hand_result()
        assert collect_values([result, result], "tau") == [1.0, 0.0, 1.0, 0.0]
        assert len(collect_values([result], "W")) == 2
        with pytest.raises(ContractViolation):
            collect_values([result], "s")


class TestAggregation:
    def test_summary_means_skip_runs_without_groups(self, triangle):
        _, result = hand_result()
        merged = aggregate_runs([summarize(result), summarize(empty_result(triangle))])
        assert merged.runs == 2
        assert merged.group_count == pytest.approx(1.0)
        assert merged.mean_s == pytest.approx(2.0)
        assert merged.type_summary(GroupType.COMMUNITY).count == pytest.approx(0.5)
        assert merged.type_summary(GroupType.COMMUNITY).mean_s == pytest.approx(3.0)
        assert not merged.empty

    def test_coverage_mean(self, two_triangles):
        graph, result = hand_result()
        merged = aggregate_runs([coverage(result, graph), coverage(empty_result(two_triangles), two_triangles)])
        assert merged.background_links_pct == pytest.approx(60.0)
        assert merged.links_pct[GroupType.COMMUNITY] == pytest.approx(30.0)

    def test_order_independent(self, triangle):
        _, result = hand_result()
        reports = [summarize(result), summarize(empty_result(triangle)), summarize(result)]
        assert aggregate_runs(reports) == aggregate_runs(reports[::-1])

    def test_rejects_empty_and_mixed(self):
        graph, result = hand_result()
        with pytest.raises(ContractViolation):
            aggregate_runs([])
        with pytest.raises(ContractViolation):
            aggregate_runs([summarize(result), coverage(result, graph)])


class TestGraphProfile:
    def test_triangle(self, triangle):
        profile = graph_profile(triangle)
        assert (profile.nodes, profile.links, profile.components) == (3, 3, 1)
        assert profile.mean_degree == pytest.approx(2.0)
        assert profile.average_clustering == pytest.approx(1.0)

    def test_components(self):
        profile = graph_profile(make_graph([(1, 2), (3, 4), (4, 5)]))
        assert profile.components == 2
        assert profile.largest_component_fraction == pytest.approx(0.6)
