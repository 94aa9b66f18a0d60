"""
Tests for Sequential Group Extraction
=====================================

Stopping rules, link accounting between groups and background, provenance
and reproducibility.
"""

import pytest

from src.core.errors import ContractViolation
from src.core.graph import Graph
from src.core.groups import ExtractionConfig, GroupType, extract_all
from tests.helpers import make_graph

FAST = ExtractionConfig(restarts=4, null_samples=9, alpha=0.2, seed=3)


@pytest.fixture
def two_cliques():
    """Two disjoint 6-cliques (labels 0-5 and 10-15)."""
    pairs = []
    for base in (0, 10):
        pairs += [(base + i, base + j) for i in range(6) for j in range(i + 1, 6)]
    return make_graph(pairs)


def check_accounting(graph: Graph, result):
    removed = [link for g in result.groups for link in g.removed_links]
    assert len(removed) == len(set(removed))
    assert len(removed) + result.background.link_count == graph.link_count
    assert set(removed) | result.background.link_set() == graph.link_set()


class TestStoppingRules:
    def test_triangle_matches_its_null(self, triangle):
        # G(3, 3) is the triangle itself, so the best W is never unusual
        result = extract_all(triangle, FAST)
        assert result.group_count == 0
        assert result.background.link_set() == triangle.link_set()

    def test_two_cliques(self, two_cliques):
        result = extract_all(two_cliques, FAST)
        assert result.group_count == 1
        group = result.groups[0]
        assert group.group_type is GroupType.COMMUNITY
        assert group.pair.S in ({0, 1, 2, 3, 4, 5}, {10, 11, 12, 13, 14, 15})
        assert group.pair.w == pytest.approx(30.0, abs=1e-9)
        assert group.p_value == pytest.approx(0.1)
        assert len(group.removed_links) == 15
        assert (group.working_nodes, group.working_links) == (12, 30)
        check_accounting(two_cliques, result)

    def test_max_groups_zero(self, two_cliques):
        result = extract_all(two_cliques, ExtractionConfig(restarts=4, null_samples=9, alpha=0.2, max_groups=0))
        assert result.group_count == 0
        assert result.background.link_count == two_cliques.link_count

    def test_empty_graph_rejected(self):
        with pytest.raises(ContractViolation):
            extract_all(Graph.from_label_pairs([]), FAST)

    def test_graph_without_links(self):
        graph = make_graph([], isolated=[1, 2, 3])
        result = extract_all(graph, FAST)
        assert result.group_count == 0
        assert result.background.node_count == 0
        assert result.provenance["isolated_stripped"] == 3


class TestResult:
    def test_provenance(self, two_cliques):
        result = extract_all(two_cliques, FAST)
        assert result.provenance["fingerprint"] == two_cliques.fingerprint()
        assert result.provenance["nodes"] == 12
        assert result.provenance["links"] == 30
        assert result.provenance["config"] == FAST.to_dict()

    def test_isolated_nodes_are_background(self):
        graph = make_graph([(1, 2), (1, 3), (2, 3)], isolated=[7])
        result = extract_all(graph, FAST)
        assert result.provenance["isolated_stripped"] == 1
        assert 7 not in result.background.labels.tolist()

    def test_progress_callback(self, two_cliques):
        seen = []
        extract_all(two_cliques, FAST, progress_callback=lambda i, g, p: seen.append((i, p)))
        assert seen == [(0, pytest.approx(0.1))]

    def test_type_counts(self, two_cliques):
        counts = extract_all(two_cliques, FAST).type_counts()
        assert counts[GroupType.COMMUNITY] == 1
        assert counts[GroupType.MODULE] == 0

    def test_reproducible_and_worker_independent(self, k3_pendant):
        a = extract_all(k3_pendant, FAST)
        b = extract_all(k3_pendant, FAST)
        c = extract_all(k3_pendant, ExtractionConfig(restarts=4, null_samples=9, alpha=0.2, seed=3, workers=2))
        for other in (b, c):
            assert [g.pair for g in a.groups] == [g.pair for g in other.groups]
            assert a.background.link_set() == other.background.link_set()
        check_accounting(k3_pendant, a)
