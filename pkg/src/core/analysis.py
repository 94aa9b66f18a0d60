"""
Group Structure Statistics
==========================

Turns extraction results into the numbers the reports are built from:

- classify / summarize: group counts, mean sizes and mean tau, overall and
  per group type.
- coverage: share of nodes (via S) and links (via removed links) explained by
  each group type, and what is left as background.
- rescale_w / histogram / collect_values: W and tau distributions, with W of
  sampled networks divided by the sampling fraction.
- aggregate_runs: means over repeated sampling runs.
- graph_profile: basic properties of a (sampled) network.

All functions are pure; sums use math.fsum so that aggregation does not depend
on the order of the runs.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from src.core.config import COVERAGE_COLUMNS, PERCENT_DECIMALS, SUMMARY_COLUMNS
from src.core.errors import ContractViolation, ProvenanceMismatchError
from src.core.graph import Graph, connected_components, to_networkx
from src.core.groups.criterion import GroupPair, GroupType
from src.core.groups.extraction import ExtractionResult

GROUP_TYPES = (GroupType.COMMUNITY, GroupType.MIXTURE, GroupType.MODULE)

_COUNT_COLUMNS = {
    GroupType.COMMUNITY: "communities",
    GroupType.MIXTURE: "mixtures",
    GroupType.MODULE: "modules",
}


def _mean(values: Sequence[float]) -> float:
    return math.fsum(values) / len(values) if values else 0.0


def _pct(part: float, whole: float) -> float:
    return 100.0 * part / whole if whole else 0.0


# ============================================================================
# CLASSIFICATION
# ============================================================================


def classify(group: GroupPair) -> GroupType:
    """Community if S = T, module if S and T are disjoint, mixture otherwise."""
    return GroupType.of(group.S, group.T)


# ============================================================================
# SUMMARY
# ============================================================================


@dataclass(frozen=True)
class TypeSummary:
    count: float = 0.0
    mean_s: float = 0.0


@dataclass(frozen=True)
class SummaryReport:
    """
    Group counts and mean sizes.

    `empty` is set when there were no groups; the means are then 0. After
    aggregation `runs` holds the number of reports averaged.
    """

    group_count: float
    mean_s: float
    mean_t: float
    mean_tau: float
    per_type: Dict[GroupType, TypeSummary] = field(default_factory=dict)
    empty: bool = False
    runs: int = 1

    def type_summary(self, group_type: GroupType) -> TypeSummary:
        return self.per_type.get(group_type, TypeSummary())

    def to_row(self, network: str) -> Dict[str, object]:
        row = {
            "network": network,
            "groups": self.group_count,
            "mean_s": self.mean_s,
            "mean_t": self.mean_t,
            "mean_tau": self.mean_tau,
        }
        for group_type, count_column in _COUNT_COLUMNS.items():
            summary = self.type_summary(group_type)
            row[count_column] = summary.count
            row[f"{group_type.value}_mean_s"] = summary.mean_s
        return {column: row[column] for column in SUMMARY_COLUMNS}


def summarize(result: ExtractionResult) -> SummaryReport:
    pairs = [g.pair for g in result.groups]
    if not pairs:
        return SummaryReport(0, 0.0, 0.0, 0.0, {t: TypeSummary() for t in GROUP_TYPES}, empty=True)

    per_type = {}
    for group_type in GROUP_TYPES:
        sizes = [p.s for p in pairs if classify(p) is group_type]
        per_type[group_type] = TypeSummary(count=len(sizes), mean_s=_mean(sizes))

    return SummaryReport(
        group_count=len(pairs),
        mean_s=_mean([p.s for p in pairs]),
        mean_t=_mean([p.t for p in pairs]),
        mean_tau=_mean([p.tau for p in pairs]),
        per_type=per_type,
    )


# ============================================================================
# COVERAGE
# ============================================================================


@dataclass(frozen=True)
class CoverageReport:
    """Percent of nodes and links explained by each group type and left as background."""

    nodes_pct: Dict[GroupType, float]
    links_pct: Dict[GroupType, float]
    background_nodes_pct: float
    background_links_pct: float
    runs: int = 1

    def to_row(self, network: str) -> Dict[str, object]:
        row: Dict[str, object] = {"network": network}
        for group_type in GROUP_TYPES:
            row[f"{group_type.value}_nodes_pct"] = self.nodes_pct.get(group_type, 0.0)
            row[f"{group_type.value}_links_pct"] = self.links_pct.get(group_type, 0.0)
        row["background_nodes_pct"] = self.background_nodes_pct
        row["background_links_pct"] = self.background_links_pct
        return {column: row[column] for column in COVERAGE_COLUMNS}

    def rounded(self, decimals: int = PERCENT_DECIMALS) -> "CoverageReport":
        return CoverageReport(
            nodes_pct={t: round(v, decimals) for t, v in self.nodes_pct.items()},
            links_pct={t: round(v, decimals) for t, v in self.links_pct.items()},
            background_nodes_pct=round(self.background_nodes_pct, decimals),
            background_links_pct=round(self.background_links_pct, decimals),
            runs=self.runs,
        )


def check_provenance(result: ExtractionResult, original: Graph):
    """
    Raises:
        ProvenanceMismatchError: If `result` was not extracted from `original`.
    """
    expected = result.provenance.get("fingerprint")
    if expected is None:
        raise ProvenanceMismatchError("result carries no graph fingerprint")
    if expected != original.fingerprint():
        raise ProvenanceMismatchError(
            f"result was extracted from a different graph "
            f"(n={result.provenance.get('nodes')}, m={result.provenance.get('links')}; "
            f"given n={original.node_count}, m={original.link_count})"
        )


def coverage(result: ExtractionResult, original: Graph) -> CoverageReport:
    """
    Node and link coverage against the original graph.

    Node shares use the union of S over groups of a type; link shares use the
    union of removed links. Background nodes are those in no group's S,
    background links those never removed.
    """
    check_provenance(result, original)
    n, m = original.node_count, original.link_count

    nodes_pct: Dict[GroupType, float] = {}
    links_pct: Dict[GroupType, float] = {}
    covered = set()
    for group_type in GROUP_TYPES:
        members = set()
        links = set()
        for group in result.groups:
            if classify(group.pair) is group_type:
                members.update(group.pair.S)
                links.update(group.removed_links)
        covered.update(members)
        nodes_pct[group_type] = _pct(len(members), n)
        links_pct[group_type] = _pct(len(links), m)

    return CoverageReport(
        nodes_pct=nodes_pct,
        links_pct=links_pct,
        background_nodes_pct=_pct(n - len(covered), n),
        background_links_pct=_pct(result.background.link_count, m) if m else 100.0,
    )


# ============================================================================
# DISTRIBUTIONS
# ============================================================================


def rescale_w(values: Iterable[float], fraction: float) -> List[float]:
    """Divide each W by the sampling fraction."""
    if fraction <= 0:
        raise ContractViolation(f"fraction must be > 0, got {fraction}")
    return [float(v) / fraction for v in values]


@dataclass(frozen=True)
class Histogram:
    """
    Equal-width histogram.

    Values outside the range are clamped into the edge bins and counted in
    `clamped`. `density` integrates to 1 unless `empty` is set.
    """

    edges: np.ndarray
    counts: np.ndarray
    density: np.ndarray
    clamped: int = 0
    empty: bool = False

    @property
    def centers(self) -> np.ndarray:
        return (self.edges[:-1] + self.edges[1:]) / 2.0

    @property
    def width(self) -> float:
        return float(self.edges[1] - self.edges[0])

    def rows(self) -> List[Tuple[float, float]]:
        return [(float(c), float(d)) for c, d in zip(self.centers, self.density)]


def histogram(values: Iterable[float], bins: int, value_range: Optional[Tuple[float, float]] = None) -> Histogram:
    """
    Bin `values` into `bins` equal-width bins over `value_range`.

    Without a range the data range is used (widened by 0.5 on both sides when
    all values are equal).
    """
    data = np.asarray(list(values), dtype=np.float64)
    if bins < 1:
        raise ContractViolation(f"bins must be >= 1, got {bins}")

    if value_range is None:
        if data.size == 0:
            lo, hi = 0.0, 1.0
        else:
            lo, hi = float(data.min()), float(data.max())
            if lo == hi:
                lo, hi = lo - 0.5, hi + 0.5
    else:
        lo, hi = float(value_range[0]), float(value_range[1])
    if not lo < hi:
        raise ContractViolation(f"histogram range must satisfy lo < hi, got ({lo}, {hi})")

    edges = np.linspace(lo, hi, bins + 1)
    if data.size == 0:
        zeros = np.zeros(bins, dtype=np.float64)
        return Histogram(edges=edges, counts=np.zeros(bins, dtype=np.int64), density=zeros, empty=True)

    clamped = int(np.count_nonzero((data < lo) | (data > hi)))
    counts, _ = np.histogram(np.clip(data, lo, hi), bins=edges)
    density = counts / (data.size * (edges[1] - edges[0]))
    return Histogram(edges=edges, counts=counts.astype(np.int64), density=density, clamped=clamped)


def collect_values(results: Iterable[ExtractionResult], key: str) -> List[float]:
    """Pool the per-group values of `key` ('tau' or 'W') over several results."""
    if key not in ("tau", "W"):
        raise ContractViolation(f"unknown group value {key!r}; expected 'tau' or 'W'")
    values = []
    for result in results:
        for group in result.groups:
            values.append(group.pair.tau if key == "tau" else group.pair.w)
    return values


# ============================================================================
# AGGREGATION
# ============================================================================


Report = Union[SummaryReport, CoverageReport]


def aggregate_runs(reports: Sequence[Report]) -> Report:
    """
    Field-wise mean over per-run reports of one kind.

    Group counts may become fractional. Mean sizes (overall and per type)
    are averaged only over runs that had such groups.
    """
    if not reports:
        raise ContractViolation("cannot aggregate an empty list of reports")
    kind = type(reports[0])
    if any(type(r) is not kind for r in reports):
        raise ContractViolation("cannot aggregate a mix of report kinds")
    if kind is SummaryReport:
        return _aggregate_summaries(reports)
    return _aggregate_coverage(reports)


def _aggregate_summaries(reports: Sequence[SummaryReport]) -> SummaryReport:
    with_groups = [r for r in reports if r.group_count > 0]
    per_type = {}
    for group_type in GROUP_TYPES:
        entries = [r.type_summary(group_type) for r in reports]
        present = [e.mean_s for e in entries if e.count > 0]
        per_type[group_type] = TypeSummary(count=_mean([e.count for e in entries]), mean_s=_mean(present))
    return SummaryReport(
        group_count=_mean([r.group_count for r in reports]),
        mean_s=_mean([r.mean_s for r in with_groups]),
        mean_t=_mean([r.mean_t for r in with_groups]),
        mean_tau=_mean([r.mean_tau for r in with_groups]),
        per_type=per_type,
        empty=not with_groups,
        runs=len(reports),
    )


def _aggregate_coverage(reports: Sequence[CoverageReport]) -> CoverageReport:
    return CoverageReport(
        nodes_pct={t: _mean([r.nodes_pct.get(t, 0.0) for r in reports]) for t in GROUP_TYPES},
        links_pct={t: _mean([r.links_pct.get(t, 0.0) for r in reports]) for t in GROUP_TYPES},
        background_nodes_pct=_mean([r.background_nodes_pct for r in reports]),
        background_links_pct=_mean([r.background_links_pct for r in reports]),
        runs=len(reports),
    )


# ============================================================================
# NETWORK PROFILE
# ============================================================================


@dataclass(frozen=True)
class GraphProfile:
    nodes: int
    links: int
    mean_degree: float
    components: int
    largest_component_fraction: float
    average_clustering: float

    def to_dict(self) -> Dict[str, object]:
        return dict(self.__dict__)


def graph_profile(graph: Graph) -> GraphProfile:
    """Size, mean degree, component structure and average clustering of `graph`."""
    n = graph.node_count
    if n == 0:
        return GraphProfile(0, 0, 0.0, 0, 0.0, 0.0)
    components = connected_components(graph)
    largest = max(len(c) for c in components)
    return GraphProfile(
        nodes=n,
        links=graph.link_count,
        mean_degree=2.0 * graph.link_count / n,
        components=len(components),
        largest_component_fraction=largest / n,
        average_clustering=float(nx.average_clustering(to_networkx(graph))),
    )
