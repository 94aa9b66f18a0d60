"""
Sequential Group Extraction
===========================

Groups are extracted one by one:

1. Search the working graph for the best (S, T) pair.
2. Compare its W with the best W on Erdos-Renyi graphs matching the working
   graph's current node and link counts.
3. If the p-value is below alpha, record the group, remove the links between
   S and T, drop nodes that became isolated, and repeat. Otherwise stop.

Only links are removed, so a node can belong to several groups. Whatever is
left at the end is the background. Isolated nodes of the input are stripped
before the first search; they count as background.

Every random stream is derived from `cfg.seed` and the iteration (search) or
the (n, m) pair (null), so results are reproducible and independent of the
number of workers. Null estimates are reused within one call when (n, m)
repeats.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Tuple

from src.core.config import GROUPS_FILE_FORMAT
from src.core.errors import ContractViolation
from src.core.graph import Graph, Link, remove_isolated_nodes, remove_links_between
from src.core.groups.criterion import GroupPair, GroupType
from src.core.groups.null_model import NullEstimate, estimate_null, p_value
from src.core.groups.options import ExtractionConfig
from src.core.groups.search import search_best_group
from src.utils.logger import log_timed
from src.utils.seeding import make_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtractedGroup:
    """
    A significant group in external labels.

    Attributes:
        pair: S, T and the statistics measured on the working graph.
        removed_links: Links between S and T removed after extraction,
            as (u, v) label pairs with u < v.
        p_value: Add-one p-value against the matched null.
        null: The null estimate the group was tested against.
        working_nodes: Node count of the working graph the group was found in.
        working_links: Link count of that working graph.
    """

    pair: GroupPair
    removed_links: FrozenSet[Link]
    p_value: float
    null: Optional[NullEstimate] = None
    working_nodes: int = 0
    working_links: int = 0

    @property
    def group_type(self) -> GroupType:
        return self.pair.group_type


@dataclass
class ExtractionResult:
    """Groups in extraction order, plus the background graph."""

    groups: List[ExtractedGroup]
    background: Graph
    provenance: Dict[str, Any] = field(default_factory=dict)

    @property
    def group_count(self) -> int:
        return len(self.groups)

    def removed_link_total(self) -> int:
        return sum(len(g.removed_links) for g in self.groups)

    def type_counts(self) -> Dict[GroupType, int]:
        counts = {t: 0 for t in GroupType}
        for group in self.groups:
            counts[group.group_type] += 1
        return counts


ProgressCallback = Callable[[int, ExtractedGroup, float], None]


def _label_links(labels, links) -> FrozenSet[Link]:
    out = set()
    for u, v in links:
        a, b = int(labels[u]), int(labels[v])
        out.add((a, b) if a < b else (b, a))
    return frozenset(out)


@log_timed(stage="EXTRACT")
def extract_all(
    graph: Graph,
    cfg: ExtractionConfig,
    progress_callback: Optional[ProgressCallback] = None,
) -> ExtractionResult:
    """
    Extract significant groups until the best remaining one is not significant.

    Args:
        graph: Input graph (not modified).
        cfg: Extraction settings.
        progress_callback: Called as (iteration, group, p_value) after each
            recorded group.

    Returns:
        ExtractionResult with groups in extraction order.
    """
    cfg.validate()
    if graph.node_count == 0:
        raise ContractViolation("cannot extract groups from an empty graph")

    working, stripped = remove_isolated_nodes(graph)
    if stripped:
        logger.info(f"[EXTRACT] stripped {len(stripped)} isolated nodes before the first search")

    provenance = {
        "format": GROUPS_FILE_FORMAT,
        "fingerprint": graph.fingerprint(),
        "nodes": graph.node_count,
        "links": graph.link_count,
        "isolated_stripped": len(stripped),
        "config": cfg.to_dict(),
    }

    null_cache: Dict[Tuple[int, int], NullEstimate] = {}
    groups: List[ExtractedGroup] = []
    iteration = 0

    while working.link_count >= 1:
        if cfg.max_groups is not None and len(groups) >= cfg.max_groups:
            logger.info(f"[EXTRACT] reached max_groups={cfg.max_groups}")
            break

        n, m = working.node_count, working.link_count
        best = search_best_group(working, cfg, make_rng(cfg.seed, "search", iteration))
        if best.links_st < 1:
            logger.info("[EXTRACT] best pair has no links between S and T; stopping")
            break

        estimate = null_cache.get((n, m))
        if estimate is None:
            estimate = estimate_null(n, m, cfg, make_rng(cfg.seed, "null", n, m))
            null_cache[(n, m)] = estimate
        p = p_value(best.w, estimate)

        if p >= cfg.alpha:
            logger.info(f"[EXTRACT] iteration {iteration}: W={best.w:.4f} not significant (p={p:.4f}); stopping")
            break

        remaining, removed = remove_links_between(working, best.S, best.T)
        group = ExtractedGroup(
            pair=best.relabel(working.labels),
            removed_links=_label_links(working.labels, removed),
            p_value=p,
            null=estimate,
            working_nodes=n,
            working_links=m,
        )
        groups.append(group)
        logger.info(
            f"[EXTRACT] group {len(groups)}: {group.group_type.value} s={best.s} t={best.t} "
            f"W={best.w:.4f} tau={best.tau:.3f} p={p:.4f}, removed {len(removed)} links"
        )

        working, _ = remove_isolated_nodes(remaining)
        if progress_callback is not None:
            progress_callback(iteration, group, p)
        iteration += 1

    logger.info(
        f"[EXTRACT] {len(groups)} groups; background n={working.node_count}, m={working.link_count}"
    )
    return ExtractionResult(groups=groups, background=working, provenance=provenance)
