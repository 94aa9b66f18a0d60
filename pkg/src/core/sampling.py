"""
Network Sampling
================

Draws sampled networks that keep a fixed fraction of the original nodes.

Methods:
--------
- RD: nodes are picked one after another without replacement, each draw
  proportional to degree among the nodes not picked yet. The sample is the
  induced subgraph on the picked nodes and may be disconnected.
- BF: breadth-first traversal from a uniform random start node. Neighbours are
  enqueued in ascending id order and nodes are accepted in dequeue order.
  When a component is exhausted before the target size is reached, the
  traversal restarts from a uniform random node that has not been seen yet.

Both methods return exactly ceil(fraction * n) nodes.
"""

import logging
import math
from collections import deque
from dataclasses import asdict, dataclass, replace

import numpy as np

from src.core.config import DEFAULT_SAMPLE_FRACTION, DEFAULT_SEED, SAMPLING_BF, SAMPLING_METHODS, SAMPLING_RD
from src.core.errors import ContractViolation, SamplingError
from src.core.graph import Graph, induced_subgraph
from src.utils.seeding import make_rng

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SamplerConfig:
    """Sampling method, node fraction and seed."""

    method: str = SAMPLING_RD
    fraction: float = DEFAULT_SAMPLE_FRACTION
    seed: int = DEFAULT_SEED

    def validate(self) -> "SamplerConfig":
        if self.method not in SAMPLING_METHODS:
            raise ContractViolation(f"unknown sampling method {self.method!r}; expected one of {SAMPLING_METHODS}")
        if not 0.0 < self.fraction <= 1.0:
            raise ContractViolation(f"fraction must lie in (0, 1], got {self.fraction}")
        return self

    def target_size(self, node_count: int) -> int:
        """Number of nodes a sample of a `node_count`-node graph keeps."""
        if node_count < 1:
            raise ContractViolation("cannot sample an empty graph")
        # Round away float noise such as 0.15 * 20 = 3.0000000000000004
        k = math.ceil(round(self.fraction * node_count, 9))
        return max(1, min(k, node_count))

    def to_dict(self) -> dict:
        return asdict(self)


# ============================================================================
# NODE SELECTION
# ============================================================================


def draw_rd_nodes(graph: Graph, k: int, rng: np.random.Generator) -> np.ndarray:
    """
    Pick `k` distinct nodes with probability proportional to degree.

    When `k` exceeds the number of nodes with positive degree, all of them are
    taken and the rest is filled uniformly from degree-0 nodes.

    Returns:
        Chosen internal ids in selection order.

    Raises:
        SamplingError: If the graph has no links.
    """
    _check_size(graph, k)
    degrees = graph.degrees.astype(np.float64)
    total = degrees.sum()
    if total <= 0:
        raise SamplingError("degree-weighted sampling needs at least one link")

    positive = np.flatnonzero(degrees > 0)
    if k <= positive.size:
        return rng.choice(graph.node_count, size=k, replace=False, p=degrees / total)

    logger.debug(f"[SAMPLE] k={k} exceeds {positive.size} nodes with links; filling from isolated nodes")
    head = rng.choice(positive, size=positive.size, replace=False, p=degrees[positive] / total)
    zero = np.flatnonzero(degrees == 0)
    tail = rng.choice(zero, size=k - positive.size, replace=False)
    return np.concatenate([head, tail])


def draw_bf_nodes(graph: Graph, k: int, rng: np.random.Generator) -> np.ndarray:
    """
    Accept `k` nodes in breadth-first order from random start nodes.

    Returns:
        Accepted internal ids in acceptance order.
    """
    _check_size(graph, k)
    seen = np.zeros(graph.node_count, dtype=bool)
    accepted = []
    queue = deque()

    while len(accepted) < k:
        if not queue:
            start = int(rng.choice(np.flatnonzero(~seen)))
            seen[start] = True
            queue.append(start)
            if accepted:
                logger.debug(f"[SAMPLE] component exhausted after {len(accepted)} nodes; restarting at {start}")

        node = queue.popleft()
        accepted.append(node)
        for nb in graph.indices[graph.indptr[node]:graph.indptr[node + 1]]:
            if not seen[nb]:
                seen[nb] = True
                queue.append(int(nb))

    return np.asarray(accepted, dtype=np.int64)


def _check_size(graph: Graph, k: int):
    if graph.node_count < 1:
        raise ContractViolation("cannot sample an empty graph")
    if not 1 <= k <= graph.node_count:
        raise ContractViolation(f"sample size {k} outside [1, {graph.node_count}]")


# ============================================================================
# SAMPLED NETWORKS
# ============================================================================


def sample_rd(graph: Graph, cfg: SamplerConfig) -> Graph:
    """Induced subgraph on a degree-weighted node sample."""
    cfg.validate()
    if cfg.method != SAMPLING_RD:
        raise ContractViolation(f"sample_rd called with method {cfg.method!r}")
    nodes = draw_rd_nodes(graph, cfg.target_size(graph.node_count), make_rng(cfg.seed, "sample"))
    return _finish(graph, nodes, cfg)


def sample_bf(graph: Graph, cfg: SamplerConfig) -> Graph:
    """Induced subgraph on a breadth-first node sample."""
    cfg.validate()
    if cfg.method != SAMPLING_BF:
        raise ContractViolation(f"sample_bf called with method {cfg.method!r}")
    nodes = draw_bf_nodes(graph, cfg.target_size(graph.node_count), make_rng(cfg.seed, "sample"))
    return _finish(graph, nodes, cfg)


def sample(graph: Graph, cfg: SamplerConfig) -> Graph:
    """Dispatch on `cfg.method`."""
    cfg.validate()
    if cfg.method == SAMPLING_RD:
        return sample_rd(graph, cfg)
    return sample_bf(graph, cfg)


def _finish(graph: Graph, nodes: np.ndarray, cfg: SamplerConfig) -> Graph:
    sub = induced_subgraph(graph, nodes.tolist())
    metadata = dict(graph.metadata)
    metadata.update({
        "sampling_method": cfg.method,
        "sampling_fraction": repr(float(cfg.fraction)),
        "sampling_seed": str(int(cfg.seed)),
        "original_nodes": str(graph.node_count),
        "original_links": str(graph.link_count),
    })
    logger.info(
        f"[SAMPLE] {cfg.method}: kept {sub.node_count} of {graph.node_count} nodes, "
        f"{sub.link_count} of {graph.link_count} links"
    )
    return replace(sub, metadata=metadata)
