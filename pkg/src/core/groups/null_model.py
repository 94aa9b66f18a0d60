"""
Erdos-Renyi Null Model
======================

A candidate group is significant when its W is unusually large compared with
the best W the same search finds on uniform random graphs G(n, m) with the
working graph's node and link counts.

- `gen_er_gnm` draws a uniform simple graph with exactly n nodes and m links.
- `estimate_null` runs the group search on `null_samples` such graphs.
- `p_value` uses the add-one estimator (1 + #{samples >= W}) / (K + 1), so a
  p-value is never 0 and 100 replicas can resolve the 1% level.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Tuple

import numpy as np

from src.core.errors import ContractViolation, NullModelError
from src.core.graph import Graph
from src.core.groups.options import ExtractionConfig
from src.core.groups.search import search_best_group
from src.utils.concurrency import ordered_map
from src.utils.seeding import spawn_seeds

logger = logging.getLogger(__name__)


def gen_er_gnm(n: int, m: int, rng: np.random.Generator) -> Graph:
    """
    Uniform random simple graph with `n` nodes and exactly `m` links.

    Links are drawn as random node pairs; loops are rejected and repeats
    dropped until m distinct pairs are collected. Dense requests sample the
    complement instead.

    Raises:
        ContractViolation: If m is outside [0, n(n-1)/2].
    """
    if n < 0:
        raise ContractViolation(f"node count must be >= 0, got {n}")
    capacity = n * (n - 1) // 2
    if not 0 <= m <= capacity:
        raise ContractViolation(f"link count {m} outside [0, {capacity}] for n={n}")

    if m > capacity // 2:
        excluded = _distinct_pair_keys(n, capacity - m, rng)
        u, v = np.triu_indices(n, k=1)
        keys = u.astype(np.int64) * n + v
        keys = keys[~np.isin(keys, excluded)]
    else:
        keys = _distinct_pair_keys(n, m, rng)

    edges = np.column_stack([keys // n, keys % n]) if keys.size else np.empty((0, 2), dtype=np.int64)
    return Graph.from_edge_array(n, edges, metadata={"model": "gnm", "n": str(n), "m": str(m)})


def _distinct_pair_keys(n: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """`count` distinct unordered pairs encoded as u*n + v (u < v), uniform."""
    chosen = np.empty(0, dtype=np.int64)
    while chosen.size < count:
        batch = 2 * (count - chosen.size) + 16
        u = rng.integers(0, n, size=batch, dtype=np.int64)
        v = rng.integers(0, n, size=batch, dtype=np.int64)
        keep = u != v
        keys = np.minimum(u, v)[keep] * n + np.maximum(u, v)[keep]
        merged = np.concatenate([chosen, keys])
        # Keep first occurrences in draw order
        _, first = np.unique(merged, return_index=True)
        chosen = merged[np.sort(first)][:count]
    return chosen


@dataclass(frozen=True)
class NullEstimate:
    """Best-W scores of the search on matched G(n, m) replicas."""

    samples: Tuple[float, ...]
    n: int
    m: int
    config: Dict[str, Any] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.samples)

    @property
    def degenerate(self) -> bool:
        """True when some replica produced no positive W."""
        return any(x <= 0 for x in self.samples)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "m": self.m,
            "samples": list(self.samples),
            "degenerate": self.degenerate,
            "config": dict(self.config),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "NullEstimate":
        return cls(
            samples=tuple(float(x) for x in data["samples"]),
            n=int(data["n"]),
            m=int(data["m"]),
            config=dict(data.get("config", {})),
        )


def estimate_null(n: int, m: int, cfg: ExtractionConfig, rng: np.random.Generator) -> NullEstimate:
    """
    Simulate `cfg.null_samples` replicas of G(n, m) and record the best W of each.

    Raises:
        NullModelError: If m < 1 (no group exists on a graph without links).
    """
    cfg.validate()
    if m < 1:
        raise NullModelError(f"null model needs at least one link, got m={m}")

    seeds = spawn_seeds(rng, cfg.null_samples)
    search_cfg = cfg.serial()

    def replica(index: int) -> float:
        replica_rng = np.random.default_rng(seeds[index])
        graph = gen_er_gnm(n, m, replica_rng)
        return search_best_group(graph, search_cfg, replica_rng).w

    samples = ordered_map(replica, range(cfg.null_samples), max_workers=cfg.workers)
    estimate = NullEstimate(samples=tuple(float(x) for x in samples), n=n, m=m, config=cfg.to_dict())
    logger.info(
        f"[NULL] G({n}, {m}): {estimate.size} replicas, best W median {float(np.median(samples)):.4f}, "
        f"max {max(samples):.4f}"
    )
    if estimate.degenerate:
        logger.warning(f"[NULL] G({n}, {m}) produced replicas without a positive W")
    return estimate


def p_value(observed_w: float, estimate: NullEstimate) -> float:
    """Add-one empirical p-value of `observed_w` against the null samples."""
    if estimate.size == 0:
        raise ContractViolation("null estimate has no samples")
    exceed = sum(1 for x in estimate.samples if x >= observed_w)
    return (1 + exceed) / (estimate.size + 1)
