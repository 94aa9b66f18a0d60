"""
Benchmark Graphs
================

Synthetic graphs with known structure, used by the acceptance tests and for
quick experiments with the CLI.

- planted_partition: blocks with link probability p_in inside a block and
  p_out between blocks (networkx `random_partition_graph`).
- erdos_renyi: uniform G(n, m) graph from the null-model generator.
"""

import logging
from typing import List, Sequence, Tuple

import networkx as nx

from src.core.errors import ContractViolation
from src.core.graph import Graph, NodeSet, from_networkx
from src.core.groups.null_model import gen_er_gnm
from src.utils.seeding import derive_seed, make_rng

logger = logging.getLogger(__name__)


def planted_partition(
    block_sizes: Sequence[int],
    p_in: float,
    p_out: float,
    seed: int = 0,
) -> Tuple[Graph, List[NodeSet]]:
    """
    Random graph with planted blocks.

    Nodes are labelled 0..n-1 block after block.

    Returns:
        The graph and the node labels of each block.
    """
    if not block_sizes or any(size < 1 for size in block_sizes):
        raise ContractViolation(f"block sizes must be positive, got {list(block_sizes)}")
    if not (0.0 <= p_in <= 1.0 and 0.0 <= p_out <= 1.0):
        raise ContractViolation(f"probabilities must lie in [0, 1], got p_in={p_in}, p_out={p_out}")

    g = nx.random_partition_graph(list(block_sizes), p_in, p_out, seed=derive_seed(seed, "planted"))
    blocks = [frozenset(int(v) for v in block) for block in g.graph["partition"]]
    graph = from_networkx(g)
    logger.debug(f"[BENCH] planted partition {list(block_sizes)}: n={graph.node_count}, m={graph.link_count}")
    return graph, blocks


def erdos_renyi(n: int, m: int, seed: int = 0) -> Graph:
    """Uniform random graph with n nodes and m links."""
    return gen_er_gnm(n, m, make_rng(seed, "erdos_renyi"))
