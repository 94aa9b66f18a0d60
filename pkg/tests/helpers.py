"""
Shared Test Helpers
===================

Brute-force reference implementations used as oracles by the unit and
acceptance tests.
"""

from typing import FrozenSet, Iterable, List, Tuple

import numpy as np

from src.core.graph import Graph


def make_graph(pairs, isolated=()) -> Graph:
    return Graph.from_label_pairs(pairs, isolated=isolated)


def ids(graph: Graph, labels: Iterable[int]) -> FrozenSet[int]:
    """Internal ids of the given external labels."""
    lookup = graph.label_to_id()
    return frozenset(lookup[label] for label in labels)


def labels_of(graph: Graph, nodes: Iterable[int]) -> FrozenSet[int]:
    return frozenset(int(graph.labels[v]) for v in nodes)


def reference_w(n: int, s: int, t: int, links_st: int, links_stc: int) -> float:
    """W written out term by term."""
    m = 2.0 * s * t / (s + t)
    inside = links_st / (s * t)
    outside = 0.0 if t == n else links_stc / (s * (n - t))
    return m * (n - m) * (inside - outside)


def _bits(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def brute_force_best(graph: Graph) -> Tuple[float, FrozenSet[int], FrozenSet[int]]:
    """
    Exact maximum of W over all nonempty (S, T) pairs (small graphs only).

    Returns:
        (best W, S, T) in internal ids; the first maximiser in enumeration order.
    """
    n = graph.node_count
    if n > 10:
        raise ValueError("brute force is limited to n <= 10")
    adjacency = [0] * n
    for u, v in graph.edge_array():
        adjacency[u] |= 1 << int(v)
        adjacency[v] |= 1 << int(u)
    degree = [bin(a).count("1") for a in adjacency]

    best = (-np.inf, frozenset(), frozenset())
    full = 1 << n
    for s_mask in range(1, full):
        s_nodes = _bits(s_mask)
        s = len(s_nodes)
        degree_s = sum(degree[u] for u in s_nodes)
        for t_mask in range(1, full):
            links_st = sum(bin(adjacency[u] & t_mask).count("1") for u in s_nodes)
            t = bin(t_mask).count("1")
            w = reference_w(n, s, t, links_st, degree_s - links_st)
            if w > best[0]:
                best = (w, frozenset(s_nodes), frozenset(_bits(t_mask)))
    return best


def random_small_graph(rng: np.random.Generator, n: int, m: int) -> Graph:
    """Uniform simple graph on n nodes with m links (labels 0..n-1)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = rng.choice(len(pairs), size=m, replace=False)
    return Graph.from_edge_array(n, np.asarray([pairs[i] for i in chosen], dtype=np.int64).reshape(-1, 2))


def hand_result():
    """
    A result with one community and one module on a five-node graph.

    Graph: triangle 1-2-3, path 3-4-5. The community {1, 2, 3} removes the
    triangle, the module ({4}, {5}) removes 4-5, and 3-4 stays as background.

    Returns:
        (graph, result)
    """
    from src.core.groups.criterion import GroupPair
    from src.core.groups.extraction import ExtractedGroup, ExtractionResult

    graph = make_graph([(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])

    def group(s, t, removed, p_value):
        pair = GroupPair.evaluate(graph, ids(graph, s), ids(graph, t)).relabel(graph.labels)
        return ExtractedGroup(
            pair=pair,
            removed_links=frozenset(removed),
            p_value=p_value,
            working_nodes=graph.node_count,
            working_links=graph.link_count,
        )

    result = ExtractionResult(
        groups=[
            group([1, 2, 3], [1, 2, 3], [(1, 2), (1, 3), (2, 3)], 0.001),
            group([4], [5], [(4, 5)], 0.004),
        ],
        background=make_graph([(3, 4)]),
        provenance={
            "format": "netgroups.groups/1",
            "fingerprint": graph.fingerprint(),
            "nodes": graph.node_count,
            "links": graph.link_count,
            "isolated_stripped": 0,
            "config": {"restarts": 2, "null_samples": 9, "alpha": 0.2, "seed": 0, "max_groups": None},
        },
    )
    return graph, result
