"""
Group Search
============

Random-restart steepest-ascent hill climbing over (S, T) pairs.

A move adds or removes a single node in either S or T. All 4n candidate
moves are scored at once from per-node neighbour counts into S and T, so a
step costs O(n) vector work plus the degree of the moved node. The climb
stops at a local maximum; W is then recomputed from scratch.

Restart i starts community-like (S = T = closed neighbourhood of a random
node) when i is even and module-like (S = {v}, T = neighbours of v) when i
is odd. Every restart gets its own generator seeded up front, so the result
does not depend on the number of workers.
"""

import logging
from typing import Iterable, List

import numpy as np

from src.core.config import W_RELATIVE_TOLERANCE
from src.core.errors import ContractViolation, SearchError
from src.core.graph import Graph
from src.core.groups.criterion import GroupPair, w_from_counts
from src.core.groups.options import ExtractionConfig
from src.utils.concurrency import ordered_map
from src.utils.seeding import spawn_seeds

logger = logging.getLogger(__name__)

# Move kinds, in the order their score vectors are stacked
ADD_S, DROP_S, ADD_T, DROP_T = range(4)


class _ClimbState:
    """Membership masks and the counts W depends on."""

    def __init__(self, graph: Graph, s_nodes: Iterable[int], t_nodes: Iterable[int]):
        self.graph = graph
        self.degrees = graph.degrees.astype(np.int64)
        self.in_s = graph.mask_of(s_nodes)
        self.in_t = graph.mask_of(t_nodes)
        if not self.in_s.any() or not self.in_t.any():
            raise ContractViolation("initial S and T must be nonempty")

        rows, cols = graph.entry_rows, graph.indices
        n = graph.node_count
        # Neighbours of each node that lie in S (resp. T)
        self.a_s = np.bincount(rows[self.in_s[cols]], minlength=n).astype(np.int64)
        self.a_t = np.bincount(rows[self.in_t[cols]], minlength=n).astype(np.int64)

        self.s = int(self.in_s.sum())
        self.t = int(self.in_t.sum())
        self.links_st = int(self.a_t[self.in_s].sum())
        self.degree_s = int(self.degrees[self.in_s].sum())

    @property
    def links_stc(self) -> int:
        return self.degree_s - self.links_st

    def current_w(self) -> float:
        return w_from_counts(self.graph.node_count, self.s, self.t, self.links_st, self.links_stc)

    def move_scores(self) -> np.ndarray:
        """(4, n) array of W after each move; invalid moves score -inf."""
        n = self.graph.node_count
        deg = self.degrees

        add_s_st = self.links_st + self.a_t
        drop_s_st = self.links_st - self.a_t
        add_t_st = self.links_st + self.a_s
        drop_t_st = self.links_st - self.a_s

        scores = np.vstack([
            w_from_counts(n, self.s + 1, self.t, add_s_st, self.degree_s + deg - add_s_st),
            w_from_counts(n, max(self.s - 1, 1), self.t, drop_s_st, self.degree_s - deg - drop_s_st),
            w_from_counts(n, self.s, self.t + 1, add_t_st, self.degree_s - add_t_st),
            w_from_counts(n, self.s, max(self.t - 1, 1), drop_t_st, self.degree_s - drop_t_st),
        ])

        valid = np.vstack([
            ~self.in_s,
            self.in_s if self.s > 1 else np.zeros(n, dtype=bool),
            ~self.in_t,
            self.in_t if self.t > 1 else np.zeros(n, dtype=bool),
        ])
        return np.where(valid, scores, -np.inf)

    def apply(self, kind: int, v: int):
        nbrs = self.graph.indices[self.graph.indptr[v]:self.graph.indptr[v + 1]]
        if kind == ADD_S:
            self.in_s[v] = True
            self.s += 1
            self.links_st += int(self.a_t[v])
            self.degree_s += int(self.degrees[v])
            self.a_s[nbrs] += 1
        elif kind == DROP_S:
            self.in_s[v] = False
            self.s -= 1
            self.links_st -= int(self.a_t[v])
            self.degree_s -= int(self.degrees[v])
            self.a_s[nbrs] -= 1
        elif kind == ADD_T:
            self.in_t[v] = True
            self.t += 1
            self.links_st += int(self.a_s[v])
            self.a_t[nbrs] += 1
        else:
            self.in_t[v] = False
            self.t -= 1
            self.links_st -= int(self.a_s[v])
            self.a_t[nbrs] -= 1

    def members(self):
        return np.flatnonzero(self.in_s), np.flatnonzero(self.in_t)


def _improves(candidate: float, current: float) -> bool:
    return candidate > current + W_RELATIVE_TOLERANCE * max(1.0, abs(current))


def hill_climb(
    graph: Graph,
    init_s: Iterable[int],
    init_t: Iterable[int],
    rng: np.random.Generator,
) -> GroupPair:
    """
    Steepest-ascent local search from (init_s, init_t).

    Each step applies the single best strictly improving move; ties between
    equally good moves are broken uniformly with `rng`.

    Returns:
        The local maximum, with W recomputed from scratch.
    """
    state = _ClimbState(graph, init_s, init_t)
    current = state.current_w()
    steps = 0

    while True:
        scores = state.move_scores()
        best = float(scores.max())
        if not _improves(best, current):
            break
        tied = np.flatnonzero(scores.ravel() >= best - W_RELATIVE_TOLERANCE * max(1.0, abs(best)))
        pick = int(tied[rng.integers(tied.size)]) if tied.size > 1 else int(tied[0])
        kind, v = divmod(pick, graph.node_count)
        state.apply(kind, v)
        current = state.current_w()
        steps += 1

    s_nodes, t_nodes = state.members()
    result = GroupPair.evaluate(graph, s_nodes, t_nodes)
    logger.debug(f"[SEARCH] climb finished after {steps} moves: {result!r}")
    return result


def initial_pair(graph: Graph, v: int, community_like: bool):
    """Closed neighbourhood of v for both sets, or ({v}, neighbours of v)."""
    nbrs = graph.neighbors(v).tolist()
    if community_like:
        closed = [v] + nbrs
        return closed, closed
    return [v], nbrs


def search_best_group(graph: Graph, cfg: ExtractionConfig, rng: np.random.Generator) -> GroupPair:
    """
    Best pair over `cfg.restarts` hill climbs.

    Raises:
        SearchError: If the graph has no links.
    """
    cfg.validate()
    if graph.link_count == 0:
        raise SearchError("cannot search for groups in a graph without links")

    starts = np.flatnonzero(graph.degrees > 0)
    seeds = spawn_seeds(rng, cfg.restarts)

    def climb(index: int) -> GroupPair:
        restart_rng = np.random.default_rng(seeds[index])
        v = int(restart_rng.choice(starts))
        init_s, init_t = initial_pair(graph, v, community_like=index % 2 == 0)
        return hill_climb(graph, init_s, init_t, restart_rng)

    results: List[GroupPair] = ordered_map(climb, range(cfg.restarts), max_workers=cfg.workers)

    best = results[0]
    for candidate in results[1:]:
        if candidate.w > best.w:
            best = candidate
    logger.debug(f"[SEARCH] best of {cfg.restarts} restarts: {best!r}")
    return best
