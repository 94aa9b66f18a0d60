"""
Group Criterion
===============

A group is a pair (S, T): S holds the group's nodes and T the nodes S links
to. The criterion W rewards links from S into T and penalises links from S
into the rest of the graph:

    W = mu * (n - mu) * ( L(S,T) / (s*t) - L(S,T^C) / (s*(n-t)) )
    mu = 2*s*t / (s + t)

Links are counted as ordered pairs (u in S, v in T), so a link inside a
community (S = T) counts twice. When T covers the whole graph the second
density is taken as 0.

The type parameter tau is the Jaccard index of S and T: 1 for communities
(S = T), 0 for modules (S and T disjoint), in between for mixtures.
"""

from dataclasses import dataclass
from enum import Enum
from typing import AbstractSet, FrozenSet, Iterable, Tuple

import numpy as np

from src.core.errors import ContractViolation
from src.core.graph import Graph


class GroupType(Enum):
    COMMUNITY = "community"
    MIXTURE = "mixture"
    MODULE = "module"

    @classmethod
    def of(cls, s: AbstractSet[int], t: AbstractSet[int]) -> "GroupType":
        """Exact set classification (no tolerance)."""
        if s == t:
            return cls.COMMUNITY
        if s.isdisjoint(t):
            return cls.MODULE
        return cls.MIXTURE


def _check_sizes(s: int, t: int):
    if s < 1 or t < 1:
        raise ContractViolation(f"group sizes must be >= 1, got s={s}, t={t}")


def mu(s: int, t: int) -> float:
    """Size balance factor 2st/(s+t)."""
    _check_sizes(s, t)
    return 2.0 * s * t / (s + t)


def tau(s_nodes: AbstractSet[int], t_nodes: AbstractSet[int]) -> float:
    """Jaccard index |S & T| / |S | T|."""
    if not s_nodes or not t_nodes:
        raise ContractViolation("S and T must be nonempty")
    return len(s_nodes & t_nodes) / len(s_nodes | t_nodes)


def link_count(graph: Graph, s_nodes: Iterable[int], t_nodes: Iterable[int]) -> Tuple[int, int]:
    """
    Count ordered link pairs leaving S.

    Returns:
        (L_ST, L_STc): pairs (u, v) with u in S and v in T, and with u in S
        and v outside T.
    """
    in_s = graph.mask_of(s_nodes)
    in_t = graph.mask_of(t_nodes)
    from_s = in_s[graph.entry_rows]
    to_t = in_t[graph.indices]
    return int(np.count_nonzero(from_s & to_t)), int(np.count_nonzero(from_s & ~to_t))


def w_from_counts(n, s, t, links_st, links_stc):
    """
    Evaluate W from sizes and link counts.

    Accepts scalars or broadcastable numpy arrays so that whole move sets can
    be scored at once.
    """
    s = np.asarray(s, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    balance = 2.0 * s * t / (s + t)
    inside = np.asarray(links_st, dtype=np.float64) / (s * t)
    outside_size = n - t
    with np.errstate(divide="ignore", invalid="ignore"):
        outside = np.where(
            outside_size > 0,
            np.asarray(links_stc, dtype=np.float64) / (s * np.where(outside_size > 0, outside_size, 1.0)),
            0.0,
        )
    w = balance * (n - balance) * (inside - outside)
    return float(w) if w.ndim == 0 else w


def criterion_w(graph: Graph, s_nodes: AbstractSet[int], t_nodes: AbstractSet[int]) -> float:
    """W of (S, T) on `graph`, computed from scratch."""
    s, t = len(s_nodes), len(t_nodes)
    _check_sizes(s, t)
    links_st, links_stc = link_count(graph, s_nodes, t_nodes)
    return w_from_counts(graph.node_count, s, t, links_st, links_stc)


@dataclass(frozen=True)
class GroupPair:
    """A candidate group with its cached statistics."""

    S: FrozenSet[int]
    T: FrozenSet[int]
    links_st: int
    links_stc: int
    w: float
    tau: float

    @classmethod
    def evaluate(cls, graph: Graph, s_nodes: Iterable[int], t_nodes: Iterable[int]) -> "GroupPair":
        s_set = frozenset(int(x) for x in s_nodes)
        t_set = frozenset(int(x) for x in t_nodes)
        links_st, links_stc = link_count(graph, s_set, t_set)
        _check_sizes(len(s_set), len(t_set))
        return cls(
            S=s_set,
            T=t_set,
            links_st=links_st,
            links_stc=links_stc,
            w=w_from_counts(graph.node_count, len(s_set), len(t_set), links_st, links_stc),
            tau=tau(s_set, t_set),
        )

    @property
    def s(self) -> int:
        return len(self.S)

    @property
    def t(self) -> int:
        return len(self.T)

    @property
    def group_type(self) -> GroupType:
        return GroupType.of(self.S, self.T)

    def relabel(self, labels: np.ndarray) -> "GroupPair":
        """Translate internal ids to external labels."""
        return GroupPair(
            S=frozenset(int(labels[v]) for v in self.S),
            T=frozenset(int(labels[v]) for v in self.T),
            links_st=self.links_st,
            links_stc=self.links_stc,
            w=self.w,
            tau=self.tau,
        )

    def __repr__(self) -> str:
        return f"GroupPair(s={self.s}, t={self.t}, W={self.w:.4f}, tau={self.tau:.3f}, {self.group_type.value})"
