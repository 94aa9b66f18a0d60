"""
Graph Core
==========

Compact undirected simple graph used by every other module, together with
edge-list ingestion and the mutation primitives the extraction loop needs.

Representation:
---------------
Nodes carry dense internal ids 0..n-1 and keep their original (integer)
labels in `labels`. Adjacency is stored in CSR form: the neighbours of node
v are `indices[indptr[v]:indptr[v + 1]]`, sorted ascending. Arrays are
made read-only after construction, and every "mutation" returns a new
Graph, so a graph can be shared freely between threads.

Edge-list format:
-----------------
UTF-8 text, one "u v" pair of integer labels per line (any whitespace).
Lines starting with '#' are comments. The writer emits a
`# isolated: <labels>` directive for degree-0 nodes so that a round trip
preserves the node count; the loader honours it.
"""

import hashlib
import io
import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import BinaryIO, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import networkx as nx
import numpy as np

from src.core.errors import ContractViolation, EdgeListParseError, EmptyGraphError

logger = logging.getLogger(__name__)

NodeSet = FrozenSet[int]
Link = Tuple[int, int]

ISOLATED_DIRECTIVE = "isolated:"


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def _canonical_edges(edges: np.ndarray) -> np.ndarray:
    """Drop self-loops, orient each pair as (min, max) and remove duplicates."""
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    edges = edges[edges[:, 0] != edges[:, 1]]
    if edges.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    oriented = np.sort(edges, axis=1)
    return np.unique(oriented, axis=0)


# ============================================================================
# GRAPH
# ============================================================================


@dataclass(frozen=True, eq=False)
class Graph:
    """
    Immutable undirected simple graph.

    Attributes:
        labels: External label of each internal node id (int64, length n).
        indptr: CSR row pointer (length n + 1).
        indices: CSR column indices; each row sorted ascending.
    """

    labels: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray
    metadata: Dict[str, str] = field(default_factory=dict)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_edge_array(
        cls,
        node_count: int,
        edges: np.ndarray,
        labels: Optional[Iterable[int]] = None,
        metadata: Optional[Mapping[str, str]] = None,
    ) -> "Graph":
        """
        Build a graph on internal ids 0..node_count-1.

        Self-loops and duplicate links (in either orientation) are dropped.
        """
        n = int(node_count)
        canonical = _canonical_edges(edges)
        if canonical.size and (canonical.min() < 0 or canonical.max() >= n):
            raise ContractViolation(f"edge endpoint outside [0, {n})")

        label_array = np.arange(n, dtype=np.int64) if labels is None else np.asarray(list(labels), dtype=np.int64)
        if label_array.shape != (n,):
            raise ContractViolation(f"expected {n} labels, got {label_array.size}")

        # Symmetrize, then sort by (row, column) to obtain sorted CSR rows
        rows = np.concatenate([canonical[:, 0], canonical[:, 1]])
        cols = np.concatenate([canonical[:, 1], canonical[:, 0]])
        order = np.lexsort((cols, rows))
        rows, cols = rows[order], cols[order]

        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])

        return cls(
            labels=_readonly(label_array.copy()),
            indptr=_readonly(indptr),
            indices=_readonly(cols.astype(np.int64)),
            metadata=dict(metadata or {}),
        )

    @classmethod
    def from_label_pairs(
        cls,
        pairs: Iterable[Tuple[int, int]],
        isolated: Iterable[int] = (),
        metadata: Optional[Mapping[str, str]] = None,
    ) -> "Graph":
        """Build a graph from label pairs; labels are remapped to dense ids in ascending order."""
        pair_array = np.asarray(list(pairs), dtype=np.int64).reshape(-1, 2)
        extra = np.asarray(list(isolated), dtype=np.int64)
        all_labels = np.unique(np.concatenate([pair_array.ravel(), extra]))
        internal = np.searchsorted(all_labels, pair_array)
        return cls.from_edge_array(len(all_labels), internal, all_labels, metadata)

    # ------------------------------------------------------------------
    # Basic properties
    # ------------------------------------------------------------------

    @property
    def node_count(self) -> int:
        return int(self.labels.shape[0])

    @property
    def link_count(self) -> int:
        return int(self.indices.shape[0] // 2)

    @cached_property
    def degrees(self) -> np.ndarray:
        return _readonly(np.diff(self.indptr))

    @cached_property
    def entry_rows(self) -> np.ndarray:
        """Row (source node) of every CSR entry, aligned with `indices`."""
        return _readonly(np.repeat(np.arange(self.node_count, dtype=np.int64), self.degrees))

    def neighbors(self, v: int) -> np.ndarray:
        self._check_node(v)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def edge_array(self) -> np.ndarray:
        """Links as an (m, 2) array of internal ids with u < v, sorted."""
        mask = self.entry_rows < self.indices
        return np.column_stack([self.entry_rows[mask], self.indices[mask]])

    def label_edges(self) -> List[Link]:
        """Links as sorted (label_u, label_v) pairs with label_u < label_v."""
        edges = self.labels[self.edge_array()]
        edges = np.sort(edges, axis=1)
        if edges.size:
            edges = edges[np.lexsort((edges[:, 1], edges[:, 0]))]
        return [(int(u), int(v)) for u, v in edges]

    def link_set(self) -> FrozenSet[Link]:
        return frozenset(self.label_edges())

    def isolated_labels(self) -> List[int]:
        return [int(x) for x in self.labels[self.degrees == 0]]

    def label_to_id(self) -> Dict[int, int]:
        return {int(label): i for i, label in enumerate(self.labels)}

    def fingerprint(self) -> str:
        """SHA-256 over the node labels and sorted label edge list."""
        digest = hashlib.sha256()
        digest.update(np.sort(self.labels).astype("<i8").tobytes())
        for u, v in self.label_edges():
            digest.update(f"{u} {v}\n".encode("ascii"))
        return digest.hexdigest()

    def mask_of(self, nodes: Iterable[int]) -> np.ndarray:
        """Boolean membership mask of a node set (validated)."""
        ids = np.fromiter(nodes, dtype=np.int64)
        if ids.size and (ids.min() < 0 or ids.max() >= self.node_count):
            raise ContractViolation(f"node id outside [0, {self.node_count})")
        mask = np.zeros(self.node_count, dtype=bool)
        mask[ids] = True
        return mask

    def _check_node(self, v: int):
        if not 0 <= int(v) < self.node_count:
            raise ContractViolation(f"node id {v} outside [0, {self.node_count})")

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={self.link_count})"


# ============================================================================
# EDGE-LIST INPUT / OUTPUT
# ============================================================================


@dataclass
class LoadReport:
    """Counts of what the loader saw and discarded."""

    lines: int = 0
    comment_lines: int = 0
    blank_lines: int = 0
    self_loops: int = 0
    duplicate_links: int = 0
    reciprocal_pairs: int = 0
    symmetrized: bool = True

    def to_dict(self) -> Dict[str, object]:
        return dict(self.__dict__)


def load_edge_list(
    source: BinaryIO,
    treat_directed_as_undirected: bool = True,
    allow_empty: bool = False,
) -> Tuple[Graph, LoadReport]:
    """
    Parse an edge list from a binary stream.

    Args:
        source: Byte stream with UTF-8 text.
        treat_directed_as_undirected: Record that a directed source is being
            symmetrized. Reciprocal pairs ("u v" and "v u") always collapse
            into one link; the flag only changes how that is reported.
        allow_empty: Accept inputs without links (used for backgrounds).

    Returns:
        The graph and a LoadReport.

    Raises:
        EdgeListParseError: On a malformed line (wrong arity, non-integer token)
            or a line that is not valid UTF-8.
        EmptyGraphError: If no link survives and `allow_empty` is False.
    """
    report = LoadReport(symmetrized=treat_directed_as_undirected)
    pairs: List[Tuple[int, int]] = []
    isolated: List[int] = []

    _scan_lines(source, report, pairs, isolated)

    if report.reciprocal_pairs and not treat_directed_as_undirected:
        logger.warning(
            f"[LOAD] {report.reciprocal_pairs} reciprocal pairs collapsed although "
            f"the input was declared undirected"
        )

    if not pairs and not allow_empty:
        raise EmptyGraphError("edge list contains no links after dropping self-loops")

    graph = Graph.from_label_pairs(
        pairs,
        isolated=isolated,
        metadata={"symmetrized": str(treat_directed_as_undirected).lower()},
    )
    logger.info(
        f"[LOAD] n={graph.node_count}, m={graph.link_count} "
        f"(self-loops dropped: {report.self_loops}, duplicates: {report.duplicate_links}, "
        f"reciprocal pairs: {report.reciprocal_pairs})"
    )
    return graph, report


def _scan_lines(source: Iterable[bytes], report: LoadReport, pairs: List[Tuple[int, int]], isolated: List[int]):
    seen_oriented = set()
    for line_number, raw in enumerate(source, start=1):
        report.lines += 1
        try:
            line = raw.decode("utf-8").strip()
        except UnicodeDecodeError:
            raise EdgeListParseError("invalid UTF-8", line_number)
        if not line:
            report.blank_lines += 1
            continue
        if line.startswith("#"):
            report.comment_lines += 1
            body = line[1:].strip()
            if body.startswith(ISOLATED_DIRECTIVE):
                isolated.extend(_parse_labels(body[len(ISOLATED_DIRECTIVE):].split(), line_number))
            continue

        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected 2 labels, found {len(tokens)}", line_number)
        u, v = _parse_labels(tokens, line_number)
        if u == v:
            report.self_loops += 1
            continue
        if (u, v) in seen_oriented:
            report.duplicate_links += 1
            continue
        if (v, u) in seen_oriented:
            report.reciprocal_pairs += 1
            continue
        seen_oriented.add((u, v))
        pairs.append((u, v))


def _parse_labels(tokens: List[str], line_number: int) -> List[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise EdgeListParseError(f"non-integer label in {' '.join(tokens)!r}", line_number)


def read_edge_list(
    path: Union[str, Path],
    treat_directed_as_undirected: bool = True,
    allow_empty: bool = False,
) -> Tuple[Graph, LoadReport]:
    """Open `path` in binary mode and delegate to `load_edge_list`."""
    with open(path, "rb") as f:
        return load_edge_list(f, treat_directed_as_undirected, allow_empty)


def write_edge_list(
    graph: Graph,
    destination: Union[str, Path, io.TextIOBase],
    metadata: Optional[Mapping[str, object]] = None,
):
    """
    Write `graph` as an edge list with '#' metadata comments.

    Args:
        graph: Graph to serialize.
        destination: Path or text stream.
        metadata: Key/value pairs emitted as `# key: value` header lines.
    """
    if isinstance(destination, (str, Path)):
        path = Path(destination)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            write_edge_list(graph, f, metadata)
        return

    out = destination
    out.write(f"# nodes: {graph.node_count}\n")
    out.write(f"# links: {graph.link_count}\n")
    for key, value in (metadata or {}).items():
        out.write(f"# {key}: {value}\n")
    isolated = graph.isolated_labels()
    if isolated:
        out.write(f"# {ISOLATED_DIRECTIVE} {' '.join(str(x) for x in isolated)}\n")
    for u, v in graph.label_edges():
        out.write(f"{u} {v}\n")


# ============================================================================
# SUBGRAPHS AND MUTATION PRIMITIVES
# ============================================================================


def induced_subgraph(graph: Graph, nodes: Iterable[int]) -> Graph:
    """
    Subgraph on `nodes` with every link whose endpoints are both kept.

    Kept nodes are re-densified in ascending order of their old ids; labels
    are preserved.
    """
    keep = graph.mask_of(nodes)
    kept_ids = np.flatnonzero(keep)
    remap = np.full(graph.node_count, -1, dtype=np.int64)
    remap[kept_ids] = np.arange(kept_ids.size, dtype=np.int64)

    edges = graph.edge_array()
    inside = keep[edges[:, 0]] & keep[edges[:, 1]]
    new_edges = remap[edges[inside]]
    return Graph.from_edge_array(kept_ids.size, new_edges, graph.labels[kept_ids], graph.metadata)


def remove_links_between(graph: Graph, s: Iterable[int], t: Iterable[int]) -> Tuple[Graph, FrozenSet[Link]]:
    """
    Remove every link with one endpoint in `s` and the other in `t`.

    Returns:
        The new graph (same node set) and the removed links as internal
        (u, v) pairs with u < v.
    """
    in_s = graph.mask_of(s)
    in_t = graph.mask_of(t)
    edges = graph.edge_array()
    u, v = edges[:, 0], edges[:, 1]
    between = (in_s[u] & in_t[v]) | (in_s[v] & in_t[u])

    removed = frozenset((int(a), int(b)) for a, b in edges[between])
    remaining = Graph.from_edge_array(graph.node_count, edges[~between], graph.labels, graph.metadata)
    return remaining, removed


def remove_isolated_nodes(graph: Graph) -> Tuple[Graph, NodeSet]:
    """Drop degree-0 nodes; returns the new graph and the dropped (old) ids."""
    isolated = np.flatnonzero(graph.degrees == 0)
    if isolated.size == 0:
        return graph, frozenset()
    kept = np.flatnonzero(graph.degrees > 0)
    return induced_subgraph(graph, kept), frozenset(int(x) for x in isolated)


def degree(graph: Graph, v: int) -> int:
    graph._check_node(v)
    return int(graph.degrees[v])


def connected_components(graph: Graph) -> List[NodeSet]:
    """Connected components over internal ids, ordered by their smallest node id."""
    g = nx.Graph()
    g.add_nodes_from(range(graph.node_count))
    g.add_edges_from(graph.edge_array().tolist())
    components = [frozenset(int(v) for v in c) for c in nx.connected_components(g)]
    return sorted(components, key=min)


# ============================================================================
# NETWORKX INTEROP
# ============================================================================


def to_networkx(graph: Graph) -> nx.Graph:
    """Convert to a networkx Graph keyed by external labels."""
    g = nx.Graph()
    g.add_nodes_from(int(x) for x in graph.labels)
    g.add_edges_from(graph.label_edges())
    return g


def from_networkx(g: nx.Graph) -> Graph:
    """Convert a networkx graph with integer node keys."""
    return Graph.from_label_pairs(
        ((int(u), int(v)) for u, v in g.edges()),
        isolated=(int(x) for x in g.nodes()),
    )
