"""Graph representation, hop distances and the edge-list and graph6 codecs.

Vertices are dense indices 0..n-1. Edges are stored once as (u, v) with
u < v in a lexicographically sorted tuple; an edge's position in that tuple
is its stable identifier everywhere in the lab (edge codes, reports).
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import TextIO

import networkx as nx
import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 64

GRAPH6_HEADER = ">>graph6<<"
_GRAPH6_MIN_BYTE = 63
_GRAPH6_MAX_BYTE = 126
_GRAPH6_SHORT_LIMIT = 62


class GraphError(ValueError):
    """Base class for graph input and precondition failures."""


class EdgeValidationError(GraphError):
    """Raised for loop, duplicate or out-of-range edges."""


class GraphFormatError(GraphError):
    """Raised when edge-list text or graph6 input is malformed."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DisconnectedGraphError(GraphError):
    """Raised when a distance-based operation receives a disconnected graph."""


class SizeCapExceededError(GraphError):
    """Raised when a graph is larger than the configured vertex cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices, configured cap is {cap}")
        self.n = n
        self.cap = cap


@dataclass(frozen=True)
class EdgeRef:
    """An edge by its canonical position plus its endpoint pair."""

    index: int
    endpoints: tuple[int, int]

    def __str__(self) -> str:
        return f"e{self.index}({self.endpoints[0]},{self.endpoints[1]})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with canonical edge order.

    Attributes:
        n: Vertex count
        edges: Sorted (u, v) pairs with u < v
        adjacency: Neighbour set per vertex
        connected: Whether the graph is connected
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...]
    connected: bool
    _edge_index: dict[tuple[int, int], int] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_edge_index", {pair: i for i, pair in enumerate(self.edges)}
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adjacency), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adjacency), default=0)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_ref(self, index: int) -> EdgeRef:
        """Return the EdgeRef at a canonical position.

        Raises:
            IndexError: If the index is out of range
        """
        if not 0 <= index < self.m:
            raise IndexError(f"edge index {index} out of range for {self.m} edges")
        return EdgeRef(index, self.edges[index])

    def edge_index(self, u: int, v: int) -> int:
        """Canonical position of edge uv (either orientation).

        Raises:
            KeyError: If uv is not an edge
        """
        return self._edge_index[(min(u, v), max(u, v))]

    def edge_refs(self) -> list[EdgeRef]:
        return [EdgeRef(i, pair) for i, pair in enumerate(self.edges)]

    def is_tree(self) -> bool:
        return self.connected and self.m == self.n - 1

    def is_path(self) -> bool:
        return self.is_tree() and self.max_degree <= 2

    def to_networkx(self) -> nx.Graph:
        """Build a networkx graph whose node order is 0..n-1."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a canonical Graph from vertex pairs.

    Args:
        n: Vertex count (vertices are 0..n-1)
        pairs: Edge endpoint pairs in any orientation and order

    Returns:
        Graph with sorted edges and its connectivity flag

    Raises:
        EdgeValidationError: On a loop, a duplicate or an out-of-range endpoint
    """
    if n < 1:
        raise EdgeValidationError(f"vertex count must be at least 1, got {n}")

    seen: set[tuple[int, int]] = set()
    for a, b in pairs:
        if a == b:
            raise EdgeValidationError(f"loop edge at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeValidationError(f"edge ({a},{b}) has an endpoint outside 0..{n - 1}")
        pair = (min(a, b), max(a, b))
        if pair in seen:
            raise EdgeValidationError(f"duplicate edge ({pair[0]},{pair[1]})")
        seen.add(pair)

    edges = tuple(sorted(seen))
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)

    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(n))
    nx_graph.add_edges_from(edges)

    return Graph(
        n=n,
        edges=edges,
        adjacency=tuple(frozenset(nbrs) for nbrs in adjacency),
        connected=nx.is_connected(nx_graph),
    )


def require_connected(g: Graph) -> None:
    """Raise DisconnectedGraphError unless g is connected."""
    if not g.connected:
        raise DisconnectedGraphError(
            f"graph with {g.n} vertices and {g.m} edges is not connected"
        )


def require_order_within(g: Graph, cap: int = DEFAULT_MAX_VERTICES) -> None:
    """Raise SizeCapExceededError when g has more than cap vertices."""
    if g.n > cap:
        raise SizeCapExceededError(g.n, cap)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph.

    Attributes:
        n: Vertex count
        d: Read-only n x n uint8 matrix
    """

    n: int
    d: np.ndarray

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = pair
        return int(self.d[i, j])

    @property
    def diameter(self) -> int:
        return int(self.d.max()) if self.n else 0

    def eccentricity(self, v: int) -> int:
        return int(self.d[v].max())


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Compute BFS hop distances between every pair of vertices.

    Args:
        g: Connected graph

    Returns:
        DistanceMatrix for g

    Raises:
        DisconnectedGraphError: If g is not connected
    """
    require_connected(g)
    d = np.zeros((g.n, g.n), dtype=np.uint8)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        for target, length in lengths.items():
            d[source, target] = length
    d.setflags(write=False)
    return DistanceMatrix(n=g.n, d=d)


def vertex_edge_distance(dm: DistanceMatrix, w: int, e: EdgeRef) -> int:
    """Distance from vertex w to edge e: the nearer of the two endpoints."""
    if not 0 <= w < dm.n:
        raise IndexError(f"vertex {w} out of range for {dm.n} vertices")
    u, v = e.endpoints
    return min(dm[w, u], dm[w, v])


def vertex_edge_matrix(g: Graph, dm: DistanceMatrix) -> np.ndarray:
    """n x m matrix whose entry (w, j) is the distance from w to edge j."""
    if g.m == 0:
        return np.zeros((g.n, 0), dtype=np.uint8)
    tails = np.fromiter((u for u, _ in g.edges), dtype=np.intp, count=g.m)
    heads = np.fromiter((v for _, v in g.edges), dtype=np.intp, count=g.m)
    return np.minimum(dm.d[:, tails], dm.d[:, heads])


def parse_edge_list_text(stream: str | TextIO) -> Graph:
    """Parse the "n m" header plus m "u v" lines edge-list format.

    Input is normalised rather than rejected when it only departs from the
    canonical layout: endpoints may come in either order, edge lines in any
    order, and the trailing newline may be missing. Blank lines are skipped.
    emit_edge_list_text always writes the canonical layout.

    Args:
        stream: Text or a readable text stream

    Returns:
        Canonical Graph

    Raises:
        GraphFormatError: On a malformed line or a header/body count mismatch
        EdgeValidationError: On loops, duplicates or out-of-range endpoints
    """
    text = stream if isinstance(stream, str) else stream.read()
    lines = [(number, line.strip()) for number, line in enumerate(text.splitlines(), 1)]
    lines = [(number, line) for number, line in lines if line]
    if not lines:
        raise GraphFormatError("empty edge-list input")

    header_number, header = lines[0]
    n, m = _parse_int_pair(header, header_number)
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(
            f"header declares {m} edges but {len(body)} edge line(s) follow",
            header_number,
        )

    pairs = [_parse_int_pair(line, number) for number, line in body]
    return from_edge_list(n, pairs)


def _parse_int_pair(line: str, line_number: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"expected two integers, got '{line}'", line_number)
    try:
        first, second = int(parts[0]), int(parts[1])
    except ValueError as e:
        raise GraphFormatError(f"expected two integers, got '{line}'", line_number) from e
    if first < 0 or second < 0:
        raise GraphFormatError(f"negative value in '{line}'", line_number)
    return first, second


def emit_edge_list_text(g: Graph) -> str:
    """Render g in the edge-list format, trailing newline included."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line.

    The line is validated byte by byte before decoding: printable range,
    body length for the declared order, and zero padding bits.

    Args:
        line: graph6 text, optionally with the ">>graph6<<" header and a
            trailing newline

    Returns:
        Canonical Graph

    Raises:
        GraphFormatError: On bad length, a non-printable byte or nonzero padding
    """
    if isinstance(line, str):
        try:
            raw = line.encode("ascii")
        except UnicodeEncodeError as e:
            raise GraphFormatError(f"non-printable character in graph6 line: {e}") from e
    else:
        raw = line
    raw = raw.rstrip(b"\r\n")
    if raw.startswith(GRAPH6_HEADER.encode()):
        raw = raw[len(GRAPH6_HEADER) :]
    if not raw:
        raise GraphFormatError("empty graph6 line")

    for position, byte in enumerate(raw):
        if not _GRAPH6_MIN_BYTE <= byte <= _GRAPH6_MAX_BYTE:
            raise GraphFormatError(
                f"non-printable byte {byte} at position {position}"
            )

    if raw[0] != _GRAPH6_MAX_BYTE:
        n = raw[0] - _GRAPH6_MIN_BYTE
        body = raw[1:]
    else:
        if len(raw) < 4 or raw[1] == _GRAPH6_MAX_BYTE:
            raise GraphFormatError("bad length: unsupported or truncated order header")
        n = 0
        for byte in raw[1:4]:
            n = (n << 6) | (byte - _GRAPH6_MIN_BYTE)
        body = raw[4:]

    bit_count = n * (n - 1) // 2
    expected = -(-bit_count // 6)
    if len(body) != expected:
        raise GraphFormatError(
            f"bad length: order {n} needs {expected} data byte(s), got {len(body)}"
        )
    padding = expected * 6 - bit_count
    if padding and (body[-1] - _GRAPH6_MIN_BYTE) & ((1 << padding) - 1):
        raise GraphFormatError("padding bits are not zero")
    if n == 0:
        raise GraphFormatError("graph6 order 0 is not a graph")

    try:
        decoded = nx.from_graph6_bytes(raw)
    except (ValueError, nx.NetworkXError) as e:
        raise GraphFormatError(f"undecodable graph6: {e}") from e
    return from_edge_list(n, decoded.edges())


def emit_graph6(g: Graph) -> str:
    """Encode g as a graph6 line without header or newline."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def parse_graph_text(text: str) -> Graph:
    """Parse either format, picking graph6 for single-token input."""
    stripped = text.strip()
    if not stripped:
        raise GraphFormatError("empty graph input")
    first_line = stripped.splitlines()[0].split()
    if len(first_line) == 1 and len(stripped.splitlines()) == 1:
        return parse_graph6(stripped)
    return parse_edge_list_text(text)
