"""Deterministic generators for the graph families and products under study.

Labeling conventions (so published witness sets map to fixed indices):

- Path / Cycle: vertices 0..n-1 in order.
- Wheel / Fan: hub 0, rim or path vertices 1..n.
- Star: centre 0, leaves 1..n.
- CompleteBipartite n m: parts {0..n-1} and {n..n+m-1}.
- GridP2 n (P_n □ P_2): first row 0..n-1, second row n..2n-1.
- PrismP2 n (C_n □ P_2): first cycle 0..n-1, second cycle n..2n-1.
- Cartesian product: vertex (a, b) becomes a*|V(h)| + b.
- Corona: g keeps 0..p-1; vertex j of the i-th copy of h is p + i*q + j.
- Join: g keeps 0..p-1, h is shifted to p..p+q-1.
"""

import logging
import random
import re
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

import networkx as nx

from src.graph_core import (
    DEFAULT_MAX_VERTICES,
    DisconnectedGraphError,
    Graph,
    SizeCapExceededError,
    from_edge_list,
)

logger = logging.getLogger(__name__)


class FamilySpecError(ValueError):
    """Raised for unparsable family text or out-of-range parameters."""


class FamilyKind(StrEnum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "kb"
    STAR = "star"
    WHEEL = "wheel"
    FAN = "fan"
    GRID2 = "grid2"
    PRISM2 = "prism2"
    CARTESIAN = "cartesian"
    CORONA = "corona"
    JOIN = "join"
    TREE = "tree"


# Smallest allowed value of each integer parameter.
_MINIMUMS: dict[FamilyKind, tuple[int, ...]] = {
    FamilyKind.PATH: (1,),
    FamilyKind.CYCLE: (3,),
    FamilyKind.COMPLETE: (1,),
    FamilyKind.COMPLETE_BIPARTITE: (1, 1),
    FamilyKind.STAR: (1,),
    FamilyKind.WHEEL: (3,),
    FamilyKind.FAN: (1,),
    FamilyKind.GRID2: (1,),
    FamilyKind.PRISM2: (3,),
}

_PRODUCTS = (FamilyKind.CARTESIAN, FamilyKind.CORONA, FamilyKind.JOIN)

# A standalone "n" inside a family spec template
_PLACEHOLDER = re.compile(r"(?<![a-z0-9])n(?![a-z0-9])")


@dataclass(frozen=True)
class FamilySpec:
    """A family member or product, with a textual form such as "kb:3,4".

    Attributes:
        kind: Family tag
        params: Integer parameters (n, or n and m for complete bipartite)
        operands: The two operand specs of a product
        edges: Edge list of an explicit tree
    """

    kind: FamilyKind
    params: tuple[int, ...] = ()
    operands: tuple["FamilySpec", ...] = ()
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.kind in _MINIMUMS:
            minimums = _MINIMUMS[self.kind]
            if len(self.params) != len(minimums):
                raise FamilySpecError(
                    f"{self.kind} takes {len(minimums)} parameter(s), got {len(self.params)}"
                )
            for value, minimum in zip(self.params, minimums, strict=True):
                if value < minimum:
                    raise FamilySpecError(
                        f"{self.kind} parameter {value} below minimum {minimum}"
                    )
        elif self.kind in _PRODUCTS:
            if len(self.operands) != 2:
                raise FamilySpecError(f"{self.kind} takes exactly two operands")
        elif not self.edges:
            raise FamilySpecError("tree spec needs at least one edge")

    @property
    def n(self) -> int:
        """The family's size parameter (first integer parameter)."""
        return self.params[0] if self.params else 0

    def __str__(self) -> str:
        if self.kind in _PRODUCTS:
            return f"{self.kind}:{self.operands[0]},{self.operands[1]}"
        if self.kind is FamilyKind.TREE:
            return "tree:" + ",".join(f"{u}-{v}" for u, v in self.edges)
        return f"{self.kind}:" + ",".join(str(p) for p in self.params)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse the textual form, e.g. "corona:path:3,path:2".

        Raises:
            FamilySpecError: If the text is malformed or out of range
        """
        parser = _SpecParser(text.strip())
        spec = parser.parse_spec()
        if not parser.at_end():
            raise FamilySpecError(
                f"unexpected trailing text '{parser.rest()}' in family spec '{text}'"
            )
        return spec

    @classmethod
    def from_template(cls, template: str, n: int) -> "FamilySpec":
        """Substitute n into a spec template and parse the result.

        A bare family name stands for "<name>:n". Otherwise every standalone
        "n" is replaced, so "kb:3,n" and "corona:path:n,path:2" both work.

        Raises:
            FamilySpecError: If the template has no n or the result is invalid
        """
        template = template.strip()
        if ":" not in template:
            template = f"{template}:n"
        if not _PLACEHOLDER.search(template):
            raise FamilySpecError(f"family template '{template}' has no 'n' placeholder")
        return cls.parse(_PLACEHOLDER.sub(str(n), template))


def path(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.PATH, (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.CYCLE, (n,))


def complete(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.COMPLETE, (n,))


def complete_bipartite(n: int, m: int) -> FamilySpec:
    return FamilySpec(FamilyKind.COMPLETE_BIPARTITE, (n, m))


def star(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.STAR, (n,))


def wheel(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.WHEEL, (n,))


def fan(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.FAN, (n,))


def grid2(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.GRID2, (n,))


def prism2(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.PRISM2, (n,))


def product(kind: FamilyKind, left: FamilySpec, right: FamilySpec) -> FamilySpec:
    return FamilySpec(kind, operands=(left, right))


def tree_spec(g: Graph) -> FamilySpec:
    """Describe an explicit tree by its edge list."""
    return FamilySpec(FamilyKind.TREE, edges=g.edges)


class _SpecParser:
    """Recursive-descent parser over the family mini-language."""

    _NAME = re.compile(r"[a-z0-9]+")
    _INT = re.compile(r"\d+")
    _EDGE = re.compile(r"(\d+)-(\d+)")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def at_end(self) -> bool:
        return self.pos == len(self.text)

    def rest(self) -> str:
        return self.text[self.pos :]

    def _fail(self, message: str) -> FamilySpecError:
        return FamilySpecError(f"{message} at position {self.pos} in '{self.text}'")

    def _expect(self, char: str) -> None:
        if self.text[self.pos : self.pos + 1] != char:
            raise self._fail(f"expected '{char}'")
        self.pos += 1

    def _match(self, pattern: re.Pattern) -> re.Match | None:
        match = pattern.match(self.text, self.pos)
        if match:
            self.pos = match.end()
        return match

    def parse_spec(self) -> FamilySpec:
        name = self._match(self._NAME)
        if name is None:
            raise self._fail("expected a family name")
        try:
            kind = FamilyKind(name.group(0))
        except ValueError as e:
            raise self._fail(f"unknown family '{name.group(0)}'") from e
        self._expect(":")

        if kind in _PRODUCTS:
            left = self.parse_spec()
            self._expect(",")
            right = self.parse_spec()
            return FamilySpec(kind, operands=(left, right))

        if kind is FamilyKind.TREE:
            edges = [self._parse_edge()]
            while self.text.startswith(",", self.pos) and self._EDGE.match(
                self.text, self.pos + 1
            ):
                self.pos += 1
                edges.append(self._parse_edge())
            return FamilySpec(kind, edges=tuple(edges))

        params = [self._parse_int()]
        while len(params) < len(_MINIMUMS[kind]):
            self._expect(",")
            params.append(self._parse_int())
        return FamilySpec(kind, tuple(params))

    def _parse_int(self) -> int:
        match = self._match(self._INT)
        if match is None:
            raise self._fail("expected an integer")
        return int(match.group(0))

    def _parse_edge(self) -> tuple[int, int]:
        match = self._match(self._EDGE)
        if match is None:
            raise self._fail("expected an edge 'u-v'")
        return int(match.group(1)), int(match.group(2))


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise SizeCapExceededError(n, cap)


def _path_edges(n: int, offset: int = 0) -> list[tuple[int, int]]:
    return [(offset + i, offset + i + 1) for i in range(n - 1)]


def _cycle_edges(n: int, offset: int = 0) -> list[tuple[int, int]]:
    return [*_path_edges(n, offset), (offset, offset + n - 1)]


def generate(spec: FamilySpec, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Build the labeled graph for a family spec.

    Args:
        spec: Family spec (parameter ranges already validated)
        max_vertices: Vertex cap

    Returns:
        Graph following the module's labeling conventions

    Raises:
        SizeCapExceededError: If the graph would exceed the cap
        FamilySpecError: If a tree spec is not a tree
    """
    kind = spec.kind
    if kind is FamilyKind.PATH:
        _check_cap(spec.n, max_vertices)
        return from_edge_list(spec.n, _path_edges(spec.n))
    if kind is FamilyKind.CYCLE:
        _check_cap(spec.n, max_vertices)
        return from_edge_list(spec.n, _cycle_edges(spec.n))
    if kind is FamilyKind.COMPLETE:
        _check_cap(spec.n, max_vertices)
        pairs = [(u, v) for u in range(spec.n) for v in range(u + 1, spec.n)]
        return from_edge_list(spec.n, pairs)
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        left, right = spec.params
        _check_cap(left + right, max_vertices)
        pairs = [(u, left + v) for u in range(left) for v in range(right)]
        return from_edge_list(left + right, pairs)
    if kind is FamilyKind.STAR:
        return generate(complete_bipartite(1, spec.n), max_vertices)
    if kind is FamilyKind.WHEEL:
        return join(generate(complete(1)), generate(cycle(spec.n)), max_vertices)
    if kind is FamilyKind.FAN:
        return join(generate(complete(1)), generate(path(spec.n)), max_vertices)
    if kind is FamilyKind.GRID2:
        n = spec.n
        _check_cap(2 * n, max_vertices)
        rungs = [(i, n + i) for i in range(n)]
        return from_edge_list(2 * n, _path_edges(n) + _path_edges(n, n) + rungs)
    if kind is FamilyKind.PRISM2:
        n = spec.n
        _check_cap(2 * n, max_vertices)
        rungs = [(i, n + i) for i in range(n)]
        return from_edge_list(2 * n, _cycle_edges(n) + _cycle_edges(n, n) + rungs)
    if kind is FamilyKind.TREE:
        order = max(max(edge) for edge in spec.edges) + 1
        _check_cap(order, max_vertices)
        g = from_edge_list(order, spec.edges)
        if not g.is_tree():
            raise FamilySpecError(f"'{spec}' is not a tree")
        return g

    left = generate(spec.operands[0], max_vertices)
    right = generate(spec.operands[1], max_vertices)
    if kind is FamilyKind.CARTESIAN:
        return cartesian_product(left, right, max_vertices)
    if kind is FamilyKind.CORONA:
        return corona(left, right, max_vertices)
    return join(left, right, max_vertices)


def cartesian_product(
    g: Graph, h: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Graph:
    """Cartesian product g □ h with (a, b) mapped to a*|V(h)| + b.

    Raises:
        DisconnectedGraphError: If either factor is disconnected
        SizeCapExceededError: If the product exceeds the cap
    """
    if not (g.connected and h.connected):
        raise DisconnectedGraphError("Cartesian product factors must be connected")
    q = h.n
    _check_cap(g.n * q, max_vertices)
    pairs = [(a * q + b, a * q + c) for a in range(g.n) for b, c in h.edges]
    pairs += [(a * q + b, c * q + b) for a, c in g.edges for b in range(q)]
    return from_edge_list(g.n * q, pairs)


def corona(g: Graph, h: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Corona g ⊙ h: vertex i of g joined to every vertex of its own copy of h.

    Raises:
        DisconnectedGraphError: If g is disconnected
        SizeCapExceededError: If the result exceeds the cap
    """
    if not g.connected:
        raise DisconnectedGraphError("corona base graph must be connected")
    p, q = g.n, h.n
    _check_cap(p + p * q, max_vertices)
    pairs = list(g.edges)
    for i in range(p):
        offset = p + i * q
        pairs.extend((i, offset + j) for j in range(q))
        pairs.extend((offset + a, offset + b) for a, b in h.edges)
    return from_edge_list(p + p * q, pairs)


def join(g: Graph, h: Graph, max_vertices: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Join g ∨ h: disjoint union plus every edge between the two sides."""
    p, q = g.n, h.n
    _check_cap(p + q, max_vertices)
    pairs = list(g.edges)
    pairs.extend((p + a, p + b) for a, b in h.edges)
    pairs.extend((u, p + v) for u in range(p) for v in range(q))
    return from_edge_list(p + q, pairs)


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform random labeled tree on n vertices, decoded from a Prüfer sequence.

    Args:
        n: Vertex count (at least 1)
        seed: Seed for a private random.Random; equal seeds give equal trees

    Returns:
        Tree on vertices 0..n-1
    """
    if n < 1:
        raise ValueError(f"tree needs at least one vertex, got {n}")
    if n == 1:
        return from_edge_list(1, [])
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return from_edge_list(n, tree.edges())


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test used by the generator self-checks."""
    if (g.n, g.m) != (h.n, h.m):
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())
