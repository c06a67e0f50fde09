"""Immutable simple graphs on dense vertex labels ``0..n-1``.

Adjacency is stored as one integer bit row per vertex, so vertex subsets are
plain ints (bit ``v`` set means vertex ``v`` is a member) and adjacency tests
are single bit operations.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations

__all__ = [
    "MAX_ORDER",
    "GRAPH6_MAX_ORDER",
    "GraphError",
    "Graph6Error",
    "Graph6OrderUnsupported",
    "Graph",
    "VertexSet",
    "graph_from_edges",
    "named_graph",
    "parse_graph6",
    "write_graph6",
    "induced_subgraph",
    "is_connected",
    "diameter",
    "is_tree",
    "connected_induced_vertex_sets",
    "mask_of",
    "members",
    "component_mask",
]

GRAPH6_MAX_ORDER = 62


def _configured_max_order() -> int:
    raw = os.environ.get("DOMPERF_MAX_ORDER")
    if raw is None:
        return GRAPH6_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"DOMPERF_MAX_ORDER must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"DOMPERF_MAX_ORDER must be positive, got {value}")
    return value


#: Largest order accepted by the graph constructors.
MAX_ORDER = _configured_max_order()

#: A vertex subset, as a sorted tuple of labels.
VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Invalid graph construction or query."""


class Graph6Error(GraphError):
    """Malformed graph6 record."""


class Graph6OrderUnsupported(Graph6Error):
    """graph6 record uses the extended header for orders above 62."""


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> VertexSet:
    """Labels of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class Graph:
    """A simple undirected graph with vertices ``0..order-1``.

    ``rows[v]`` is the neighbourhood of ``v`` as a bitmask. Instances are
    immutable and hashable.
    """

    __slots__ = ("order", "rows", "_hash")

    def __init__(self, rows: Sequence[int]):
        rows = tuple(rows)
        n = len(rows)
        if n > MAX_ORDER:
            raise GraphError(f"order {n} exceeds configured maximum {MAX_ORDER}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in members(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self.order = n
        self.rows = rows
        self._hash = hash(rows)

    @classmethod
    def _trusted(cls, rows: tuple[int, ...]) -> Graph:
        # Skips validation; callers guarantee symmetric, loop-free rows.
        g = object.__new__(cls)
        g.order = len(rows)
        g.rows = rows
        g._hash = hash(rows)
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return members(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.rows) for v in members(row >> (u + 1) << (u + 1))]


def graph_from_edges(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered vertex pairs; duplicate pairs collapse."""
    if order < 0:
        raise GraphError(f"order must be non-negative, got {order}")
    if order > MAX_ORDER:
        raise GraphError(f"order {order} exceeds configured maximum {MAX_ORDER}")
    rows = [0] * order
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(tuple(rows))


def named_graph(kind: str, *params: int) -> Graph:
    """Standard graphs with canonical labels.

    ``path n``, ``cycle n``, ``complete n``, ``star k`` (centre 0 and ``k``
    leaves) and ``complete_bipartite a b`` (side A is ``0..a-1``).
    """
    def need(count: int) -> None:
        if len(params) != count:
            raise GraphError(f"{kind} takes {count} parameter(s), got {len(params)}")

    if kind == "path":
        need(1)
        (n,) = params
        if n < 1:
            raise GraphError("path needs n >= 1")
        return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        need(1)
        (n,) = params
        if n < 3:
            raise GraphError("cycle needs n >= 3")
        return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        need(1)
        (n,) = params
        if n < 1:
            raise GraphError("complete graph needs n >= 1")
        return graph_from_edges(n, combinations(range(n), 2))
    if kind == "star":
        need(1)
        (k,) = params
        if k < 1:
            raise GraphError("star needs at least one leaf")
        return graph_from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
    if kind == "complete_bipartite":
        need(2)
        a, b = params
        if a < 1 or b < 1:
            raise GraphError("complete_bipartite needs both sides >= 1")
        return graph_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])
    raise GraphError(f"unknown graph kind {kind!r}")


# graph6: header byte n+63, then the upper triangle read column by column
# ((0,1), (0,2), (1,2), (0,3), ...), six bits per byte, MSB first, +63.


def parse_graph6(text: str) -> Graph:
    record = text.strip()
    if record.startswith(">>graph6<<"):
        record = record[len(">>graph6<<"):]
    if not record:
        raise Graph6Error("empty graph6 record")
    codes = [ord(ch) for ch in record]
    head = codes[0]
    if head == 126:
        raise Graph6OrderUnsupported("extended graph6 header (order > 62) is not supported")
    if not 63 <= head < 126:
        raise Graph6Error(f"malformed header byte {record[0]!r}")
    n = head - 63
    if n > MAX_ORDER:
        raise GraphError(f"order {n} exceeds configured maximum {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = codes[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated record: expected {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage after {nbytes} data bytes")
    for c in body:
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {chr(c)!r} outside the graph6 alphabet")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._trusted(tuple(rows))


def write_graph6(g: Graph) -> str:
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise Graph6OrderUnsupported(f"order {n} needs the extended graph6 header")
    rows = g.rows
    out = [chr(n + 63)]
    acc = 0
    width = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (rows[i] >> j & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``s``, relabelled ``0..|s|-1`` in ascending order."""
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} not in graph of order {g.order}")
    relabel = {old: new for new, old in enumerate(keep)}
    rows = g.rows
    new_rows = []
    for old in keep:
        row = 0
        for other, new in relabel.items():
            if rows[old] >> other & 1:
                row |= 1 << new
        new_rows.append(row)
    return Graph._trusted(tuple(new_rows)), relabel


def component_mask(rows: Sequence[int], start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` inside ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        while frontier:
            low = frontier & -frontier
            reach |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = reach & within & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.order <= 1:
        return True
    full = g.vertex_mask
    return component_mask(g.rows, 0, full) == full


def _eccentricity(rows: Sequence[int], source: int, full: int) -> int:
    seen = 1 << source
    frontier = seen
    depth = 0
    while True:
        reach = 0
        while frontier:
            low = frontier & -frontier
            reach |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = reach & ~seen
        if not frontier:
            break
        seen |= frontier
        depth += 1
    if seen != full:
        raise GraphError("diameter is undefined for a disconnected graph")
    return depth


def diameter(g: Graph) -> int:
    """Largest shortest-path distance, in edges."""
    if g.order == 0:
        raise GraphError("diameter needs at least one vertex")
    full = g.vertex_mask
    return max(_eccentricity(g.rows, v, full) for v in range(g.order))


def is_tree(g: Graph) -> bool:
    return g.order >= 1 and g.edge_count == g.order - 1 and is_connected(g)


def connected_induced_vertex_sets(g: Graph, min_size: int = 1) -> Iterator[VertexSet]:
    """Vertex sets of size >= ``min_size`` inducing a connected subgraph.

    Ordered by size, then lexicographically within a size.
    """
    if min_size < 1:
        raise GraphError("min_size must be at least 1")
    rows = g.rows
    for size in range(min_size, g.order + 1):
        for combo in combinations(range(g.order), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if component_mask(rows, combo[0], mask) == mask:
                yield combo
