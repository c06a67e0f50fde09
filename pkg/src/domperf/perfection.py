"""Recognizing gamma-beta-perfect graphs.

A connected graph on at least two vertices is gamma-beta-perfect when every
connected induced subgraph on at least two vertices has equal domination and
covering numbers. Three recognizers decide this independently:

* :func:`classify_structural` -- tree of diameter at most 4, or a subgraph
  of some K_{2,n};
* :func:`is_perfect_oracle` -- the definition itself, checked subset by
  subset with the exact solvers;
* :func:`classify_forbidden` -- not C5, and no triangle or P6 subgraph.

Every verdict carries a :class:`Certificate` whose witness can be rechecked
with :func:`verify_certificate` without trusting the search that found it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .exact_solvers import covering_number, domination_number
from .graph_core import (
    Graph,
    GraphError,
    VertexSet,
    component_mask,
    connected_induced_vertex_sets,
    diameter,
    induced_subgraph,
    is_connected,
    mask_of,
)

__all__ = [
    "ORACLE_MAX_ORDER",
    "Verdict",
    "TreeDiamAtMost4",
    "SubgraphOfK2n",
    "ContainsTriangle",
    "ContainsP6",
    "IsC5",
    "ViolatingInducedSubgraph",
    "Certificate",
    "PreconditionError",
    "OracleCapExceeded",
    "RecognizerDisagreement",
    "CertificateError",
    "find_triangle",
    "find_p6_subgraph",
    "is_c5",
    "k2n_embedding",
    "is_tree_diameter_at_most_4",
    "classify_structural",
    "classify_forbidden",
    "is_perfect_oracle",
    "find_violating_induced_subgraph",
    "verify_certificate",
    "reason_from_dict",
]

ORACLE_MAX_ORDER = 12


class Verdict(str, enum.Enum):
    PERFECT = "perfect"
    NOT_PERFECT = "not_perfect"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TreeDiamAtMost4:
    diameter: int
    verdict = Verdict.PERFECT

    def describe(self) -> str:
        return f"d={self.diameter}"


@dataclass(frozen=True)
class SubgraphOfK2n:
    """``embedding`` is an independent vertex cover of size at most 2."""

    embedding: VertexSet
    verdict = Verdict.PERFECT

    def describe(self) -> str:
        return "A=" + _fmt(self.embedding)


@dataclass(frozen=True)
class ContainsTriangle:
    vertices: VertexSet
    verdict = Verdict.NOT_PERFECT

    def describe(self) -> str:
        return _fmt(self.vertices)


@dataclass(frozen=True)
class ContainsP6:
    """``path`` lists six vertices in path order."""

    path: VertexSet
    verdict = Verdict.NOT_PERFECT

    def describe(self) -> str:
        return "-".join(map(str, self.path))


@dataclass(frozen=True)
class IsC5:
    verdict = Verdict.NOT_PERFECT

    def describe(self) -> str:
        return ""


@dataclass(frozen=True)
class ViolatingInducedSubgraph:
    vertices: VertexSet
    verdict = Verdict.NOT_PERFECT

    def describe(self) -> str:
        return _fmt(self.vertices)


Reason = Union[
    TreeDiamAtMost4, SubgraphOfK2n, ContainsTriangle, ContainsP6, IsC5, ViolatingInducedSubgraph
]

_REASONS = {
    cls.__name__: cls
    for cls in (TreeDiamAtMost4, SubgraphOfK2n, ContainsTriangle, ContainsP6, IsC5, ViolatingInducedSubgraph)
}


def _fmt(vs: VertexSet) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


@dataclass(frozen=True)
class Certificate:
    reason: Reason

    @property
    def verdict(self) -> Verdict:
        return self.reason.verdict

    @property
    def perfect(self) -> bool:
        return self.reason.verdict is Verdict.PERFECT

    @property
    def kind(self) -> str:
        return type(self.reason).__name__

    def __str__(self) -> str:
        detail = self.reason.describe()
        return f"{self.verdict} {self.kind}" + (f" {detail}" if detail else "")

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict.value, "reason": self.kind}
        for name, value in vars(self.reason).items():
            out[name] = list(value) if isinstance(value, tuple) else value
        return out


def reason_from_dict(data: dict) -> Reason:
    cls = _REASONS[data["reason"]]
    fields = {k: tuple(v) if isinstance(v, list) else v for k, v in data.items() if k not in ("verdict", "reason")}
    return cls(**fields)


class PreconditionError(GraphError):
    """Input is not a connected graph on at least two vertices."""


class OracleCapExceeded(PreconditionError):
    """Graph too large for the subset-by-subset definitional check."""


class CertificateError(AssertionError):
    """A certificate's witness does not hold on its graph."""


class RecognizerDisagreement(RuntimeError):
    """Two recognizers reached different verdicts on the same graph.

    By the characterization theorem this cannot happen; raising keeps a
    falsifying graph from being silently coerced into either verdict.
    """

    def __init__(self, graph: Graph, verdicts: dict[str, Verdict]):
        self.graph = graph
        self.verdicts = verdicts
        shown = ", ".join(f"{k}={v}" for k, v in verdicts.items())
        super().__init__(f"recognizers disagree on {graph!r}: {shown}")


def _require_nontrivial(g: Graph) -> None:
    if g.order < 2:
        raise PreconditionError(f"need a connected graph on at least 2 vertices, got order {g.order}")
    if not is_connected(g):
        raise PreconditionError("graph is disconnected")


# --- forbidden configurations -------------------------------------------------


def find_triangle(g: Graph) -> Optional[VertexSet]:
    """Lexicographically least pairwise-adjacent triple, if any."""
    rows = g.rows
    for a in range(g.order):
        later = rows[a] >> (a + 1) << (a + 1)
        while later:
            low = later & -later
            b = low.bit_length() - 1
            common = rows[a] & rows[b] >> (b + 1) << (b + 1)
            if common:
                return (a, b, (common & -common).bit_length() - 1)
            later ^= low
    return None


def find_p6_subgraph(g: Graph) -> Optional[VertexSet]:
    """Six distinct vertices with consecutive ones adjacent (a P6 subgraph,
    not necessarily induced), found by depth-first walks from each vertex in
    label order."""
    if g.order < 6:
        return None
    rows = g.rows

    def extend(path: tuple[int, ...], used: int) -> Optional[tuple[int, ...]]:
        if len(path) == 6:
            return path
        step = rows[path[-1]] & ~used
        while step:
            low = step & -step
            found = extend(path + (low.bit_length() - 1,), used | low)
            if found:
                return found
            step ^= low
        return None

    for start in range(g.order):
        found = extend((start,), 1 << start)
        if found:
            return found
    return None


def is_c5(g: Graph) -> bool:
    return g.order == 5 and all(row.bit_count() == 2 for row in g.rows) and is_connected(g)


def _forbidden_reason(g: Graph) -> Optional[Reason]:
    if is_c5(g):
        return IsC5()
    tri = find_triangle(g)
    if tri is not None:
        return ContainsTriangle(tri)
    path = find_p6_subgraph(g)
    if path is not None:
        return ContainsP6(path)
    return None


# --- structural description ---------------------------------------------------


def k2n_embedding(g: Graph) -> Optional[VertexSet]:
    """An independent vertex cover of size at most 2, if one exists.

    Such a set ``A`` exists exactly when ``g`` is a subgraph of K_{2,n}
    (``A`` on the 2-side). Singletons are tried first, then non-adjacent
    pairs in lexicographic order.
    """
    _require_nontrivial(g)
    degrees = g.degrees()
    m = sum(degrees) // 2
    # An independent set covers exactly the sum of its degrees in edges.
    for a in range(g.order):
        if degrees[a] == m:
            return (a,)
    rows = g.rows
    for a in range(g.order):
        for b in range(a + 1, g.order):
            if degrees[a] + degrees[b] == m and not rows[a] >> b & 1:
                return (a, b)
    return None


def is_tree_diameter_at_most_4(g: Graph) -> Optional[int]:
    _require_nontrivial(g)
    if g.edge_count != g.order - 1:
        return None
    d = diameter(g)
    return d if d <= 4 else None


def _structural_reason(g: Graph) -> Optional[Reason]:
    d = is_tree_diameter_at_most_4(g)
    if d is not None:
        return TreeDiamAtMost4(d)
    embedding = k2n_embedding(g)
    if embedding is not None:
        return SubgraphOfK2n(embedding)
    return None


def classify_structural(g: Graph) -> Certificate:
    """Perfect iff a tree of diameter <= 4 or a subgraph of K_{2,n}.

    A negative verdict borrows its witness from the forbidden-configuration
    search.
    """
    _require_nontrivial(g)
    reason = _structural_reason(g)
    if reason is not None:
        return Certificate(reason)
    witness = _forbidden_reason(g)
    if witness is None:
        raise RecognizerDisagreement(g, {"structural": Verdict.NOT_PERFECT, "forbidden": Verdict.PERFECT})
    return Certificate(witness)


def classify_forbidden(g: Graph) -> Certificate:
    """Not perfect iff C5, or contains a triangle or a P6 (checked in that
    order). A positive verdict borrows its witness from the structural test."""
    _require_nontrivial(g)
    reason = _forbidden_reason(g)
    if reason is not None:
        return Certificate(reason)
    witness = _structural_reason(g)
    if witness is None:
        raise RecognizerDisagreement(g, {"forbidden": Verdict.PERFECT, "structural": Verdict.NOT_PERFECT})
    return Certificate(witness)


# --- definitional oracle ------------------------------------------------------


@lru_cache(maxsize=1 << 17)
def _gamma_beta(h: Graph) -> tuple[int, int]:
    return domination_number(h).value, covering_number(h).value


def find_violating_induced_subgraph(g: Graph, max_order: int = ORACLE_MAX_ORDER) -> Optional[VertexSet]:
    """Smallest (then lexicographically least) vertex set inducing a
    connected subgraph on >= 2 vertices with domination number below
    covering number."""
    _require_nontrivial(g)
    if g.order > max_order:
        raise OracleCapExceeded(
            f"order {g.order} exceeds the oracle cap {max_order}; use classify_structural or classify_forbidden"
        )
    for s in connected_induced_vertex_sets(g, 2):
        gamma, beta = _gamma_beta(induced_subgraph(g, s)[0])
        if gamma < beta:
            return s
    return None


def is_perfect_oracle(g: Graph, max_order: int = ORACLE_MAX_ORDER) -> Certificate:
    violating = find_violating_induced_subgraph(g, max_order)
    if violating is not None:
        return Certificate(ViolatingInducedSubgraph(violating))
    witness = _structural_reason(g)
    if witness is None:
        raise RecognizerDisagreement(g, {"oracle": Verdict.PERFECT, "structural": Verdict.NOT_PERFECT})
    return Certificate(witness)


# --- certificate checking -----------------------------------------------------


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.order
    dist[source] = 0
    queue = [source]
    for v in queue:
        for u in g.neighbors(v):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def verify_certificate(g: Graph, cert: Certificate) -> None:
    """Recheck the witness in ``cert`` directly on ``g``.

    Raises :class:`CertificateError` on the first failed condition.
    """
    r = cert.reason
    rows = g.rows
    n = g.order

    def fail(msg: str) -> None:
        raise CertificateError(f"{cert}: {msg}")

    def in_range(vs: VertexSet) -> None:
        if any(not 0 <= v < n for v in vs):
            fail("witness vertex out of range")
        if len(set(vs)) != len(vs):
            fail("witness vertices not distinct")

    if isinstance(r, TreeDiamAtMost4):
        if g.edge_count != n - 1:
            fail("edge count is not order - 1")
        dists = [_bfs_distances(g, v) for v in range(n)]
        if any(d < 0 for row in dists for d in row):
            fail("graph is disconnected")
        actual = max(max(row) for row in dists)
        if actual != r.diameter or actual > 4:
            fail(f"diameter is {actual}")
    elif isinstance(r, SubgraphOfK2n):
        in_range(r.embedding)
        if not 1 <= len(r.embedding) <= 2:
            fail("embedding set must have 1 or 2 vertices")
        a = mask_of(r.embedding)
        if any(rows[v] & a for v in r.embedding):
            fail("embedding set is not independent")
        for u, v in g.edges():
            if not (a >> u & 1 or a >> v & 1):
                fail(f"edge ({u}, {v}) misses the embedding set")
    elif isinstance(r, ContainsTriangle):
        in_range(r.vertices)
        x, y, z = r.vertices
        if not (g.has_edge(x, y) and g.has_edge(y, z) and g.has_edge(x, z)):
            fail("vertices are not pairwise adjacent")
    elif isinstance(r, ContainsP6):
        in_range(r.path)
        if len(r.path) != 6:
            fail("path must have 6 vertices")
        if not all(g.has_edge(u, v) for u, v in zip(r.path, r.path[1:])):
            fail("consecutive path vertices not adjacent")
    elif isinstance(r, IsC5):
        if n != 5 or any(row.bit_count() != 2 for row in rows):
            fail("degree profile is not that of C5")
        if component_mask(rows, 0, g.vertex_mask) != g.vertex_mask:
            fail("graph is disconnected")
    elif isinstance(r, ViolatingInducedSubgraph):
        in_range(r.vertices)
        if len(r.vertices) < 2:
            fail("subset has fewer than 2 vertices")
        h, _ = induced_subgraph(g, r.vertices)
        if component_mask(h.rows, 0, h.vertex_mask) != h.vertex_mask:
            fail("induced subgraph is disconnected")
        gamma = domination_number(h, method="exhaustive").value
        beta = covering_number(h, method="exhaustive").value
        if not gamma < beta:
            fail(f"gamma={gamma} is not below beta={beta}")
    else:
        fail(f"unknown reason type {type(r).__name__}")
