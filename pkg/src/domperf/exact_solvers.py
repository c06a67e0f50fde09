"""Exact domination, covering and independence numbers.

Small graphs are solved by exhaustive search over subsets in increasing
(or, for independence, decreasing) cardinality, which returns the
lexicographically least optimal set. Larger graphs go to branch and bound.
Only the optimum value is canonical across methods; witnesses from branch
and bound are feasible and optimal but may differ from the exhaustive ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from .graph_core import Graph, GraphError, VertexSet, mask_of, members

__all__ = [
    "SolverResult",
    "DOMINATION_EXHAUSTIVE_MAX",
    "COVER_EXHAUSTIVE_MAX",
    "is_dominating_set",
    "is_vertex_cover",
    "is_independent_set",
    "domination_number",
    "covering_number",
    "independence_number",
]

DOMINATION_EXHAUSTIVE_MAX = 16
COVER_EXHAUSTIVE_MAX = 20

Method = Literal["auto", "exhaustive", "branch_and_bound"]


@dataclass(frozen=True)
class SolverResult:
    value: int
    witness: VertexSet

    def __post_init__(self) -> None:
        if len(self.witness) != self.value:
            raise ValueError(f"witness {self.witness} does not have size {self.value}")


def _check_members(g: Graph, s: Iterable[int]) -> int:
    mask = mask_of(s)
    if mask & ~g.vertex_mask:
        raise GraphError(f"vertex set {sorted(members(mask))} not contained in 0..{g.order - 1}")
    return mask


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    mask = _check_members(g, d)
    dominated = mask
    for v in members(mask):
        dominated |= g.rows[v]
    return dominated == g.vertex_mask


def is_vertex_cover(g: Graph, c: Iterable[int]) -> bool:
    mask = _check_members(g, c)
    outside = g.vertex_mask & ~mask
    return all(g.rows[v] & outside == 0 for v in members(outside))


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    mask = _check_members(g, s)
    return all(g.rows[v] & mask == 0 for v in members(mask))


def _require_vertices(g: Graph) -> None:
    if g.order == 0:
        raise GraphError("the order-0 graph has no optimum to report")


def _pick(method: Method, order: int, threshold: int) -> str:
    if method == "auto":
        return "exhaustive" if order <= threshold else "branch_and_bound"
    if method not in ("exhaustive", "branch_and_bound"):
        raise ValueError(f"unknown method {method!r}")
    return method


# --- domination ---------------------------------------------------------------


def _domination_exhaustive(g: Graph) -> VertexSet:
    n = g.order
    full = g.vertex_mask
    closed = [row | 1 << v for v, row in enumerate(g.rows)]
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            dominated = 0
            for v in combo:
                dominated |= closed[v]
            if dominated == full:
                return combo
    raise AssertionError("the full vertex set always dominates")


def _greedy_dominating(closed: list[int], full: int) -> int:
    chosen = 0
    undominated = full
    while undominated:
        best = max(range(len(closed)), key=lambda v: (closed[v] & undominated).bit_count())
        chosen |= 1 << best
        undominated &= ~closed[best]
    return chosen


def _domination_bnb(g: Graph) -> VertexSet:
    full = g.vertex_mask
    closed = [row | 1 << v for v, row in enumerate(g.rows)]
    span = max(c.bit_count() for c in closed)  # max degree + 1
    degree = g.degrees()
    best_mask = _greedy_dominating(closed, full)
    best = best_mask.bit_count()

    def search(undominated: int, chosen: int, size: int) -> None:
        nonlocal best, best_mask
        if not undominated:
            if size < best:
                best, best_mask = size, chosen
            return
        if size + -(-undominated.bit_count() // span) >= best:
            return
        # most constrained undominated vertex: fewest ways to dominate it
        target = min(members(undominated), key=lambda v: (degree[v], v))
        options = members(closed[target])
        order = sorted(options, key=lambda v: (-(closed[v] & undominated).bit_count(), v))
        for v in order:
            search(undominated & ~closed[v], chosen | 1 << v, size + 1)

    search(full, 0, 0)
    return members(best_mask)


def domination_number(g: Graph, method: Method = "auto") -> SolverResult:
    """Minimum dominating set size and one minimum dominating set.

    Isolated vertices must belong to every dominating set.
    """
    _require_vertices(g)
    if _pick(method, g.order, DOMINATION_EXHAUSTIVE_MAX) == "exhaustive":
        witness = _domination_exhaustive(g)
    else:
        witness = _domination_bnb(g)
    return SolverResult(len(witness), witness)


# --- covering / independence -------------------------------------------------


def _cover_exhaustive(g: Graph) -> VertexSet:
    rows = g.rows
    full = g.vertex_mask
    if all(row == 0 for row in rows):
        return ()
    for k in range(1, g.order + 1):
        for combo in combinations(range(g.order), k):
            cover = 0
            for v in combo:
                cover |= 1 << v
            outside = full & ~cover
            rest = outside
            ok = True
            while rest:
                low = rest & -rest
                if rows[low.bit_length() - 1] & outside:
                    ok = False
                    break
                rest ^= low
            if ok:
                return combo
    raise AssertionError("the full vertex set always covers")


def _independent_exhaustive(g: Graph) -> VertexSet:
    n = g.order
    rows = g.rows
    for k in range(n, 0, -1):
        for combo in combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if all(rows[v] & mask == 0 for v in combo):
                return combo
    raise AssertionError("a single vertex is always independent")


def _clique_cover_bound(rows: tuple[int, ...], pool: int) -> int:
    # Greedy partition of ``pool`` into cliques; an independent set meets each
    # clique at most once, so the number of cliques bounds alpha from above.
    count = 0
    while pool:
        low = pool & -pool
        v = low.bit_length() - 1
        candidates = pool & rows[v]
        pool ^= low
        while candidates:
            low = candidates & -candidates
            u = low.bit_length() - 1
            pool ^= low
            candidates &= rows[u]
        count += 1
    return count


def _independent_bnb(g: Graph) -> VertexSet:
    rows = g.rows

    # greedy incumbent: repeatedly take a minimum-degree vertex
    pool = g.vertex_mask
    chosen = 0
    while pool:
        v = min(members(pool), key=lambda u: ((rows[u] & pool).bit_count(), u))
        chosen |= 1 << v
        pool &= ~(rows[v] | 1 << v)
    best_mask = chosen
    best = chosen.bit_count()

    def search(pool: int, chosen: int, size: int) -> None:
        nonlocal best, best_mask
        if not pool:
            if size > best:
                best, best_mask = size, chosen
            return
        if size + pool.bit_count() <= best:
            return
        if size + _clique_cover_bound(rows, pool) <= best:
            return
        v = max(members(pool), key=lambda u: ((rows[u] & pool).bit_count(), -u))
        if rows[v] & pool == 0:
            # everything left is pairwise non-adjacent
            search(0, chosen | pool, size + pool.bit_count())
            return
        search(pool & ~(rows[v] | 1 << v), chosen | 1 << v, size + 1)
        search(pool & ~(1 << v), chosen, size)

    search(g.vertex_mask, 0, 0)
    return members(best_mask)


def independence_number(g: Graph, method: Method = "auto") -> SolverResult:
    _require_vertices(g)
    if _pick(method, g.order, COVER_EXHAUSTIVE_MAX) == "exhaustive":
        witness = _independent_exhaustive(g)
    else:
        witness = _independent_bnb(g)
    return SolverResult(len(witness), witness)


def covering_number(g: Graph, method: Method = "auto") -> SolverResult:
    """Minimum vertex cover size and one minimum vertex cover.

    Branch and bound goes through a maximum independent set and takes its
    complement (covering number = order - independence number).
    """
    _require_vertices(g)
    if _pick(method, g.order, COVER_EXHAUSTIVE_MAX) == "exhaustive":
        witness = _cover_exhaustive(g)
    else:
        independent = mask_of(_independent_bnb(g))
        witness = members(g.vertex_mask & ~independent)
    return SolverResult(len(witness), witness)
