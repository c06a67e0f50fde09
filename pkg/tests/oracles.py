"""Slow, independent reference computations used only by the tests.

Nothing here imports the search code under test; graphs are read through
``order`` and ``edges()`` only and everything else is recomputed from
plain Python sets.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from domperf.graph_core import Graph, graph_from_edges


def adjacency(g: Graph) -> list[set[int]]:
    adj = [set() for _ in range(g.order)]
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def subsets(n: int):
    for mask in range(1 << n):
        yield {v for v in range(n) if mask >> v & 1}


def connected_subset(adj: list[set[int]], s: set[int]) -> bool:
    if not s:
        return True
    start = min(s)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v] & s:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == s


def brute_gamma(g: Graph) -> int:
    adj = adjacency(g)
    n = g.order
    return min(
        len(d) for d in subsets(n) if all(v in d or adj[v] & d for v in range(n))
    )


def brute_beta(g: Graph) -> int:
    edges = g.edges()
    return min(len(c) for c in subsets(g.order) if all(u in c or v in c for u, v in edges))


def brute_alpha(g: Graph) -> int:
    adj = adjacency(g)
    return max(len(s) for s in subsets(g.order) if all(not (adj[v] & s) for v in s))


def brute_diameter(g: Graph) -> int:
    n = g.order
    inf = float("inf")
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return max(max(row) for row in dist)


def brute_connected_sets(g: Graph, min_size: int) -> set[frozenset[int]]:
    adj = adjacency(g)
    return {
        frozenset(s) for s in subsets(g.order) if len(s) >= min_size and connected_subset(adj, s)
    }


def brute_k2n_sets(g: Graph) -> list[tuple[int, ...]]:
    """All independent vertex covers of size 1 or 2."""
    edges = g.edges()
    adj = adjacency(g)
    out = []
    for k in (1, 2):
        for a in combinations(range(g.order), k):
            if k == 2 and a[1] in adj[a[0]]:
                continue
            if all(u in a or v in a for u, v in edges):
                out.append(a)
    return out


def brute_has_p6(g: Graph) -> bool:
    adj = adjacency(g)
    return any(
        all(p[i + 1] in adj[p[i]] for i in range(5)) for p in permutations(range(g.order), 6)
    )


def brute_has_triangle(g: Graph) -> bool:
    adj = adjacency(g)
    return any(b in adj[a] and c in adj[a] and c in adj[b] for a, b, c in combinations(range(g.order), 3))


def brute_perfect(g: Graph) -> bool:
    """Definition checked directly: every connected induced subgraph on >= 2
    vertices has gamma == beta."""
    adj = adjacency(g)
    for s in subsets(g.order):
        if len(s) < 2 or not connected_subset(adj, s):
            continue
        keep = sorted(s)
        idx = {v: i for i, v in enumerate(keep)}
        h = graph_from_edges(len(keep), [(idx[u], idx[v]) for u, v in g.edges() if u in s and v in s])
        if brute_gamma(h) != brute_beta(h):
            return False
    return True


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in product((0, 1), repeat=len(pairs)):
        yield graph_from_edges(n, [p for p, b in zip(pairs, bits) if b])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return graph_from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return graph_from_edges(n, sorted(edges))


def random_tree(rng: random.Random, n: int) -> Graph:
    return graph_from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])


def bridges(g: Graph) -> set[tuple[int, int]]:
    """Edges whose removal disconnects the graph (by deletion and recheck)."""
    adj = adjacency(g)
    out = set()
    full = set(range(g.order))
    for u, v in g.edges():
        adj[u].discard(v)
        adj[v].discard(u)
        if not connected_subset(adj, full):
            out.add((u, v))
        adj[u].add(v)
        adj[v].add(u)
    return out
