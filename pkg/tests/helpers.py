"""Brute-force oracles and graph strategies shared by the test modules.

Every oracle here is deliberately independent of the implementation it
checks: spanning trees by subset enumeration, shortest paths by simple-path
enumeration, min cut by partition enumeration, Eulerian classification by
re-deriving the degree/connectivity criterion.
"""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from graphquiz.core import Graph
from graphquiz.flow import FlowNetwork
from graphquiz.paths import INF


def brute_min_spanning_weight(g: Graph) -> int | None:
    """Minimum total weight over all spanning trees (None if disconnected).

    Enumerates every (n-1)-subset of edge indices and keeps the cheapest
    one that is acyclic and connects all vertices.
    """
    n, m = g.num_vertices, g.num_edges
    if n <= 1:
        return 0
    best = None
    for subset in combinations(range(m), n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i in subset:
            u, v, _w = g.edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            weight = sum(g.edges[i][2] for i in subset)
            if best is None or weight < best:
                best = weight
    return best


def brute_shortest_paths(g: Graph, source: int) -> list:
    """Distances by exhaustive simple-path enumeration (small n only)."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.num_vertices)]
    for u, v, w in g.edges:
        adj[u].append((v, w))
        if not g.directed:
            adj[v].append((u, w))
    best: list = [INF] * g.num_vertices
    best[source] = 0

    def walk(u: int, cost: int, seen: set[int]) -> None:
        for v, w in adj[u]:
            if v in seen:
                continue
            if cost + w < best[v]:
                best[v] = cost + w
            walk(v, cost + w, seen | {v})

    walk(source, 0, {source})
    return best


def brute_min_cut(net: FlowNetwork) -> int:
    """Minimum s-t cut capacity over all 2^(n-2) source-side partitions."""
    n = net.graph.num_vertices
    others = [v for v in range(n) if v not in (net.source, net.sink)]
    best = None
    for k in range(len(others) + 1):
        for extra in combinations(others, k):
            s_side = {net.source, *extra}
            cap = sum(c for u, v, c in net.arcs if u in s_side and v not in s_side)
            if best is None or cap < best:
                best = cap
    return best


def eulerian_criterion(g: Graph) -> str:
    """Independent re-derivation of the classification rule."""
    if g.num_edges == 0:
        return "circuit"
    degrees = [0] * g.num_vertices
    for u, v, _w in g.edges:
        degrees[u] += 1
        degrees[v] += 1
    support = [v for v in range(g.num_vertices) if degrees[v] > 0]
    # flood fill from one support vertex, ignoring isolated vertices
    adj: list[set[int]] = [set() for _ in range(g.num_vertices)]
    for u, v, _w in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    if any(v not in seen for v in support):
        return "none"
    odd = sum(1 for v in support if degrees[v] % 2 == 1)
    return {0: "circuit", 2: "path"}.get(odd, "none")


def walk_covers_all_edges(g: Graph, walk) -> bool:
    """True iff the vertex walk traverses every edge exactly once."""
    if g.num_edges == 0:
        return len(walk) == 0
    remaining: dict[tuple[int, int], list[int]] = {}
    for idx, (u, v, _w) in enumerate(g.edges):
        remaining.setdefault((min(u, v), max(u, v)), []).append(idx)
    if len(walk) != g.num_edges + 1:
        return False
    for x, y in zip(walk, walk[1:]):
        key = (min(x, y), max(x, y))
        if not remaining.get(key):
            return False
        remaining[key].pop()
    return all(not v for v in remaining.values())


def all_graphs_up_to(n_max: int):
    """Exhaustive enumeration of undirected simple graphs on 0..n_max vertices."""
    for n in range(n_max + 1):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for mask in range(1 << len(pairs)):
            edges = tuple(pairs[k] for k in range(len(pairs)) if mask >> k & 1)
            yield Graph(n, edges)


# -- hypothesis strategies ---------------------------------------------------

@st.composite
def undirected_graphs(draw, max_n: int = 8, weighted: bool = False, max_w: int = 9):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if weighted:
        weights = draw(st.lists(st.integers(1, max_w), min_size=len(chosen), max_size=len(chosen)))
        edges = tuple((u, v, w) for (u, v), w in zip(chosen, weights))
    else:
        edges = tuple(chosen)
    return Graph(n, edges)


@st.composite
def directed_graphs(draw, max_n: int = 8, weighted: bool = False, min_w: int = 1, max_w: int = 9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if weighted:
        weights = draw(st.lists(st.integers(min_w, max_w), min_size=len(chosen), max_size=len(chosen)))
        edges = tuple((u, v, w) for (u, v), w in zip(chosen, weights))
    else:
        edges = tuple(chosen)
    return Graph(n, edges, directed=True)
