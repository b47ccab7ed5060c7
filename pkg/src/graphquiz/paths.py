"""Shortest-path algorithms with settle/relax traces.

Distances are exact ints except for the infinity sentinel, which is
``math.inf`` in memory and the string "inf" in every serialized form.
"""

from __future__ import annotations

import heapq
import math

from .core import Graph
from .traces import Trace, relax, settle

INF = math.inf

LINEAR_SCAN = "linear-scan"
BINARY_HEAP = "binary-heap"


def distance_to_json(d):
    return "inf" if d == INF else d


def distance_from_json(d):
    if isinstance(d, str):
        if d.strip().lower() == "inf":
            return INF
        raise ValueError(f"bad distance value {d!r}")
    return d


def dag_shortest_paths(g: Graph, source: int) -> tuple[list, Trace]:
    """Single-source distances on a weighted DAG, any (also negative) weights.

    Vertices are processed in the canonical topological order; the trace
    records every improving relaxation as (edge index, new distance).
    """
    from .traversal import topological_sort

    if not 0 <= source < g.num_vertices:
        raise ValueError(f"source {source} out of range")
    order, cycle = topological_sort(g)
    if order is None:
        raise ValueError(f"graph is not acyclic: cycle {cycle}")
    adj = g.adjacency()
    dist: list = [INF] * g.num_vertices
    dist[source] = 0
    trace = Trace("dag-shortest-paths")
    for u in order:
        if dist[u] == INF:
            continue
        for v, w, idx in adj[u]:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                trace.add(relax(idx, dist[v]))
    return dist, trace


def dijkstra(g: Graph, source: int, pq_variant: str = BINARY_HEAP) -> tuple[list, Trace]:
    """Nonnegative-weight shortest paths with a settle trace.

    Both priority-queue variants settle vertices in nondecreasing final
    distance with ties broken by smallest id, so their traces are
    identical.
    """
    if not 0 <= source < g.num_vertices:
        raise ValueError(f"source {source} out of range")
    if pq_variant not in (LINEAR_SCAN, BINARY_HEAP):
        raise ValueError(f"unknown pq variant {pq_variant!r}")
    for u, v, w in g.edges:
        if w < 0:
            raise ValueError(f"negative weight on edge ({u}, {v}): {w}")

    adj = g.adjacency()
    n = g.num_vertices
    dist: list = [INF] * n
    dist[source] = 0
    settled = [False] * n
    trace = Trace("dijkstra")

    if pq_variant == LINEAR_SCAN:
        while True:
            u, best = -1, INF
            for v in range(n):
                if not settled[v] and dist[v] < best:
                    u, best = v, dist[v]
            if u == -1:
                break
            settled[u] = True
            trace.add(settle(u, dist[u]))
            for v, w, _idx in adj[u]:
                if not settled[v] and dist[u] + w < dist[v]:
                    dist[v] = dist[u] + w
    else:
        heap: list[tuple] = [(0, source)]
        while heap:
            d, u = heapq.heappop(heap)
            if settled[u] or d > dist[u]:
                continue
            settled[u] = True
            trace.add(settle(u, dist[u]))
            for v, w, _idx in adj[u]:
                if not settled[v] and dist[u] + w < dist[v]:
                    dist[v] = dist[u] + w
                    heapq.heappush(heap, (dist[v], v))
    return dist, trace


def bellman_ford(g: Graph, source: int) -> tuple[list | None, list[int] | None]:
    """(distances, None) or (None, negative cycle reachable from source).

    Arcs are relaxed in input order for n-1 rounds; the witness cycle is a
    vertex list in arc direction, rotated to start at its smallest vertex.
    """
    if not g.directed:
        raise ValueError("bellman_ford requires a directed graph")
    if not 0 <= source < g.num_vertices:
        raise ValueError(f"source {source} out of range")
    n = g.num_vertices
    dist: list = [INF] * n
    dist[source] = 0
    parent = [-1] * n  # predecessor vertex via the last improving arc
    for _round in range(max(n - 1, 0)):
        changed = False
        for u, v, w in g.edges:
            if dist[u] != INF and dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                parent[v] = u
                changed = True
        if not changed:
            break

    for u, v, w in g.edges:
        if dist[u] != INF and dist[u] + w < dist[v]:
            # v is improvable after n-1 rounds: walk back onto the cycle
            parent[v] = u
            x = v
            for _ in range(n):
                x = parent[x]
            cycle = [x]
            y = parent[x]
            while y != x:
                cycle.append(y)
                y = parent[y]
            cycle.reverse()  # parent links point against the arcs
            start = cycle.index(min(cycle))
            return None, cycle[start:] + cycle[:start]
    return dist, None
