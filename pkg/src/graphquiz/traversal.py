"""Search-based algorithms: DFS, BFS, components, topological order."""

from __future__ import annotations

import heapq
from collections import deque

from .core import Graph
from .paths import INF
from .traces import Trace, settle, visit


def dfs(g: Graph, root: int, phase: str = "prefix") -> Trace:
    """Depth-first search from root, children in ascending-id order.

    The prefix trace records a vertex at discovery, the postfix trace at
    finish; exactly the vertices reachable from root appear.
    """
    if not 0 <= root < g.num_vertices:
        raise ValueError(f"root {root} out of range")
    if phase not in ("prefix", "postfix"):
        raise ValueError(f"phase must be 'prefix' or 'postfix', got {phase!r}")
    adj = g.adjacency()
    seen = [False] * g.num_vertices
    trace = Trace(f"dfs-{phase}")

    def explore(u: int) -> None:
        seen[u] = True
        if phase == "prefix":
            trace.add(visit(u, "prefix"))
        for v, _w, _idx in adj[u]:
            if not seen[v]:
                explore(v)
        if phase == "postfix":
            trace.add(visit(u, "postfix"))

    explore(root)
    return trace


def bfs(g: Graph, root: int) -> tuple[Trace, list]:
    """Breadth-first search; returns (dequeue-order trace, hop distances).

    Unreachable vertices sit at the infinity sentinel.
    """
    if not 0 <= root < g.num_vertices:
        raise ValueError(f"root {root} out of range")
    adj = g.adjacency()
    dist: list = [INF] * g.num_vertices
    dist[root] = 0
    trace = Trace("bfs")
    queue = deque([root])
    enqueued = [False] * g.num_vertices
    enqueued[root] = True
    while queue:
        u = queue.popleft()
        trace.add(settle(u, dist[u]))
        for v, _w, _idx in adj[u]:
            if not enqueued[v]:
                enqueued[v] = True
                dist[v] = dist[u] + 1
                queue.append(v)
    return trace, dist


def connected_components(g: Graph) -> tuple[int, list[int]]:
    """(component count, per-vertex labels); labels are 0..count-1 in order
    of each component's smallest vertex id."""
    if g.directed:
        raise ValueError("connected_components requires an undirected graph")
    adj = g.adjacency()
    labels = [-1] * g.num_vertices
    count = 0
    for start in range(g.num_vertices):
        if labels[start] != -1:
            continue
        labels[start] = count
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, _w, _idx in adj[u]:
                if labels[v] == -1:
                    labels[v] = count
                    queue.append(v)
        count += 1
    return count, labels


def topological_sort(g: Graph) -> tuple[list[int] | None, list[int] | None]:
    """Kahn's algorithm picking the smallest-id zero-indegree vertex.

    Returns (order, None) for a DAG and (None, cycle) otherwise, where
    cycle is a directed cycle as a vertex list without the repeated start.
    """
    if not g.directed:
        raise ValueError("topological_sort requires a directed graph")
    n = g.num_vertices
    indeg = [0] * n
    adj = g.adjacency()
    for _u, v, _w in g.edges:
        indeg[v] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for v, _w, _idx in adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(ready, v)
    if len(order) == n:
        return order, None

    # stuck: every remaining vertex keeps an incoming arc from a remaining
    # vertex, so walking predecessors must close a cycle
    remaining = {v for v in range(n) if indeg[v] > 0}
    preds: dict[int, list[int]] = {v: [] for v in remaining}
    for u, v, _w in g.edges:
        if u in remaining and v in remaining:
            preds[v].append(u)
    u = min(remaining)
    path: list[int] = []
    pos: dict[int, int] = {}
    while u not in pos:
        pos[u] = len(path)
        path.append(u)
        u = min(preds[u])
    cycle = path[pos[u]:]
    cycle.reverse()  # predecessor walk found it backwards
    start = cycle.index(min(cycle))
    return None, cycle[start:] + cycle[:start]


def is_valid_topological_order(g: Graph, order) -> bool:
    """True iff order is a permutation of all vertex ids respecting every arc."""
    if not g.directed:
        raise ValueError("topological order validity requires a directed graph")
    try:
        seq = [int(x) for x in order]
    except (TypeError, ValueError):
        return False
    if sorted(seq) != list(range(g.num_vertices)):
        return False
    position = {v: i for i, v in enumerate(seq)}
    return all(position[u] < position[v] for u, v, _w in g.edges)
