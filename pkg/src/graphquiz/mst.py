"""Minimum spanning tree/forest construction and verification."""

from __future__ import annotations

from collections import deque

from .core import Graph
from .dsu import FOREST_RANK_PC, DisjointSet
from .traces import Trace, edge_decision

OK = "ok"
NOT_SUBGRAPH = "not-subgraph"
HAS_CYCLE = "has-cycle"
NOT_SPANNING = "not-spanning"


def kruskal(g: Graph, dsu_variant: str = FOREST_RANK_PC) -> tuple[list[int], Trace]:
    """Minimum spanning forest; edges examined in nondecreasing weight,
    ties by input index.  Returns (sorted accepted edge indices, decision
    trace).  The chosen union-find variant never changes the result."""
    if g.directed:
        raise ValueError("kruskal requires an undirected graph")
    ds = DisjointSet(g.num_vertices, dsu_variant)
    trace = Trace("kruskal")
    accepted: list[int] = []
    for idx in sorted(range(g.num_edges), key=lambda i: (g.edges[i][2], i)):
        u, v, _w = g.edges[idx]
        if ds.union(u, v):
            accepted.append(idx)
            trace.add(edge_decision(idx, True, "joins-components"))
        else:
            trace.add(edge_decision(idx, False, "forms-cycle"))
    accepted.sort()
    return accepted, trace


def reverse_delete(g: Graph) -> list[int]:
    """Spanning forest by deleting heaviest edges whose removal keeps the
    endpoints connected; ties broken by reverse input index."""
    if g.directed:
        raise ValueError("reverse_delete requires an undirected graph")
    kept = set(range(g.num_edges))
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.num_vertices)]
    for idx, (u, v, _w) in enumerate(g.edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))

    def still_connected(src: int, dst: int, banned: int) -> bool:
        seen = {src}
        queue = deque([src])
        while queue:
            x = queue.popleft()
            if x == dst:
                return True
            for y, idx in adj[x]:
                if idx != banned and idx in kept and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return False

    for idx in sorted(range(g.num_edges), key=lambda i: (-g.edges[i][2], -i)):
        u, v, _w = g.edges[idx]
        if still_connected(u, v, idx):
            kept.discard(idx)
    return sorted(kept)


def prim(g: Graph, start: int) -> tuple[list[int], Trace]:
    """Grow one tree from start by the minimum-weight crossing edge (ties
    by edge index); covers only start's component."""
    if g.directed:
        raise ValueError("prim requires an undirected graph")
    if not 0 <= start < g.num_vertices:
        raise ValueError(f"start {start} out of range")
    in_tree = [False] * g.num_vertices
    in_tree[start] = True
    chosen: list[int] = []
    trace = Trace("prim")
    while True:
        best_idx = -1
        best_key: tuple[int, int] | None = None
        for idx, (u, v, w) in enumerate(g.edges):
            if in_tree[u] != in_tree[v]:
                key = (w, idx)
                if best_key is None or key < best_key:
                    best_key, best_idx = key, idx
        if best_idx == -1:
            break
        u, v, _w = g.edges[best_idx]
        in_tree[u] = in_tree[v] = True
        chosen.append(best_idx)
        trace.add(edge_decision(best_idx, True, "min-crossing"))
    return sorted(chosen), trace


def is_spanning_tree(g: Graph, claimed) -> str:
    """Verdict for a claimed edge-index set, first failure in the order
    not-subgraph -> has-cycle -> not-spanning -> ok."""
    indices = list(claimed)
    if len(set(indices)) != len(indices):
        return NOT_SUBGRAPH
    if any(not (isinstance(i, int) and 0 <= i < g.num_edges) for i in indices):
        return NOT_SUBGRAPH
    ds = DisjointSet(g.num_vertices)
    for i in indices:
        u, v, _w = g.edges[i]
        if not ds.union(u, v):
            return HAS_CYCLE
    if g.num_vertices > 0 and ds.num_classes != 1:
        return NOT_SPANNING
    return OK


def is_spanning_forest(g: Graph, claimed) -> str:
    """Like is_spanning_tree but 'spanning' means spanning every component
    of g (the right check for possibly-disconnected inputs)."""
    from .traversal import connected_components

    indices = list(claimed)
    if len(set(indices)) != len(indices):
        return NOT_SUBGRAPH
    if any(not (isinstance(i, int) and 0 <= i < g.num_edges) for i in indices):
        return NOT_SUBGRAPH
    ds = DisjointSet(g.num_vertices)
    for i in indices:
        u, v, _w = g.edges[i]
        if not ds.union(u, v):
            return HAS_CYCLE
    count, _labels = connected_components(g)
    if ds.num_classes != count:
        return NOT_SPANNING
    return OK


def forest_weight(g: Graph, indices) -> int:
    return sum(g.edges[i][2] for i in indices)
