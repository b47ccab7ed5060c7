"""Capacitated networks and augmenting-path max flow.

Augmenting paths are chosen by BFS in the residual graph with ascending
neighbor order (the Edmonds-Karp rule), which both terminates and makes
every run reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Graph
from .traces import Trace, TraceStep, augment


@dataclass(frozen=True)
class FlowNetwork:
    """Directed capacitated graph with distinguished source and sink.

    Edge weights of ``graph`` are the arc capacities (strictly positive).
    Antiparallel arc pairs are allowed; self-loops and parallel duplicates
    are not (the graph must be simple).
    """

    graph: Graph
    source: int
    sink: int

    def __post_init__(self):
        g = self.graph
        if not g.directed:
            raise ValueError("flow network requires a directed graph")
        if not g.simple:
            raise ValueError("flow network requires a simple graph")
        if not (0 <= self.source < g.num_vertices and 0 <= self.sink < g.num_vertices):
            raise ValueError("source or sink out of range")
        if self.source == self.sink:
            raise ValueError("source and sink must differ")
        for u, v, c in g.edges:
            if c <= 0:
                raise ValueError(f"capacity of arc ({u}, {v}) must be positive, got {c}")

    @property
    def arcs(self) -> tuple[tuple[int, int, int], ...]:
        return self.graph.edges


def zero_flow(net: FlowNetwork) -> list[int]:
    return [0] * net.graph.num_edges


def flow_value(net: FlowNetwork, f) -> int:
    """Net flow out of the source."""
    out = sum(fe for (u, _v, _c), fe in zip(net.arcs, f) if u == net.source)
    back = sum(fe for (_u, v, _c), fe in zip(net.arcs, f) if v == net.source)
    return out - back


def is_valid_flow(net: FlowNetwork, f) -> tuple[bool, str | None]:
    """Capacity then conservation; names the first violated arc or vertex."""
    arcs = net.arcs
    if len(f) != len(arcs):
        return False, f"flow has {len(f)} values for {len(arcs)} arcs"
    for idx, ((u, v, c), fe) in enumerate(zip(arcs, f)):
        if not isinstance(fe, int) or fe < 0:
            return False, f"arc {idx} ({u}->{v}): flow {fe} is not a nonnegative integer"
        if fe > c:
            return False, f"arc {idx} ({u}->{v}): flow {fe} exceeds capacity {c}"
    for vertex in range(net.graph.num_vertices):
        if vertex in (net.source, net.sink):
            continue
        inflow = sum(fe for (_u, v, _c), fe in zip(arcs, f) if v == vertex)
        outflow = sum(fe for (u, _v, _c), fe in zip(arcs, f) if u == vertex)
        if inflow != outflow:
            return False, f"vertex {vertex}: inflow {inflow} != outflow {outflow}"
    return True, None


def residual_graph(net: FlowNetwork, f) -> Graph:
    """Residual capacities as a directed weighted graph.

    Forward arcs carry c(e)-f(e), backward arcs carry f(e); where an
    antiparallel original arc and a backward residual coincide their
    capacities merge, keeping the result a simple graph.  Arc order:
    first-seen during a forward pass over the arcs, then a backward pass.
    """
    ok, why = is_valid_flow(net, f)
    if not ok:
        raise ValueError(f"invalid flow: {why}")
    caps: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []

    def put(u: int, v: int, c: int) -> None:
        if c <= 0:
            return
        if (u, v) not in caps:
            caps[(u, v)] = 0
            order.append((u, v))
        caps[(u, v)] += c

    for (u, v, c), fe in zip(net.arcs, f):
        put(u, v, c - fe)
    for (u, v, _c), fe in zip(net.arcs, f):
        put(v, u, fe)
    edges = tuple((u, v, caps[(u, v)]) for u, v in order)
    return Graph(num_vertices=net.graph.num_vertices, edges=edges, directed=True)


def augmenting_path(net: FlowNetwork, f) -> list[int] | None:
    """BFS-shortest source->sink path in the residual graph (ascending
    neighbor order), or None when the flow is maximum."""
    res = residual_graph(net, f)
    adj = res.adjacency()
    parent = {net.source: -1}
    queue = deque([net.source])
    while queue:
        u = queue.popleft()
        if u == net.sink:
            break
        for v, _w, _idx in adj[u]:
            if v not in parent:
                parent[v] = u
                queue.append(v)
    if net.sink not in parent:
        return None
    path = [net.sink]
    while path[-1] != net.source:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def path_bottleneck(net: FlowNetwork, f, path) -> int:
    """Minimum residual capacity along a vertex path; raises if any hop has
    no residual capacity."""
    res = residual_graph(net, f)
    caps = {(u, v): c for u, v, c in res.edges}
    bottleneck = None
    for x, y in zip(path, path[1:]):
        c = caps.get((x, y), 0)
        if c <= 0:
            raise ValueError(f"no residual capacity on hop {x}->{y}")
        bottleneck = c if bottleneck is None else min(bottleneck, c)
    if bottleneck is None:
        raise ValueError("path must contain at least one hop")
    return bottleneck


def push_along(net: FlowNetwork, f, path, amount: int) -> list[int]:
    """New flow after pushing ``amount`` along a residual path.

    On each hop the backward residual (cancelling existing opposite flow)
    is consumed before the forward arc's spare capacity.
    """
    new = list(f)
    arc_index = {(u, v): i for i, (u, v, _c) in enumerate(net.arcs)}
    for x, y in zip(path, path[1:]):
        remaining = amount
        back = arc_index.get((y, x))
        if back is not None and new[back] > 0:
            cancel = min(remaining, new[back])
            new[back] -= cancel
            remaining -= cancel
        if remaining > 0:
            fwd = arc_index.get((x, y))
            if fwd is None:
                raise ValueError(f"cannot push {remaining} on hop {x}->{y}: no arc")
            new[fwd] += remaining
            _u, _v, cap = net.arcs[fwd]
            if new[fwd] > cap:
                raise ValueError(f"push exceeds capacity on arc {x}->{y}")
    return new


def ford_fulkerson_step(net: FlowNetwork, f) -> tuple[list[int], TraceStep] | None:
    """One augmentation: push the bottleneck along the canonical augmenting
    path.  None when the flow is already maximum."""
    path = augmenting_path(net, f)
    if path is None:
        return None
    bottleneck = path_bottleneck(net, f, path)
    new = push_along(net, f, path, bottleneck)
    return new, augment(path, bottleneck)


@dataclass
class MaxFlowResult:
    value: int
    flow: list[int]
    cut: list[int]  # source side of a minimum cut, ascending
    trace: Trace


def max_flow(net: FlowNetwork) -> MaxFlowResult:
    """Iterate ford_fulkerson_step to completion.

    The returned cut is the residual-reachable vertex set from the source;
    its capacity equals the flow value.
    """
    f = zero_flow(net)
    trace = Trace("max-flow")
    while True:
        step = ford_fulkerson_step(net, f)
        if step is None:
            break
        f, tstep = step
        trace.add(tstep)

    res = residual_graph(net, f)
    adj = res.adjacency()
    reach = {net.source}
    queue = deque([net.source])
    while queue:
        u = queue.popleft()
        for v, _w, _idx in adj[u]:
            if v not in reach:
                reach.add(v)
                queue.append(v)
    return MaxFlowResult(flow_value(net, f), f, sorted(reach), trace)


def cut_capacity(net: FlowNetwork, source_side) -> int:
    s_side = set(source_side)
    return sum(c for u, v, c in net.arcs if u in s_side and v not in s_side)
