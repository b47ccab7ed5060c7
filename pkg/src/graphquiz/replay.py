"""Replaying a trace against its input graph to reconstruct the result.

Used by the test suite to pin down the invariant that traces are complete
answer keys: nothing about the final answer is missing from the steps.
"""

from __future__ import annotations

from .core import Graph
from .flow import FlowNetwork, flow_value, push_along, zero_flow
from .paths import INF
from .traces import Trace


def replay_trace(trace: Trace, g: Graph, **args):
    """Reconstruct an algorithm's final result from its trace.

    dfs/bfs -> visit order; dijkstra -> distance table; dag shortest paths
    -> distance table (needs source=); kruskal/prim -> accepted edge
    indices; max-flow -> (value, flow) (needs net=).
    """
    alg = trace.algorithm
    if alg in ("dfs-prefix", "dfs-postfix"):
        return [s.data["vertex"] for s in trace.steps]
    if alg == "bfs":
        return [s.data["vertex"] for s in trace.steps]
    if alg == "dijkstra":
        dist = [INF] * g.num_vertices
        for s in trace.steps:
            dist[s.data["vertex"]] = s.data["distance"]
        return dist
    if alg == "dag-shortest-paths":
        source = args["source"]
        dist = [INF] * g.num_vertices
        dist[source] = 0
        for s in trace.steps:
            _u, v, _w = g.edges[s.data["edge"]]
            dist[v] = s.data["distance"]
        return dist
    if alg in ("kruskal", "prim"):
        return sorted(s.data["edge"] for s in trace.steps if s.data["accepted"])
    if alg == "max-flow":
        net: FlowNetwork = args["net"]
        f = zero_flow(net)
        for s in trace.steps:
            f = push_along(net, f, s.data["path"], s.data["bottleneck"])
        return flow_value(net, f), f
    raise ValueError(f"no replay rule for algorithm {alg!r}")
