"""Reference solver speaking the lab protocol, plus deliberately broken
mutants for validating the grader.

Run as ``python -m graphquiz.refsolver [--mutant NAME]``.  Each mutant
reproduces one classic student bug; the grader's acceptance suite asserts
that every one of them loses marks, and that the input-mutating one fails
exactly the board-effects test.
"""

from __future__ import annotations

import argparse
import sys

from .core import Graph, degree_stats, parse_graph, serialize_graph
from .flow import FlowNetwork, flow_value, ford_fulkerson_step, max_flow, zero_flow
from .mst import kruskal
from .paths import dijkstra, distance_to_json
from .traversal import connected_components

MUTANTS = (
    "kruskal-skip-cycle-check",
    "kruskal-max-tree",
    "mutate-input",
    "dijkstra-unit-weights",
    "components-ignore-isolated",
    "maxflow-one-iteration",
)


def _solve_max_degree(g: Graph, args, mutant):
    d, _seq = degree_stats(g)
    return [f"MAXDEG {d}"]


def _solve_components(g: Graph, args, mutant):
    count, labels = connected_components(g)
    if mutant == "components-ignore-isolated":
        touched = {u for u, v, _w in g.edges} | {v for u, v, _w in g.edges}
        count = len({labels[v] for v in touched})
    return [f"COMPONENTS {count}"]


def _solve_mst(g: Graph, args, mutant):
    if mutant == "kruskal-skip-cycle-check":
        # grabs the n-1 lightest edges and never checks for cycles
        order = sorted(range(g.num_edges), key=lambda i: (g.edges[i][2], i))
        chosen = order[: max(g.num_vertices - 1, 0)]
    elif mutant == "kruskal-max-tree":
        # comparison flipped: builds the heaviest spanning forest
        from .dsu import DisjointSet

        ds = DisjointSet(g.num_vertices)
        chosen = [
            i
            for i in sorted(range(g.num_edges), key=lambda i: (-g.edges[i][2], i))
            if ds.union(g.edges[i][0], g.edges[i][1])
        ]
    else:
        chosen, _trace = kruskal(g)
    lines = [f"TREE {len(chosen)}"]
    lines.extend(f"{g.edges[i][0]} {g.edges[i][1]}" for i in sorted(chosen))
    return lines


def _solve_shortest_path(g: Graph, args, mutant):
    source = int(args[0])
    if mutant == "dijkstra-unit-weights":
        flat = Graph(
            g.num_vertices,
            tuple((u, v, 1) for u, v, _w in g.edges),
            directed=g.directed,
        )
        dist, _t = dijkstra(flat, source)
    else:
        dist, _t = dijkstra(g, source)
    return ["DIST " + " ".join(str(distance_to_json(d)) for d in dist)]


def _solve_max_flow(g: Graph, args, mutant):
    net = FlowNetwork(g, int(args[0]), int(args[1]))
    if mutant == "maxflow-one-iteration":
        f = zero_flow(net)
        step = ford_fulkerson_step(net, f)
        if step is not None:
            f, _ts = step
        value = flow_value(net, f)
    else:
        result = max_flow(net)
        f, value = result.flow, result.value
    return [f"VALUE {value}", "FLOWS " + " ".join(str(x) for x in f)]


_SOLVERS = {
    "max-degree": _solve_max_degree,
    "components": _solve_components,
    "mst": _solve_mst,
    "shortest-path": _solve_shortest_path,
    "max-flow": _solve_max_flow,
}


def solve_request(text: str, mutant: str | None = None) -> str:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("TASK"):
        raise SystemExit("protocol error: missing TASK line")
    head = lines[0].split()
    task, args = head[1], head[2:]
    try:
        end_at = lines.index("END")
    except ValueError:
        raise SystemExit("protocol error: missing END line")
    g = parse_graph("\n".join(lines[1:end_at]))

    answer = _SOLVERS[task](g, args, mutant)

    echo = g
    if mutant == "mutate-input" and g.num_edges > 0:
        u, v, w = g.edges[0]
        echo = Graph(g.num_vertices, ((u, v, w + 1),) + g.edges[1:], directed=g.directed)
    return "\n".join(answer) + "\nECHO\n" + serialize_graph(echo) + "\nEND\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="graphquiz-refsolver")
    parser.add_argument("--mutant", choices=MUTANTS, default=None)
    ns = parser.parse_args(argv)
    sys.stdout.write(solve_request(sys.stdin.read(), ns.mutant))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
