#!/usr/bin/env python3
"""Author the shipped lab specs.

Expected values for visible tests are computed with the library's own
reference algorithms at build time, so the committed JSON can never drift
from the oracles.  Run from the repo root:

    python3 tools/build_labs.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from graphquiz.core import degree_stats, parse_graph
from graphquiz.flow import FlowNetwork, max_flow
from graphquiz.labs import LabSpec, TestCase, limit_case_suite
from graphquiz.mst import forest_weight, kruskal
from graphquiz.paths import dijkstra, distance_to_json
from graphquiz.traversal import connected_components

OUT = Path(__file__).resolve().parent.parent / "src" / "graphquiz" / "data" / "labs"

REFERENCE = ["python3", "-m", "graphquiz.refsolver"]

SKELETONS = {
    "max-degree": '''\
import sys

def max_degree(n, edges):
    # TODO: return the maximum degree of the undirected graph
    raise NotImplementedError

def main():
    lines = sys.stdin.read().splitlines()
    head = lines[0].split()          # TASK max-degree
    kind, n, m = lines[1].split()    # header "U n m"
    n, m = int(n), int(m)
    edges = [tuple(map(int, ln.split()))[:2] for ln in lines[2:2 + m]]
    print(f"MAXDEG {max_degree(n, edges)}")
    print("ECHO")
    print(f"{kind} {n} {m}")
    for ln in lines[2:2 + m]:
        parts = ln.split()
        print(parts[0], parts[1], parts[2] if len(parts) > 2 else 1)
    print("END")

main()
''',
    "components": '''\
import sys

def count_components(n, edges):
    # TODO: return the number of connected components
    raise NotImplementedError

def main():
    lines = sys.stdin.read().splitlines()
    kind, n, m = lines[1].split()
    n, m = int(n), int(m)
    edges = [tuple(map(int, ln.split()))[:2] for ln in lines[2:2 + m]]
    print(f"COMPONENTS {count_components(n, edges)}")
    print("ECHO")
    print(f"{kind} {n} {m}")
    for ln in lines[2:2 + m]:
        parts = ln.split()
        print(parts[0], parts[1], parts[2] if len(parts) > 2 else 1)
    print("END")

main()
''',
    "mst": '''\
import sys

def minimum_spanning_forest(n, edges):
    # edges: list of (u, v, w); return the chosen (u, v) pairs.
    # TODO: sort edges by weight and keep those joining two components
    # (a union-find structure with union by rank is the right tool).
    raise NotImplementedError

def main():
    lines = sys.stdin.read().splitlines()
    kind, n, m = lines[1].split()
    n, m = int(n), int(m)
    edges = []
    for ln in lines[2:2 + m]:
        parts = ln.split()
        edges.append((int(parts[0]), int(parts[1]), int(parts[2]) if len(parts) > 2 else 1))
    tree = minimum_spanning_forest(n, edges)
    print(f"TREE {len(tree)}")
    for u, v in tree:
        print(u, v)
    print("ECHO")
    print(f"{kind} {n} {m}")
    for u, v, w in edges:
        print(u, v, w)
    print("END")

main()
''',
    "shortest-path": '''\
import sys

def shortest_distances(n, edges, source):
    # TODO: Dijkstra from source; return a list of n distances,
    # math.inf for unreachable vertices
    raise NotImplementedError

def main():
    lines = sys.stdin.read().splitlines()
    source = int(lines[0].split()[2])
    kind, n, m = lines[1].split()
    n, m = int(n), int(m)
    edges = []
    for ln in lines[2:2 + m]:
        parts = ln.split()
        edges.append((int(parts[0]), int(parts[1]), int(parts[2]) if len(parts) > 2 else 1))
    dist = shortest_distances(n, edges, source)
    print("DIST " + " ".join("inf" if d == float("inf") else str(d) for d in dist))
    print("ECHO")
    print(f"{kind} {n} {m}")
    for u, v, w in edges:
        print(u, v, w)
    print("END")

main()
''',
    "max-flow": '''\
import sys

def maximum_flow(n, arcs, s, t):
    # arcs: list of (u, v, capacity); return (value, per-arc flow list).
    # TODO: repeat: find an augmenting path in the residual graph and
    # push its bottleneck, until no path remains.
    raise NotImplementedError

def main():
    lines = sys.stdin.read().splitlines()
    _task, _tag, s, t = lines[0].split()
    kind, n, m = lines[1].split()
    n, m = int(n), int(m)
    arcs = []
    for ln in lines[2:2 + m]:
        parts = ln.split()
        arcs.append((int(parts[0]), int(parts[1]), int(parts[2]) if len(parts) > 2 else 1))
    value, flows = maximum_flow(n, arcs, int(s), int(t))
    print(f"VALUE {value}")
    print("FLOWS " + " ".join(str(f) for f in flows))
    print("ECHO")
    print(f"{kind} {n} {m}")
    for u, v, w in arcs:
        print(u, v, w)
    print("END")

main()
''',
}

# visible teaching graphs per lab
UNIT_CONNECTED = "U 4 4\n0 1 1\n1 2 1\n2 3 1\n0 3 1"
WEIGHTED_SMALL = "U 5 7\n0 1 4\n0 2 8\n1 2 2\n1 3 7\n2 4 1\n3 4 3\n0 4 9"
PATH_WEIGHTED = "U 4 4\n0 1 2\n1 2 2\n2 3 2\n0 2 5"
TRIANGLE_PLUS = "U 6 5\n0 1 1\n1 2 1\n0 2 1\n3 4 1\n1 3 1"
FLOW_TEXTBOOK = "D 4 5\n0 1 3\n0 2 2\n1 2 1\n1 3 2\n2 3 3"


def visible(name, graph, checker, expected, feedback, args=()):
    return TestCase(
        name=name,
        graph=graph,
        args=list(args),
        visibility="visible",
        checker=checker,
        feedback=feedback,
        expected=expected,
    )


def board_effects_test(task, graph, args=()):
    return TestCase(
        name="board-effects",
        graph=graph,
        args=list(args),
        visibility="hidden",
        checker="board-effects",
        feedback="the input graph must not be modified",
    )


def build_max_degree():
    g1 = UNIT_CONNECTED
    g2 = "U 6 7\n0 1 1\n0 2 1\n0 3 1\n0 4 1\n1 2 1\n3 4 1\n4 5 1"
    tests = [
        visible("cycle", g1, "max-degree",
                {"max_degree": degree_stats(parse_graph(g1))[0]},
                "every vertex of a cycle has the same degree"),
        visible("hub", g2, "max-degree",
                {"max_degree": degree_stats(parse_graph(g2))[0]},
                "look for the busiest vertex"),
        *limit_case_suite("max-degree"),
        board_effects_test("max-degree", g2),
    ]
    return LabSpec("max-degree", "max-degree", tests, SKELETONS["max-degree"], REFERENCE)


def build_components():
    tests = [
        visible("triangle-plus-edge", TRIANGLE_PLUS, "components",
                {"components": connected_components(parse_graph(TRIANGLE_PLUS))[0]},
                "count maximal connected pieces, isolated vertices included"),
        visible("one-cycle", UNIT_CONNECTED, "components",
                {"components": connected_components(parse_graph(UNIT_CONNECTED))[0]},
                "a connected graph has exactly one component"),
        *limit_case_suite("components"),
        board_effects_test("components", TRIANGLE_PLUS),
    ]
    return LabSpec("components", "components", tests, SKELETONS["components"], REFERENCE)


def build_mst():
    unit = UNIT_CONNECTED
    weighted = WEIGHTED_SMALL
    light_cycle = "U 4 5\n0 1 1\n1 2 1\n0 2 1\n2 3 9\n1 3 8"
    tests = [
        visible("unit-weights", unit, "mst",
                {"weight": forest_weight(parse_graph(unit), kruskal(parse_graph(unit))[0])},
                "with unit weights, any spanning tree is minimal: first return a tree"),
        visible("weighted", weighted, "mst",
                {"weight": forest_weight(parse_graph(weighted), kruskal(parse_graph(weighted))[0])},
                "now the weights matter: check the total"),
        TestCase("light-cycle-trap", light_cycle, visibility="hidden", checker="mst",
                 feedback="the cheapest edges may close a cycle"),
        *limit_case_suite("mst"),
        board_effects_test("mst", weighted),
    ]
    return LabSpec("mst", "mst", tests, SKELETONS["mst"], REFERENCE)


def build_shortest_path():
    g = PATH_WEIGHTED
    dist, _t = dijkstra(parse_graph(g), 0)
    tests = [
        visible("shortcut-trap", g, "shortest-path",
                {"distances": [distance_to_json(d) for d in dist]},
                "the direct edge is not always the shortest route", args=["0"]),
        *limit_case_suite("shortest-path"),
        board_effects_test("shortest-path", g, args=["0"]),
    ]
    return LabSpec("shortest-path", "shortest-path", tests, SKELETONS["shortest-path"], REFERENCE)


def build_max_flow():
    g = FLOW_TEXTBOOK
    net = FlowNetwork(parse_graph(g), 0, 3)
    tests = [
        visible("two-route", g, "max-flow",
                {"value": max_flow(net).value},
                "push along augmenting paths until none remains", args=["0", "3"]),
        *limit_case_suite("max-flow"),
        board_effects_test("max-flow", g, args=["0", "3"]),
    ]
    return LabSpec("max-flow", "max-flow", tests, SKELETONS["max-flow"], REFERENCE)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for build in (build_max_degree, build_components, build_mst, build_shortest_path, build_max_flow):
        spec = build()
        path = OUT / f"{spec.lab_id}.json"
        path.write_text(spec.to_json(), encoding="utf-8")
        print(f"wrote {path} ({len(spec.tests)} tests)")


if __name__ == "__main__":
    main()
