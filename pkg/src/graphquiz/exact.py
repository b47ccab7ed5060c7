"""Exact solvers for the structural question kinds.

Everything here is desk-scale and carries a hard size limit: a grading
oracle must be exactly right, and at quiz sizes exhaustive search is
cheap enough that no heuristic is worth its uncertainty.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Graph, degree_stats
from .traversal import connected_components

HAMILTONIAN_LIMIT = 15
CHROMATIC_LIMIT = 16
PLANARITY_LIMIT = 12
PATTERN_LIMIT = 8

EULER_CIRCUIT = "circuit"
EULER_PATH = "path"
EULER_NONE = "none"


@dataclass(frozen=True)
class EulerianResult:
    classification: str  # circuit | path | none
    endpoints: tuple[int, int] | None = None
    walk: tuple[int, ...] | None = None


def eulerian(g: Graph) -> EulerianResult:
    """Classify by the odd-degree criterion on the edge-support component
    and return a Hierholzer witness walk when one exists.

    Edges spread over two or more components mean no walk; an edgeless
    graph counts as a (trivial, empty-walk) circuit.
    """
    if g.directed:
        raise ValueError("eulerian requires an undirected graph")
    if g.num_edges == 0:
        return EulerianResult(EULER_CIRCUIT, walk=())

    _max_deg, degrees = degree_stats(g)
    support = [v for v in range(g.num_vertices) if degrees[v] > 0]
    _count, labels = connected_components(g)
    if len({labels[v] for v in support}) > 1:
        return EulerianResult(EULER_NONE)

    odd = [v for v in support if degrees[v] % 2 == 1]
    if len(odd) == 0:
        start = support[0]
        return EulerianResult(EULER_CIRCUIT, walk=tuple(_hierholzer(g, start)))
    if len(odd) == 2:
        walk = tuple(_hierholzer(g, odd[0]))
        return EulerianResult(EULER_PATH, endpoints=(odd[0], odd[1]), walk=walk)
    return EulerianResult(EULER_NONE)


def _hierholzer(g: Graph, start: int) -> list[int]:
    """Edge-exhausting walk from start, smallest-id choices first."""
    unused: list[list[tuple[int, int]]] = [[] for _ in range(g.num_vertices)]
    for idx, (u, v, _w) in enumerate(g.edges):
        unused[u].append((v, idx))
        unused[v].append((u, idx))
    for row in unused:
        row.sort(reverse=True)  # pop() then yields smallest first
    used = [False] * g.num_edges

    stack = [start]
    walk: list[int] = []
    while stack:
        u = stack[-1]
        while unused[u] and used[unused[u][-1][1]]:
            unused[u].pop()
        if unused[u]:
            v, idx = unused[u].pop()
            used[idx] = True
            stack.append(v)
        else:
            walk.append(stack.pop())
    walk.reverse()
    return walk


def hamiltonian(g: Graph, want: str = "path") -> list[int] | None:
    """Exact backtracking witness for a Hamiltonian path or circuit.

    The circuit witness lists each vertex once; the closing edge back to
    the start is implied.
    """
    if want not in ("path", "circuit"):
        raise ValueError(f"want must be 'path' or 'circuit', got {want!r}")
    n = g.num_vertices
    if n > HAMILTONIAN_LIMIT:
        raise ValueError(f"graph too large for exact search (n={n} > {HAMILTONIAN_LIMIT})")
    if n == 0:
        return None
    if n == 1:
        return [0] if want == "path" else None

    adj = [set(g.neighbors(v)) for v in range(n)]

    def extend(path: list[int], visited: set[int]) -> list[int] | None:
        if len(path) == n:
            if want == "path" or path[0] in adj[path[-1]]:
                return path[:]
            return None
        for v in sorted(adj[path[-1]]):
            if v not in visited:
                path.append(v)
                visited.add(v)
                found = extend(path, visited)
                if found:
                    return found
                path.pop()
                visited.remove(v)
        return None

    starts = range(n) if want == "path" else [0]  # circuits may start anywhere
    for s in starts:
        found = extend([s], {s})
        if found:
            return found
    return None


def chromatic_number(g: Graph) -> tuple[int, list[int]]:
    """Exact minimum proper coloring via branch and bound.

    A greedy clique gives the lower bound; backtracking tries k colors for
    ascending k and returns (k, verified witness coloring).
    """
    if g.directed:
        raise ValueError("chromatic_number requires an undirected graph")
    n = g.num_vertices
    if n > CHROMATIC_LIMIT:
        raise ValueError(f"graph too large for exact search (n={n} > {CHROMATIC_LIMIT})")
    if n == 0:
        return 0, []

    adj = [set(g.neighbors(v)) for v in range(n)]
    by_degree = sorted(range(n), key=lambda v: (-len(adj[v]), v))

    clique: list[int] = []
    for v in by_degree:
        if all(v in adj[u] for u in clique):
            clique.append(v)
    lower = max(len(clique), 1)

    def try_k(k: int) -> list[int] | None:
        colors = [-1] * n

        def place(i: int) -> bool:
            if i == len(by_degree):
                return True
            v = by_degree[i]
            used = {colors[u] for u in adj[v] if colors[u] != -1}
            cap = min(k, max(colors[by_degree[j]] for j in range(i)) + 2) if i else 1
            for c in range(cap):  # skip color permutations: at most one new color
                if c not in used:
                    colors[v] = c
                    if place(i + 1):
                        return True
                    colors[v] = -1
            return False

        return colors[:] if place(0) else None

    k = lower
    while True:
        witness = try_k(k)
        if witness is not None:
            for u, v, _w in g.edges:
                assert witness[u] != witness[v]
            return k, witness
        k += 1


def is_planar(g: Graph) -> bool:
    """Exact planarity for small graphs.

    Quick rejection by the Euler bound m <= 3n-6 (n >= 3 only — below
    that every graph is planar), then an exhaustive search for a K5 or
    K3,3 subdivision decides.
    """
    if g.directed:
        raise ValueError("is_planar requires an undirected graph")
    n = g.num_vertices
    if n > PLANARITY_LIMIT:
        raise ValueError(f"graph too large for exact search (n={n} > {PLANARITY_LIMIT})")
    m = g.num_edges
    if n < 5:
        return True  # K5 is the smallest nonplanar graph
    if n >= 3 and m > 3 * n - 6:
        return False
    adj = [set(g.neighbors(v)) for v in range(n)]
    if _has_k5_subdivision(adj):
        return False
    if _has_k33_subdivision(adj):
        return False
    return True


def _disjoint_paths(adj, branch: tuple[int, ...], pairs: list[tuple[int, int]]) -> bool:
    """Can all pairs be joined by internally vertex-disjoint paths avoiding
    the branch vertices?  Straight backtracking over path choices."""
    free = set(range(len(adj))) - set(branch)

    def paths_between(a: int, b: int, avail: set[int]):
        # yields the sets of interior vertices of simple a-b paths
        if b in adj[a]:
            yield frozenset()
        stack = [(a, [], avail)]
        while stack:
            u, interior, rest = stack.pop()
            for v in sorted(adj[u]):
                if v == b and interior:
                    yield frozenset(interior)
                elif v in rest:
                    stack.append((v, interior + [v], rest - {v}))

    def solve(i: int, avail: set[int]) -> bool:
        if i == len(pairs):
            return True
        a, b = pairs[i]
        for interior in paths_between(a, b, avail):
            if solve(i + 1, avail - interior):
                return True
        return False

    return solve(0, free)


def _has_k5_subdivision(adj) -> bool:
    n = len(adj)
    candidates = [v for v in range(n) if len(adj[v]) >= 4]
    for branch in combinations(candidates, 5):
        pairs = [(a, b) for a, b in combinations(branch, 2)]
        if _disjoint_paths(adj, branch, pairs):
            return True
    return False


def _has_k33_subdivision(adj) -> bool:
    n = len(adj)
    candidates = [v for v in range(n) if len(adj[v]) >= 3]
    for six in combinations(candidates, 6):
        for left in combinations(six, 3):
            if six[0] not in left:
                continue  # fix the first vertex on the left to halve the work
            right = tuple(v for v in six if v not in left)
            pairs = [(a, b) for a in left for b in right]
            if _disjoint_paths(adj, six, pairs):
                return True
    return False


def contains_subgraph(g: Graph, pattern: Graph) -> tuple[bool, dict[int, int] | None]:
    """Subgraph isomorphism (not induced): an injective vertex mapping that
    embeds every pattern edge into g.  Returns (found, mapping)."""
    if pattern.num_vertices > PATTERN_LIMIT:
        raise ValueError(
            f"pattern too large (n={pattern.num_vertices} > {PATTERN_LIMIT})"
        )
    if pattern.directed != g.directed:
        raise ValueError("pattern and graph must agree on directedness")
    pn, gn = pattern.num_vertices, g.num_vertices
    if pn > gn or pattern.num_edges > g.num_edges:
        return False, None

    if g.directed:
        g_has = {(u, v) for u, v, _w in g.edges}
        p_edges = [(u, v) for u, v, _w in pattern.edges]
    else:
        g_has = set()
        for u, v, _w in g.edges:
            g_has.add((u, v))
            g_has.add((v, u))
        p_edges = [(u, v) for u, v, _w in pattern.edges]

    p_deg = [0] * pn
    for u, v in p_edges:
        p_deg[u] += 1
        p_deg[v] += 1
    g_deg = [0] * gn
    for u, v, _w in g.edges:
        g_deg[u] += 1
        g_deg[v] += 1
    # most-constrained pattern vertices first
    p_order = sorted(range(pn), key=lambda v: (-p_deg[v], v))

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def place(i: int) -> bool:
        if i == pn:
            return True
        pv = p_order[i]
        for gv in range(gn):
            if gv in used or g_deg[gv] < p_deg[pv]:
                continue
            ok = True
            for a, b in p_edges:
                if a == pv and b in mapping and (gv, mapping[b]) not in g_has:
                    ok = False
                    break
                if b == pv and a in mapping and (mapping[a], gv) not in g_has:
                    ok = False
                    break
            if ok:
                mapping[pv] = gv
                used.add(gv)
                if place(i + 1):
                    return True
                del mapping[pv]
                used.remove(gv)
        return False

    if place(0):
        return True, dict(sorted(mapping.items()))
    return False, None
