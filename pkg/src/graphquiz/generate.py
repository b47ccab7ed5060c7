"""Seeded generation of question instances with ground-truth answer keys.

Every instance is reproducible from (kind, master seed, ordinal): one
generation attempt draws a child seed, builds a graph, retries while the
kind's prerequisites fail, and computes the answer key with the reference
algorithms.  Banks dedup by a content hash over kind + graph + prompt (not
the seed), so two seeds that land on the same question collapse.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace

from . import __version__
from .core import Graph, graph_from_dict, graph_to_dict, serialize_graph, complete_graph, degree_stats, complement
from .exact import chromatic_number, contains_subgraph, eulerian, hamiltonian, is_planar
from .flow import (
    FlowNetwork,
    augmenting_path,
    is_valid_flow,
    max_flow,
    path_bottleneck,
    push_along,
    residual_graph,
    zero_flow,
)
from .mst import kruskal, prim
from .paths import dijkstra, bellman_ford, dag_shortest_paths, distance_to_json
from .rng import SplitMix64, child_seed
from .traversal import bfs, connected_components, dfs, topological_sort

TRACE_KINDS = (
    "dijkstra",
    "bellman-ford",
    "kruskal",
    "prim",
    "dag-shortest-path",
    "topological-order",
    "ff-iteration",
    "flow-validity",
    "residual-graph",
    "bfs",
    "dfs",
)

STRUCTURAL_KINDS = (
    "planarity",
    "connectivity-count",
    "chromatic-number",
    "subgraph-presence",
    "degree-question",
    "eulerian-classification",
)

TF_CATEGORIES = ("complete", "degree", "paths", "trees", "connectivity", "flow")

ALL_KINDS = TRACE_KINDS + STRUCTURAL_KINDS + tuple(f"tf-{c}" for c in TF_CATEGORIES)

ACCEPT_EXACT = "exact"
ACCEPT_ANY_TOPO = "any-valid-topological-order"
ACCEPT_ANY_MIN_TREE = "any-minimum-tree"
ACCEPT_ANY_WITNESS = "any-witness"

_TRACE_N_RANGE = (5, 8)
_STRUCTURAL_N_RANGE = (6, 12)

MAX_ATTEMPTS = 1000


class GenerationError(RuntimeError):
    """Raised when the attempt budget runs out (infeasible parameters)."""


@dataclass(frozen=True)
class GenParams:
    """Knobs for one generation stream.

    n_range defaults per kind family (trace questions 5..8, structural
    6..12).  Weights are positive; connectivity (when on) is achieved by
    laying a random spanning tree before density sampling.
    """

    seed: int
    n_range: tuple[int, int] | None = None
    weight_range: tuple[int, int] = (1, 9)
    density: float = 0.4
    connected: bool = True

    def __post_init__(self):
        if self.n_range is not None and self.n_range[0] > self.n_range[1]:
            raise ValueError("n_range minimum exceeds maximum")
        if self.weight_range[0] > self.weight_range[1]:
            raise ValueError("weight_range minimum exceeds maximum")
        if self.weight_range[0] <= 0:
            raise ValueError("weights must be positive integers")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")

    def resolved_n_range(self, kind: str) -> tuple[int, int]:
        if self.n_range is not None:
            return self.n_range
        return _STRUCTURAL_N_RANGE if kind in STRUCTURAL_KINDS else _TRACE_N_RANGE


@dataclass
class QuestionInstance:
    """One generated exercise with its canonical answer key.

    ``prompt`` holds the structured fields the UI/exporters render,
    including the roles the kind requires (source/sink/root/flows/...).
    ``acceptance`` names the predicate the grader applies; the canonical
    key always satisfies it.
    """

    id: str
    kind: str
    seed: int
    graph: Graph | None
    prompt: dict
    answer_key: dict
    acceptance: str
    language: str = "en"

    def to_dict(self, include_key: bool = True) -> dict:
        d = {
            "id": self.id,
            "kind": self.kind,
            "seed": self.seed,
            "graph": graph_to_dict(self.graph) if self.graph is not None else None,
            "prompt": self.prompt,
            "language": self.language,
        }
        if include_key:
            d["answer_key"] = self.answer_key
            d["acceptance"] = self.acceptance
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "QuestionInstance":
        return cls(
            id=d["id"],
            kind=d["kind"],
            seed=d["seed"],
            graph=graph_from_dict(d["graph"]) if d.get("graph") is not None else None,
            prompt=d["prompt"],
            answer_key=d.get("answer_key", {}),
            acceptance=d.get("acceptance", ACCEPT_EXACT),
            language=d.get("language", "en"),
        )


@dataclass
class QuestionBank:
    instances: list[QuestionInstance]
    metadata: dict = field(default_factory=dict)

    def to_dict(self, include_keys: bool = True) -> dict:
        return {
            "metadata": self.metadata,
            "instances": [q.to_dict(include_key=include_keys) for q in self.instances],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "QuestionBank":
        return cls(
            instances=[QuestionInstance.from_dict(q) for q in d["instances"]],
            metadata=d.get("metadata", {}),
        )


def content_hash(kind: str, graph: Graph | None, prompt: dict) -> str:
    """Identity of a question: what the student sees, never how it was found."""
    payload = json.dumps(
        {
            "kind": kind,
            "graph": serialize_graph(graph) if graph is not None else None,
            "prompt": prompt,
        },
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def _make_instance(kind, seed, graph, prompt, answer_key, acceptance, language="en"):
    return QuestionInstance(
        id=content_hash(kind, graph, prompt),
        kind=kind,
        seed=seed,
        graph=graph,
        prompt=prompt,
        answer_key=answer_key,
        acceptance=acceptance,
        language=language,
    )


# -- random graph builders ----------------------------------------------------

def gen_graph(p: GenParams, kind: str = "kruskal") -> Graph:
    """Seeded undirected graph respecting the connectivity requirement."""
    rng = SplitMix64(p.seed)
    return _gen_undirected(rng, p, kind)


def _gen_undirected(rng: SplitMix64, p: GenParams, kind: str, n: int | None = None) -> Graph:
    if n is None:
        n = rng.randint(*p.resolved_n_range(kind))
    pairs: set[tuple[int, int]] = set()
    if p.connected:
        for v in range(1, n):
            u = rng.randrange(v)
            pairs.add((u, v))
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in pairs and rng.chance(p.density):
                pairs.add((i, j))
    ordered = sorted(pairs)
    lo, hi = p.weight_range
    edges = tuple((u, v, rng.randint(lo, hi)) for u, v in ordered)
    return Graph(n, edges)


def _gen_dag(rng: SplitMix64, p: GenParams, kind: str) -> tuple[Graph, int]:
    """Random DAG plus a source (the first vertex of the hidden order)."""
    n = rng.randint(*p.resolved_n_range(kind))
    perm = list(range(n))
    rng.shuffle(perm)
    arcs: list[tuple[int, int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.chance(p.density):
                arcs.append((perm[i], perm[j]))
    arcs.sort()
    lo, hi = p.weight_range
    edges = tuple((u, v, rng.randint(lo, hi)) for u, v in arcs)
    return Graph(n, edges, directed=True), perm[0]


def _gen_directed(rng: SplitMix64, p: GenParams, kind: str) -> Graph:
    n = rng.randint(*p.resolved_n_range(kind))
    arcs: list[tuple[int, int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.chance(p.density):
                arcs.append((i, j) if rng.chance(0.5) else (j, i))
    arcs.sort()
    lo, hi = p.weight_range
    edges = tuple((u, v, rng.randint(lo, hi)) for u, v in arcs)
    return Graph(n, edges, directed=True)


def _gen_network(rng: SplitMix64, p: GenParams, kind: str) -> FlowNetwork | None:
    """Network with source 0 and sink n-1; None when it carries no flow."""
    n = rng.randint(*p.resolved_n_range(kind))
    s, t = 0, n - 1
    arcs: list[tuple[int, int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            if not rng.chance(p.density):
                continue
            if i == s or j == t:
                arcs.append((i, j))
            elif j == s or i == t:
                arcs.append((j, i))
            else:
                arcs.append((i, j) if rng.chance(0.5) else (j, i))
    arcs.sort()
    lo, hi = p.weight_range
    edges = tuple((u, v, rng.randint(lo, hi)) for u, v in arcs)
    try:
        net = FlowNetwork(Graph(n, edges, directed=True), s, t)
    except ValueError:
        return None
    if max_flow(net).value == 0:
        return None
    return net


def _adjust_parity(rng: SplitMix64, g: Graph, target_odd: int) -> Graph | None:
    """Toggle edges between odd-degree vertices until exactly target_odd
    remain; None when the result breaks connectivity of the edge support."""
    n = g.num_vertices
    pairs = {(min(u, v), max(u, v)) for u, v, _w in g.edges}
    weights = {(min(u, v), max(u, v)): w for u, v, w in g.edges}
    degrees = [0] * n
    for u, v in pairs:
        degrees[u] += 1
        degrees[v] += 1

    odd = [v for v in range(n) if degrees[v] % 2 == 1]
    rng.shuffle(odd)
    while len(odd) > target_odd:
        a, b = odd.pop(), odd.pop()  # toggling their edge flips both to even
        key = (min(a, b), max(a, b))
        if key in pairs:
            pairs.remove(key)
        else:
            pairs.add(key)
            weights[key] = 1

    edges = tuple((u, v, weights.get((u, v), 1)) for u, v in sorted(pairs))
    fixed = Graph(n, edges)
    _max_deg, seq = degree_stats(fixed)
    if sum(1 for d in seq if d % 2 == 1) != target_odd:
        return None
    if fixed.num_edges == 0:
        return fixed if target_odd == 0 else None
    support = [v for v in range(n) if seq[v] > 0]
    _count, labels = connected_components(fixed)
    if len({labels[v] for v in support}) != 1:
        return None
    return fixed


# -- per-kind builders ---------------------------------------------------------

def _build_trace_instance(kind: str, p: GenParams, ordinal: int, seed: int) -> QuestionInstance | None:
    rng = SplitMix64(seed)

    if kind in ("dijkstra", "bellman-ford"):
        if kind == "dijkstra":
            g = _gen_undirected(rng, p, kind)
            source = rng.randrange(g.num_vertices)
            dist, _t = dijkstra(g, source)
        else:
            g = _gen_directed(rng, p, kind)
            source = rng.randrange(g.num_vertices)
            if not any(u == source for u, _v, _w in g.edges):
                return None
            dist, cycle = bellman_ford(g, source)
            if cycle is not None:
                return None
        key = {"distances": [distance_to_json(d) for d in dist]}
        return _make_instance(kind, seed, g, {"source": source}, key, ACCEPT_EXACT)

    if kind == "bfs":
        g = _gen_undirected(rng, p, kind)
        root = rng.randrange(g.num_vertices)
        trace, _dist = bfs(g, root)
        key = {"order": [s.data["vertex"] for s in trace.steps]}
        return _make_instance(kind, seed, g, {"root": root}, key, ACCEPT_EXACT)

    if kind == "dfs":
        g = _gen_undirected(rng, p, kind)
        root = rng.randrange(g.num_vertices)
        phase = "prefix" if rng.chance(0.5) else "postfix"
        trace = dfs(g, root, phase)
        key = {"order": [s.data["vertex"] for s in trace.steps]}
        return _make_instance(kind, seed, g, {"root": root, "phase": phase}, key, ACCEPT_EXACT)

    if kind == "kruskal":
        g = _gen_undirected(rng, p, kind)
        accepted, _t = kruskal(g)
        key = {"edges": [[g.edges[i][0], g.edges[i][1]] for i in accepted]}
        return _make_instance(kind, seed, g, {}, key, ACCEPT_ANY_MIN_TREE)

    if kind == "prim":
        g = _gen_undirected(rng, p, kind)
        if connected_components(g)[0] != 1:
            return None  # prim only spans the start's component
        start = rng.randrange(g.num_vertices)
        chosen, _t = prim(g, start)
        key = {"edges": [[g.edges[i][0], g.edges[i][1]] for i in chosen]}
        return _make_instance(kind, seed, g, {"start": start}, key, ACCEPT_ANY_MIN_TREE)

    if kind == "topological-order":
        g, _source = _gen_dag(rng, p, kind)
        if g.num_edges < g.num_vertices - 2:
            return None  # too few constraints makes the menu trivial
        order, _cycle = topological_sort(g)
        return _make_instance(kind, seed, g, {}, {"order": order}, ACCEPT_ANY_TOPO)

    if kind == "dag-shortest-path":
        g, source = _gen_dag(rng, p, kind)
        if not any(u == source for u, _v, _w in g.edges):
            return None
        order, _cycle = topological_sort(g)
        dist, _t = dag_shortest_paths(g, source)
        key = {
            "order": order,
            "distances": [distance_to_json(dist[v]) for v in order],
        }
        return _make_instance(kind, seed, g, {"source": source}, key, ACCEPT_ANY_TOPO)

    if kind in ("ff-iteration", "flow-validity", "residual-graph"):
        net = _gen_network(rng, p, kind)
        if net is None:
            return None
        result = max_flow(net)
        steps = result.trace.steps
        prompt_base = {"source": net.source, "sink": net.sink}

        if kind == "ff-iteration":
            prefix = rng.randrange(len(steps))  # strictly before the last push
            f = zero_flow(net)
            for st in steps[:prefix]:
                f = push_along(net, f, st.data["path"], st.data["bottleneck"])
            ok, _why = is_valid_flow(net, f)
            assert ok
            path = augmenting_path(net, f)
            assert path is not None
            key = {"path": path, "bottleneck": path_bottleneck(net, f, path)}
            prompt = dict(prompt_base, flows=list(f))
            return _make_instance(kind, seed, net.graph, prompt, key, ACCEPT_ANY_WITNESS)

        prefix = rng.randrange(len(steps) + 1)
        f = zero_flow(net)
        for st in steps[:prefix]:
            f = push_along(net, f, st.data["path"], st.data["bottleneck"])

        if kind == "residual-graph":
            res = residual_graph(net, f)
            key = {"arcs": sorted([u, v, c] for u, v, c in res.edges)}
            prompt = dict(prompt_base, flows=list(f))
            return _make_instance(kind, seed, net.graph, prompt, key, ACCEPT_EXACT)

        # flow-validity: even ordinals show a valid flow, odd a corrupted one
        target_valid = ordinal % 2 == 0
        if not target_valid:
            f = _corrupt_flow(rng, net, f)
            if f is None:
                return None
        ok, _why = is_valid_flow(net, f)
        if ok != target_valid:
            return None
        prompt = dict(prompt_base, flows=list(f))
        return _make_instance(kind, seed, net.graph, prompt, {"valid": ok}, ACCEPT_EXACT)

    raise ValueError(f"unknown trace question kind {kind!r}")


def _corrupt_flow(rng: SplitMix64, net: FlowNetwork, f: list[int]) -> list[int] | None:
    arcs = list(range(len(f)))
    rng.shuffle(arcs)
    for idx in arcs:
        bumped = list(f)
        bumped[idx] += rng.randint(1, 2)
        if not is_valid_flow(net, bumped)[0]:
            return bumped
    # guaranteed fallback: overflow one arc outright
    if not arcs:
        return None
    bumped = list(f)
    _u, _v, cap = net.arcs[arcs[0]]
    bumped[arcs[0]] = cap + 1
    return bumped


_PATTERNS: dict[str, Graph] = {
    "triangle": Graph(3, ((0, 1), (1, 2), (0, 2))),
    "C4": Graph(4, ((0, 1), (1, 2), (2, 3), (3, 0))),
    "C5": Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0))),
    "K4": complete_graph(4),
    "P4": Graph(4, ((0, 1), (1, 2), (2, 3))),
    "K1,3": Graph(4, ((0, 1), (0, 2), (0, 3))),
    "K3,3-e": Graph(6, tuple((i, j) for i in range(3) for j in range(3, 6))[:-1]),
}


def _build_structural_instance(kind: str, p: GenParams, ordinal: int, seed: int) -> QuestionInstance | None:
    rng = SplitMix64(seed)
    target_yes = ordinal % 2 == 0

    if kind == "planarity":
        g = _gen_undirected(rng, p, kind)
        planar = is_planar(g)
        if planar != target_yes:
            return None
        return _make_instance(kind, seed, g, {}, {"planar": planar}, ACCEPT_EXACT)

    if kind == "connectivity-count":
        scattered = replace(p, connected=False)
        g = _gen_undirected(rng, scattered, kind)
        count, _labels = connected_components(g)
        return _make_instance(kind, seed, g, {}, {"components": count}, ACCEPT_EXACT)

    if kind == "chromatic-number":
        g = _gen_undirected(rng, p, kind)
        k, _witness = chromatic_number(g)
        return _make_instance(kind, seed, g, {}, {"chromatic_number": k}, ACCEPT_EXACT)

    if kind == "subgraph-presence":
        name = rng.choice(sorted(_PATTERNS))
        pattern = _PATTERNS[name]
        g = _gen_undirected(rng, p, kind)
        found, _mapping = contains_subgraph(g, pattern)
        if found != target_yes:
            return None
        prompt = {"pattern": graph_to_dict(pattern), "pattern_name": name}
        return _make_instance(kind, seed, g, prompt, {"contains": found}, ACCEPT_EXACT)

    if kind == "degree-question":
        g = _gen_undirected(rng, p, kind)
        max_deg, _seq = degree_stats(g)
        return _make_instance(kind, seed, g, {}, {"max_degree": max_deg}, ACCEPT_EXACT)

    if kind == "eulerian-classification":
        target = ("circuit", "path", "none")[ordinal % 3]
        g = _gen_undirected(rng, p, kind)
        if target in ("circuit", "path"):
            g = _adjust_parity(rng, g, 0 if target == "circuit" else 2)
            if g is None:
                return None
        classification = eulerian(g).classification
        if classification != target:
            return None
        return _make_instance(kind, seed, g, {}, {"classification": classification}, ACCEPT_EXACT)

    raise ValueError(f"unknown structural question kind {kind!r}")


# -- true/false templates -------------------------------------------------------

def _tf_complete(rng: SplitMix64, target: bool):
    pick = rng.randrange(3)
    if pick == 0:
        n = rng.randint(4, 9)
        true_m = complete_graph(n).num_edges
        m = true_m if target else true_m + rng.choice([-2, -1, 1, 2])
        return (
            f"The complete graph K_{n} has exactly {m} edges.",
            f"Le graphe complet K_{n} possède exactement {m} arêtes.",
            m == true_m,
        )
    if pick == 1:
        n = rng.randint(4, 9)
        true_d = degree_stats(complete_graph(n))[0]
        d = true_d if target else true_d + rng.choice([-1, 1])
        return (
            f"In K_{n}, every vertex has degree {d}.",
            f"Dans K_{n}, chaque sommet est de degré {d}.",
            d == true_d,
        )
    n = rng.randint(3, 6) if target else 2
    found = contains_subgraph(complete_graph(n), _PATTERNS["triangle"])[0]
    return (
        f"K_{n} contains a triangle.",
        f"K_{n} contient un triangle.",
        found,
    )


def _tf_degree(rng: SplitMix64, target: bool):
    pick = rng.randrange(3)
    if pick == 0:
        n = rng.randint(4, 9)
        max_possible = degree_stats(complete_graph(n))[0]
        d = max_possible if target else n
        return (
            f"A simple graph on {n} vertices can contain a vertex of degree {d}.",
            f"Un graphe simple à {n} sommets peut contenir un sommet de degré {d}.",
            d <= max_possible,
        )
    if pick == 1:
        g = _gen_undirected(rng, GenParams(seed=0, n_range=(4, 7)), "degree-question")
        total = sum(degree_stats(g)[1])
        s = total if target else total + 1
        return (
            f"Some graph has a degree sequence summing to {s}.",
            f"Il existe un graphe dont la somme des degrés vaut {s}.",
            s % 2 == 0,
        )
    n = rng.randint(4, 8)
    cycle = Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
    true_d = degree_stats(cycle)[0]
    d = true_d if target else true_d + rng.choice([-1, 1])
    return (
        f"The maximum degree of the cycle C_{n} is {d}.",
        f"Le degré maximum du cycle C_{n} est {d}.",
        d == true_d,
    )


def _tf_paths(rng: SplitMix64, target: bool):
    pick = rng.randrange(3)
    if pick == 0:
        n = rng.randint(2, 7)
        path = Graph(n, tuple((i, i + 1) for i in range(n - 1)))
        has = eulerian(path).classification != "none"
        claim_circuit = not target
        if claim_circuit:
            verdict = eulerian(path).classification == "circuit"
            return (
                f"The path graph P_{n} has an Eulerian circuit.",
                f"Le graphe chemin P_{n} possède un circuit eulérien.",
                verdict,
            )
        return (
            f"The path graph P_{n} has an Eulerian path.",
            f"Le graphe chemin P_{n} possède un chemin eulérien.",
            has,
        )
    if pick == 1:
        if target:
            n = rng.randint(4, 8)
            k = rng.randint(3, n)
        else:
            n = rng.randint(4, 7)
            k = rng.randint(n + 1, 8)
        cycle = Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
        path = Graph(k, tuple((i, i + 1) for i in range(k - 1)))
        found = contains_subgraph(cycle, path)[0]
        return (
            f"C_{n} contains P_{k} as a subgraph.",
            f"C_{n} contient P_{k} comme sous-graphe.",
            found,
        )
    n = rng.randint(3, 6) if target else 2
    has = hamiltonian(complete_graph(n), "circuit") is not None
    return (
        f"K_{n} has a Hamiltonian circuit.",
        f"K_{n} possède un circuit hamiltonien.",
        has,
    )


def _tf_trees(rng: SplitMix64, target: bool):
    pick = rng.randrange(3)
    if pick == 0:
        n = rng.randint(3, 9)
        tree = _gen_undirected(rng, GenParams(seed=0, n_range=(n, n), density=0.0), "kruskal")
        true_m = tree.num_edges
        m = true_m if target else true_m + rng.choice([-1, 1])
        return (
            f"A tree on {n} vertices has exactly {m} edges.",
            f"Un arbre à {n} sommets possède exactement {m} arêtes.",
            m == true_m,
        )
    if pick == 1:
        n = rng.randint(4, 8)
        m = n if target else n - 1
        return (
            f"Every connected graph on {n} vertices with {m} edges contains a cycle.",
            f"Tout graphe connexe à {n} sommets et {m} arêtes contient un cycle.",
            m > n - 1,
        )
    n = rng.randint(3, 7)
    if target:
        tree = _gen_undirected(rng, GenParams(seed=0, n_range=(n, n), density=0.0), "kruskal")
        always_splits = all(
            connected_components(Graph(n, tuple(e for j, e in enumerate(tree.edges) if j != i)))[0] == 2
            for i in range(tree.num_edges)
        )
        return (
            f"Removing any single edge from a tree on {n} vertices disconnects it.",
            f"Retirer n'importe quelle arête d'un arbre à {n} sommets le déconnecte.",
            always_splits,
        )
    cycle = Graph(n, tuple((i, (i + 1) % n) for i in range(n)))
    splits = any(
        connected_components(Graph(n, tuple(e for j, e in enumerate(cycle.edges) if j != i)))[0] > 1
        for i in range(cycle.num_edges)
    )
    return (
        f"Removing some single edge of the cycle C_{n} disconnects it.",
        f"Retirer une arête du cycle C_{n} peut le déconnecter.",
        splits,
    )


def _tf_connectivity(rng: SplitMix64, target: bool):
    pick = rng.randrange(3)
    if pick == 0:
        n = rng.randint(4, 9)
        m = n - 1 if target else n - 2
        if target:
            witness = _gen_undirected(rng, GenParams(seed=0, n_range=(n, n), density=0.0), "kruskal")
            assert connected_components(witness)[0] == 1 and witness.num_edges == m
        return (
            f"A graph on {n} vertices with {m} edges can be connected.",
            f"Un graphe à {n} sommets et {m} arêtes peut être connexe.",
            m >= n - 1,
        )
    if pick == 1:
        n = rng.randint(3, 9)
        true_c = connected_components(Graph(n))[0]
        c = true_c if target else true_c + rng.choice([-1, 1])
        return (
            f"The edgeless graph on {n} vertices has {c} connected components.",
            f"Le graphe sans arête à {n} sommets a {c} composantes connexes.",
            c == true_c,
        )
    n = rng.randint(3, 7)
    path_edges = tuple((i, i + 1) for i in range(n - 1))
    if target:
        # delete an endpoint: the rest of the path stays connected
        rest = Graph(n - 1, tuple((u - 1, v - 1) for u, v, _w in Graph(n, path_edges).edges if u != 0 and v != 0))
        still = connected_components(rest)[0] == 1
        return (
            f"Deleting an endpoint of the path P_{n} keeps it connected.",
            f"Supprimer une extrémité du chemin P_{n} le laisse connexe.",
            still,
        )
    mid = n // 2
    kept = [v for v in range(n) if v != mid]
    remap = {v: i for i, v in enumerate(kept)}
    rest = Graph(
        n - 1,
        tuple((remap[u], remap[v]) for u, v, _w in Graph(n, path_edges).edges if mid not in (u, v)),
    )
    still = connected_components(rest)[0] == 1
    return (
        f"Deleting the middle vertex of the path P_{n} keeps it connected.",
        f"Supprimer le sommet central du chemin P_{n} le laisse connexe.",
        still,
    )


def _tf_flow(rng: SplitMix64, target: bool):
    pick = rng.randrange(3)
    if pick == 0:
        c = rng.randint(2, 9)
        v = c if target else c + rng.randint(1, 3)
        net = FlowNetwork(Graph(2, ((0, 1, c),), directed=True), 0, 1)
        achievable = v <= max_flow(net).value
        return (
            f"In a network whose only arc has capacity {c}, a flow of value {v} exists.",
            f"Dans un réseau dont l'unique arc a une capacité de {c}, il existe un flot de valeur {v}.",
            achievable,
        )
    if pick == 1:
        c1, c2 = rng.randint(1, 9), rng.randint(1, 9)
        net = FlowNetwork(Graph(3, ((0, 1, c1), (1, 2, c2)), directed=True), 0, 2)
        true_v = max_flow(net).value
        v = true_v if target else true_v + rng.randint(1, 2)
        return (
            f"In the network s->a (capacity {c1}), a->t (capacity {c2}), the maximum flow value is {v}.",
            f"Dans le réseau s->a (capacité {c1}), a->t (capacité {c2}), la valeur du flot maximum est {v}.",
            v == true_v,
        )
    c = rng.randint(1, 9)
    net = FlowNetwork(Graph(2, ((0, 1, c),), directed=True), 0, 1)
    if target:
        ok, _why = is_valid_flow(net, [0])
        return (
            f"In a network with a single arc of capacity {c}, the zero flow is valid.",
            f"Dans un réseau avec un seul arc de capacité {c}, le flot nul est valide.",
            ok,
        )
    ok, _why = is_valid_flow(net, [c + 1])
    return (
        f"In a network with a single arc of capacity {c}, a flow assigning {c + 1} to the arc is valid.",
        f"Dans un réseau avec un seul arc de capacité {c}, un flot affectant {c + 1} à l'arc est valide.",
        ok,
    )


_TF_TEMPLATES = {
    "complete": _tf_complete,
    "degree": _tf_degree,
    "paths": _tf_paths,
    "trees": _tf_trees,
    "connectivity": _tf_connectivity,
    "flow": _tf_flow,
}


# -- public generators -----------------------------------------------------------

def _generate_once(kind: str, p: GenParams, ordinal: int, attempt: int, language: str) -> QuestionInstance | None:
    seed = child_seed(p.seed, kind, ordinal, attempt)
    if kind in TRACE_KINDS:
        return _build_trace_instance(kind, p, ordinal, seed)
    if kind in STRUCTURAL_KINDS:
        return _build_structural_instance(kind, p, ordinal, seed)
    if kind.startswith("tf-"):
        category = kind[3:]
        if category not in TF_CATEGORIES:
            raise ValueError(f"unknown true/false category {category!r}")
        rng = SplitMix64(seed)
        target = ordinal % 2 == 0
        en, fr, truth = _TF_TEMPLATES[category](rng, target)
        if truth != target:
            return None
        statement = en if language == "en" else fr
        prompt = {"statement": statement, "category": category}
        return _make_instance(kind, seed, None, prompt, {"truth": truth}, ACCEPT_EXACT, language)
    raise ValueError(f"unknown question kind {kind!r}")


def _retry(kind: str, p: GenParams, ordinal: int, language: str) -> QuestionInstance:
    for attempt in range(MAX_ATTEMPTS):
        inst = _generate_once(kind, p, ordinal, attempt, language)
        if inst is not None:
            return inst
    raise GenerationError(
        f"could not generate a {kind!r} instance within {MAX_ATTEMPTS} attempts; "
        "the parameters are likely infeasible"
    )


def gen_trace_question(kind: str, p: GenParams, ordinal: int = 0, language: str = "en") -> QuestionInstance:
    if kind not in TRACE_KINDS:
        raise ValueError(f"unknown trace question kind {kind!r}")
    return _retry(kind, p, ordinal, language)


def gen_structural_question(kind: str, p: GenParams, ordinal: int = 0, language: str = "en") -> QuestionInstance:
    if kind not in STRUCTURAL_KINDS:
        raise ValueError(f"unknown structural question kind {kind!r}")
    return _retry(kind, p, ordinal, language)


def gen_truefalse(category: str, seed: int, ordinal: int = 0, language: str = "en") -> QuestionInstance:
    if category not in TF_CATEGORIES:
        raise ValueError(f"unknown true/false category {category!r}")
    return _retry(f"tf-{category}", GenParams(seed=seed), ordinal, language)


def gen_batch(spec: list[tuple[str, GenParams, int]], language: str = "en") -> QuestionBank:
    """Exactly the requested number of pairwise-distinct instances per entry.

    Dedup is by content hash; retries draw fresh child seeds.  The whole
    bank is a pure function of the entries and their master seeds.
    """
    instances: list[QuestionInstance] = []
    seen: set[str] = set()
    for kind, params, count in spec:
        if count < 1:
            raise ValueError("count must be at least 1")
        if kind not in ALL_KINDS:
            raise ValueError(f"unknown question kind {kind!r}")
        budget = 100 * count
        produced = 0
        ordinal = 0
        attempts_left = budget
        while produced < count:
            inst = None
            attempt = 0
            while inst is None:
                if attempts_left == 0:
                    raise GenerationError(
                        f"exhausted {budget} attempts generating {count} distinct "
                        f"{kind!r} instances (got {produced})"
                    )
                attempts_left -= 1
                inst = _generate_once(kind, params, ordinal, attempt, language)
                attempt += 1
                if inst is not None and inst.id in seen:
                    inst = None
            seen.add(inst.id)
            instances.append(inst)
            produced += 1
            ordinal += 1
    return QuestionBank(
        instances=instances,
        metadata={
            "language": language,
            "generator_version": __version__,
            "generated_at": None,
            "entries": [[kind, count] for kind, _p, count in spec],
        },
    )
