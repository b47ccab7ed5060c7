"""Grading of structured quiz answers against acceptance predicates.

The grader never string-compares against the canonical key when a whole
class of answers is acceptable: valid topological orders are checked by
the validity predicate, minimum trees by the spanning-forest cascade plus
the oracle weight, augmenting paths by replaying them against the residual
graph.  Multi-part prompts earn the fraction of correct parts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import Graph
from .flow import FlowNetwork, is_valid_flow, path_bottleneck, residual_graph
from .generate import QuestionInstance
from .mst import OK, forest_weight, is_spanning_forest, kruskal
from .paths import INF, distance_from_json
from .traversal import is_valid_topological_order

PASS = "pass"
WRONG = "wrong-answer"
PROTOCOL_ERROR = "protocol-error"
TIMEOUT = "timeout"
CRASH = "crash"


@dataclass
class TestResult:
    name: str
    status: str  # pass | wrong-answer | protocol-error | timeout | crash
    feedback: str = ""
    weight: int = 1
    visibility: str = "visible"
    detail: str = ""  # inputs/expected values; redacted for hidden tests

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class GradeReport:
    results: list[TestResult] = field(default_factory=list)
    modified_input: bool = False

    @property
    def mark(self) -> Fraction:
        total = sum(r.weight for r in self.results)
        if total == 0:
            return Fraction(0)
        return Fraction(sum(r.weight for r in self.results if r.passed), total)

    def to_dict(self, redact_hidden: bool = True) -> dict:
        entries = []
        for r in self.results:
            e = {"name": r.name, "status": r.status, "weight": r.weight,
                 "visibility": r.visibility}
            if redact_hidden and r.visibility == "hidden":
                entries.append(e)  # outcome only: no feedback, no detail
                continue
            if r.feedback:
                e["feedback"] = r.feedback
            if r.detail:
                e["detail"] = r.detail
            entries.append(e)
        return {
            "results": entries,
            "mark": str(self.mark),
            "mark_value": float(self.mark),
            "modified_input": self.modified_input,
        }


class _Shape(Exception):
    """Submitted answer does not have the kind's shape."""


def _protocol_report(message: str) -> GradeReport:
    return GradeReport([TestResult("answer", PROTOCOL_ERROR, feedback=message)])


def grade_answer(q: QuestionInstance, answer) -> GradeReport:
    """Grade a structured answer for a generated question.

    Shape mismatches yield a protocol-error outcome rather than an
    exception; anything well-shaped is scored part by part.
    """
    try:
        grader = _GRADERS[q.kind]
    except KeyError:
        return _protocol_report(f"no grader for question kind {q.kind!r}")
    if not isinstance(answer, dict):
        return _protocol_report("answer must be an object with the kind's fields")
    try:
        return grader(q, answer)
    except _Shape as exc:
        return _protocol_report(str(exc))


def _field(answer: dict, name: str):
    if name not in answer:
        raise _Shape(f"missing answer field {name!r}")
    return answer[name]


def _as_distance(value):
    try:
        v = distance_from_json(value)
    except ValueError:
        return None
    if v == INF:
        return INF
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        return None
    if isinstance(v, float):
        if not v.is_integer():
            return v
        v = int(v)
    return v


def _as_int_list(value, what: str) -> list[int]:
    if not isinstance(value, (list, tuple)):
        raise _Shape(f"{what} must be a list")
    out = []
    for x in value:
        if isinstance(x, bool) or not isinstance(x, int):
            raise _Shape(f"{what} must contain integers")
        out.append(x)
    return out


def _grade_distances(q: QuestionInstance, answer) -> GradeReport:
    key = q.answer_key["distances"]
    got = _field(answer, "distances")
    if not isinstance(got, (list, tuple)) or len(got) != len(key):
        raise _Shape(f"expected {len(key)} distances")
    results = []
    for v, (claimed, expected) in enumerate(zip(got, key)):
        ok = _as_distance(claimed) == distance_from_json(expected)
        results.append(
            TestResult(
                f"distance[{v}]",
                PASS if ok else WRONG,
                feedback="" if ok else f"distance for vertex {v} is incorrect",
            )
        )
    return GradeReport(results)


def _grade_order_exact(q: QuestionInstance, answer) -> GradeReport:
    got = _field(answer, "order")
    ok = isinstance(got, (list, tuple)) and list(got) == list(q.answer_key["order"])
    return GradeReport(
        [TestResult("order", PASS if ok else WRONG,
                    feedback="" if ok else "that is not the canonical visit order")]
    )


def _grade_topological(q: QuestionInstance, answer) -> GradeReport:
    got = _field(answer, "order")
    ok = is_valid_topological_order(q.graph, got)
    return GradeReport(
        [TestResult("order", PASS if ok else WRONG,
                    feedback="" if ok else "the order violates at least one arc")]
    )


def _grade_dag_shortest_path(q: QuestionInstance, answer) -> GradeReport:
    """Order graded by the validity predicate; distances are read in the
    submitted order, so each one is checked against its claimed vertex."""
    g = q.graph
    order = _field(answer, "order")
    distances = _field(answer, "distances")
    if not isinstance(distances, (list, tuple)) or len(distances) != g.num_vertices:
        raise _Shape(f"expected {g.num_vertices} distances")
    order_ok = is_valid_topological_order(g, order)
    results = [
        TestResult("order", PASS if order_ok else WRONG,
                   feedback="" if order_ok else "the order violates at least one arc")
    ]
    canonical_order = q.answer_key["order"]
    canonical = {v: d for v, d in zip(canonical_order, q.answer_key["distances"])}
    is_perm = (
        isinstance(order, (list, tuple))
        and sorted(int(x) for x in order if isinstance(x, int)) == list(range(g.num_vertices))
    )
    for i in range(g.num_vertices):
        if not is_perm:
            results.append(
                TestResult(f"distance[{i}]", WRONG,
                           feedback="distances cannot be matched to a non-permutation order")
            )
            continue
        vertex = order[i]
        ok = _as_distance(distances[i]) == distance_from_json(canonical[vertex])
        results.append(
            TestResult(
                f"distance[{i}]",
                PASS if ok else WRONG,
                feedback="" if ok else f"distance for vertex {vertex} is incorrect",
            )
        )
    return GradeReport(results)


def _edge_indices_from_pairs(g: Graph, pairs) -> list[int] | None:
    """Map endpoint pairs to edge indices (undirected match); None when a
    pair names no edge of g."""
    lookup: dict[tuple[int, int], int] = {}
    for idx, (u, v, _w) in enumerate(g.edges):
        lookup[(min(u, v), max(u, v))] = idx
    out = []
    for pair in pairs:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise _Shape("each edge must be a pair [u, v]")
        a, b = pair
        if isinstance(a, bool) or isinstance(b, bool) or not isinstance(a, int) or not isinstance(b, int):
            raise _Shape("edge endpoints must be integers")
        idx = lookup.get((min(a, b), max(a, b)))
        if idx is None:
            return None
        out.append(idx)
    return out


def _grade_minimum_tree(q: QuestionInstance, answer) -> GradeReport:
    g = q.graph
    pairs = _field(answer, "edges")
    if not isinstance(pairs, (list, tuple)):
        raise _Shape("edges must be a list of pairs")
    indices = _edge_indices_from_pairs(g, pairs)
    if indices is None:
        return GradeReport([TestResult("tree", WRONG, feedback="some claimed edge is not in the graph")])
    verdict = is_spanning_forest(g, indices)
    if verdict != OK:
        feedback = {
            "not-subgraph": "some claimed edge is not in the graph",
            "has-cycle": "the claimed edges contain a cycle, so they do not form a tree",
            "not-spanning": "the claimed edges do not span every component",
        }[verdict]
        return GradeReport([TestResult("tree", WRONG, feedback=feedback)])
    oracle_weight = forest_weight(g, kruskal(g)[0])
    claimed_weight = forest_weight(g, indices)
    if claimed_weight != oracle_weight:
        return GradeReport(
            [TestResult("tree", WRONG,
                        feedback=f"that is a spanning forest, but its weight is off by {claimed_weight - oracle_weight:+d}")]
        )
    return GradeReport([TestResult("tree", PASS)])


def _grade_ff_iteration(q: QuestionInstance, answer) -> GradeReport:
    g = q.graph
    net = FlowNetwork(g, q.prompt["source"], q.prompt["sink"])
    flows = q.prompt["flows"]
    path = _as_int_list(_field(answer, "path"), "path")
    bottleneck = _field(answer, "bottleneck")

    path_ok = (
        len(path) >= 2
        and path[0] == net.source
        and path[-1] == net.sink
        and len(set(path)) == len(path)
        and all(0 <= v < g.num_vertices for v in path)
    )
    if path_ok:
        try:
            true_bottleneck = path_bottleneck(net, flows, path)
        except ValueError:
            path_ok = False
    results = [
        TestResult("path", PASS if path_ok else WRONG,
                   feedback="" if path_ok else "that is not an augmenting path of the residual graph")
    ]
    if path_ok:
        ok = not isinstance(bottleneck, bool) and bottleneck == true_bottleneck
        results.append(
            TestResult("bottleneck", PASS if ok else WRONG,
                       feedback="" if ok else "the bottleneck does not match that path")
        )
    else:
        results.append(TestResult("bottleneck", WRONG, feedback="no valid path to take a bottleneck over"))
    return GradeReport(results)


def _grade_residual(q: QuestionInstance, answer) -> GradeReport:
    arcs = _field(answer, "arcs")
    if not isinstance(arcs, (list, tuple)):
        raise _Shape("arcs must be a list of [u, v, capacity] triples")
    normalized = []
    for arc in arcs:
        if not isinstance(arc, (list, tuple)) or len(arc) != 3:
            raise _Shape("arcs must be a list of [u, v, capacity] triples")
        normalized.append([int(x) for x in arc])
    ok = sorted(normalized) == q.answer_key["arcs"]
    return GradeReport(
        [TestResult("arcs", PASS if ok else WRONG,
                    feedback="" if ok else "the residual arcs are not correct")]
    )


def _simple_exact(field_name: str, coerce=None, feedback: str = "incorrect"):
    def grader(q: QuestionInstance, answer) -> GradeReport:
        got = _field(answer, field_name)
        if coerce is not None:
            got = coerce(got)
        ok = got == q.answer_key[field_name]
        return GradeReport(
            [TestResult(field_name, PASS if ok else WRONG, feedback="" if ok else feedback)]
        )

    return grader


def _coerce_bool(value):
    if isinstance(value, bool):
        return value
    raise _Shape("expected a true/false value")


def _coerce_int(value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise _Shape("expected an integer")
    return value


def _coerce_classification(value):
    if not isinstance(value, str):
        raise _Shape("expected a classification string")
    v = value.strip().lower()
    if v not in ("circuit", "path", "none"):
        raise _Shape("classification must be circuit, path or none")
    return v


_GRADERS = {
    "dijkstra": _grade_distances,
    "bellman-ford": _grade_distances,
    "dag-shortest-path": _grade_dag_shortest_path,
    "topological-order": _grade_topological,
    "bfs": _grade_order_exact,
    "dfs": _grade_order_exact,
    "kruskal": _grade_minimum_tree,
    "prim": _grade_minimum_tree,
    "ff-iteration": _grade_ff_iteration,
    "residual-graph": _grade_residual,
    "flow-validity": _simple_exact("valid", _coerce_bool, "wrong verdict on this flow"),
    "planarity": _simple_exact("planar", _coerce_bool, "wrong planarity verdict"),
    "connectivity-count": _simple_exact("components", _coerce_int, "wrong component count"),
    "chromatic-number": _simple_exact("chromatic_number", _coerce_int, "wrong chromatic number"),
    "subgraph-presence": _simple_exact("contains", _coerce_bool, "wrong containment verdict"),
    "degree-question": _simple_exact("max_degree", _coerce_int, "wrong maximum degree"),
    "eulerian-classification": _simple_exact(
        "classification", _coerce_classification, "wrong classification"
    ),
}

for _category in ("complete", "degree", "paths", "trees", "connectivity", "flow"):
    _GRADERS[f"tf-{_category}"] = _simple_exact("truth", _coerce_bool, "wrong truth value")
