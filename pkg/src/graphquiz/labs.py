"""Code labs: grading external programs over a stdin/stdout protocol.

Request (program stdin):            Response (program stdout):

    TASK <tag> [args...]                <answer block, per tag>
    <graph in the text format>          ECHO
    END                                 <graph in the text format>
                                        END

Answer blocks:
    max-degree      MAXDEG <d>
    components      COMPONENTS <k>
    mst             TREE <k>  then k lines  u v
    shortest-path   DIST <d0> <d1> ... <dn-1>     ("inf" for unreachable)
    max-flow        VALUE <v>  then  FLOWS <f0> ... <fm-1>

The graph echo lets the grader detect board effects (mutation of the
input).  Tests run with an empty environment, a wall-clock timeout and an
output cap; a hidden test's input and expected value never reach the
student-facing report.
"""

from __future__ import annotations

import json
import subprocess
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .core import Graph, GraphFormatError, degree_stats, parse_graph, serialize_graph
from .flow import FlowNetwork, flow_value, is_valid_flow, max_flow
from .grading import CRASH, PASS, PROTOCOL_ERROR, TIMEOUT, WRONG, GradeReport, TestResult
from .mst import OK, forest_weight, is_spanning_forest, kruskal
from .paths import INF, dijkstra, distance_to_json
from .traversal import connected_components

TASKS = ("max-degree", "components", "mst", "shortest-path", "max-flow")

DEFAULT_TIMEOUT = 5.0
DEFAULT_OUTPUT_CAP = 1 << 20  # 1 MiB


@dataclass
class TestCase:
    __test__ = False  # keep pytest from collecting the type by its name

    name: str
    graph: str  # text format
    args: list[str] = field(default_factory=list)
    visibility: str = "visible"  # visible | hidden
    checker: str = ""  # task tag or "board-effects"; empty = the lab's task
    weight: int = 1
    feedback: str = ""
    expected: dict | None = None  # shown to students on visible tests

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "graph": self.graph,
            "args": self.args,
            "visibility": self.visibility,
            "checker": self.checker,
            "weight": self.weight,
            "feedback": self.feedback,
        }
        if self.expected is not None:
            d["expected"] = self.expected
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TestCase":
        return cls(
            name=d["name"],
            graph=d["graph"],
            args=[str(a) for a in d.get("args", [])],
            visibility=d.get("visibility", "visible"),
            checker=d.get("checker", ""),
            weight=int(d.get("weight", 1)),
            feedback=d.get("feedback", ""),
            expected=d.get("expected"),
        )


@dataclass
class LabSpec:
    lab_id: str
    task: str
    tests: list[TestCase]
    skeleton: str = ""
    reference: list[str] | None = None

    def __post_init__(self):
        if self.task not in TASKS:
            raise ValueError(f"unknown task tag {self.task!r}")
        if not any(t.visibility == "visible" for t in self.tests):
            raise ValueError("a lab needs at least one visible test")
        if sum(t.weight for t in self.tests) <= 0:
            raise ValueError("test weights must sum to a positive total")
        for t in self.tests:
            parse_graph(t.graph)  # fail early on malformed spec graphs

    def to_dict(self) -> dict:
        return {
            "lab_id": self.lab_id,
            "task": self.task,
            "skeleton": self.skeleton,
            "reference": self.reference,
            "tests": [t.to_dict() for t in self.tests],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LabSpec":
        return cls(
            lab_id=d["lab_id"],
            task=d["task"],
            tests=[TestCase.from_dict(t) for t in d["tests"]],
            skeleton=d.get("skeleton", ""),
            reference=d.get("reference"),
        )

    @classmethod
    def from_json(cls, text: str) -> "LabSpec":
        return cls.from_dict(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def build_request(task: str, graph_text: str, args: list[str]) -> str:
    head = f"TASK {task}" + ("".join(f" {a}" for a in args))
    return f"{head}\n{graph_text}\nEND\n"


def split_response(text: str) -> tuple[list[str], str]:
    """(answer lines, echoed graph text); raises ValueError quoting the
    offending line on malformed responses."""
    lines = text.splitlines()
    try:
        echo_at = lines.index("ECHO")
    except ValueError:
        raise ValueError("response has no ECHO line") from None
    answer = [ln for ln in lines[:echo_at] if ln.strip()]
    rest = lines[echo_at + 1:]
    try:
        end_at = rest.index("END")
    except ValueError:
        raise ValueError("response has no END line after the echo") from None
    echo = "\n".join(ln for ln in rest[:end_at] if ln.strip())
    return answer, echo


def immutability_check(before: Graph, after: Graph) -> bool:
    """Order-insensitive structural comparison of the echoed graph."""
    if before.num_vertices != after.num_vertices or before.directed != after.directed:
        return False

    def bag(g: Graph):
        if g.directed:
            return sorted((u, v, w) for u, v, w in g.edges)
        return sorted((min(u, v), max(u, v), w) for u, v, w in g.edges)

    return bag(before) == bag(after)


def mst_checker_cascade(g: Graph, claimed_pairs) -> tuple[bool, str, str]:
    """(ok, stage, message); stages in the pedagogical order: subgraph
    membership, acyclicity, spanning, weight."""
    lookup: dict[tuple[int, int], int] = {}
    for idx, (u, v, _w) in enumerate(g.edges):
        lookup[(min(u, v), max(u, v))] = idx
    indices = []
    for a, b in claimed_pairs:
        idx = lookup.get((min(a, b), max(a, b)))
        if idx is None:
            return False, "not-subgraph", f"claimed edge {a}-{b} is not an edge of the graph"
        indices.append(idx)
    verdict = is_spanning_forest(g, indices)
    if verdict == "not-subgraph":
        return False, "not-subgraph", "a claimed edge is repeated"
    if verdict == "has-cycle":
        return False, "has-cycle", "not a tree: the claimed edges contain a cycle"
    if verdict == "not-spanning":
        return False, "not-spanning", "not spanning: some vertices are left unconnected"
    oracle = forest_weight(g, kruskal(g)[0])
    claimed_weight = forest_weight(g, indices)
    if claimed_weight != oracle:
        return False, "wrong-weight", f"the tree weight is off by {claimed_weight - oracle:+d}"
    return True, "ok", ""


def _parse_single(answer: list[str], keyword: str) -> int:
    if len(answer) != 1:
        raise ValueError(f"expected one '{keyword} <value>' line, got {answer[:2]!r}")
    parts = answer[0].split()
    if len(parts) != 2 or parts[0] != keyword:
        raise ValueError(f"malformed answer line {answer[0]!r}")
    try:
        return int(parts[1])
    except ValueError:
        raise ValueError(f"malformed answer line {answer[0]!r}") from None


def _check_max_degree(g: Graph, answer: list[str], args: list[str]):
    got = _parse_single(answer, "MAXDEG")
    want, _seq = degree_stats(g)
    return got == want, f"maximum degree {got} is wrong" if got != want else ""


def _check_components(g: Graph, answer: list[str], args: list[str]):
    got = _parse_single(answer, "COMPONENTS")
    want, _labels = connected_components(g)
    return got == want, f"component count {got} is wrong" if got != want else ""


def _check_mst(g: Graph, answer: list[str], args: list[str]):
    if not answer:
        raise ValueError("expected a 'TREE <k>' line")
    head = answer[0].split()
    if len(head) != 2 or head[0] != "TREE":
        raise ValueError(f"malformed answer line {answer[0]!r}")
    try:
        k = int(head[1])
    except ValueError:
        raise ValueError(f"malformed answer line {answer[0]!r}") from None
    if len(answer) - 1 != k:
        raise ValueError(f"TREE announced {k} edges but {len(answer) - 1} lines follow")
    pairs = []
    for ln in answer[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"malformed edge line {ln!r}") from None
    ok, _stage, message = mst_checker_cascade(g, pairs)
    return ok, message


def _check_distances(g: Graph, answer: list[str], args: list[str]):
    source = int(args[0])
    if len(answer) != 1 or not answer[0].startswith("DIST"):
        raise ValueError(f"expected one 'DIST ...' line, got {answer[:2]!r}")
    tokens = answer[0].split()[1:]
    if len(tokens) != g.num_vertices:
        raise ValueError(f"expected {g.num_vertices} distances, got {len(tokens)}")
    got = []
    for tok in tokens:
        if tok == "inf":
            got.append(INF)
        else:
            try:
                got.append(int(tok))
            except ValueError:
                raise ValueError(f"malformed distance {tok!r}") from None
    want, _trace = dijkstra(g, source)
    if got != want:
        bad = next(v for v in range(g.num_vertices) if got[v] != want[v])
        return False, f"distance for vertex {bad} is wrong"
    return True, ""


def _check_flow(g: Graph, answer: list[str], args: list[str]):
    s, t = int(args[0]), int(args[1])
    net = FlowNetwork(g, s, t)
    if len(answer) != 2:
        raise ValueError(f"expected 'VALUE <v>' then 'FLOWS ...', got {answer[:3]!r}")
    value = _parse_single(answer[:1], "VALUE")
    parts = answer[1].split()
    if parts[:1] != ["FLOWS"] or len(parts) - 1 != g.num_edges:
        raise ValueError(f"malformed flow assignment line {answer[1]!r}")
    try:
        flows = [int(x) for x in parts[1:]]
    except ValueError:
        raise ValueError(f"malformed flow assignment line {answer[1]!r}") from None
    ok, why = is_valid_flow(net, flows)
    if not ok:
        return False, f"the flow assignment is invalid ({why})"
    if flow_value(net, flows) != value:
        return False, "the claimed value does not match the flow assignment"
    want = max_flow(net).value
    if value != want:
        return False, f"flow value {value} is not maximum"
    return True, ""


_CHECKERS = {
    "max-degree": _check_max_degree,
    "components": _check_components,
    "mst": _check_mst,
    "shortest-path": _check_distances,
    "max-flow": _check_flow,
}


def run_code_lab(
    spec: LabSpec,
    command: list[str],
    timeout: float = DEFAULT_TIMEOUT,
    output_cap: int = DEFAULT_OUTPUT_CAP,
    workers: int = 1,
) -> GradeReport:
    """Run every test of the lab against an external program.

    The report keeps spec order regardless of completion order; a timeout
    or crash on one test never stops the others.
    """

    def run_one(test: TestCase) -> TestResult:
        request = build_request(spec.task, test.graph, test.args)
        result = TestResult(
            name=test.name,
            status=PASS,
            weight=test.weight,
            visibility=test.visibility,
            detail=_detail_for(test),
        )
        try:
            proc = subprocess.run(
                command,
                input=request.encode(),
                stdout=subprocess.PIPE,
                stderr=subprocess.PIPE,
                timeout=timeout,
                env={},
            )
        except subprocess.TimeoutExpired:
            result.status = TIMEOUT
            result.feedback = f"no answer within {timeout:g} s"
            return result
        except OSError as exc:
            result.status = CRASH
            result.feedback = f"could not run the program: {exc}"
            return result
        if len(proc.stdout) > output_cap:
            result.status = PROTOCOL_ERROR
            result.feedback = f"output exceeds the {output_cap} byte cap"
            return result
        if proc.returncode != 0:
            result.status = CRASH
            result.feedback = f"program exited with status {proc.returncode}"
            return result

        g = parse_graph(test.graph)
        try:
            answer, echo_text = split_response(proc.stdout.decode("utf-8", "replace"))
            echo = parse_graph(echo_text)
        except (ValueError, GraphFormatError) as exc:
            result.status = PROTOCOL_ERROR
            result.feedback = str(exc)
            return result

        echo_ok = immutability_check(g, echo)
        result.echo_ok = echo_ok  # picked up for the report-level flag

        checker = test.checker or spec.task
        if checker == "board-effects":
            if not echo_ok:
                result.status = WRONG
                result.feedback = test.feedback or "the input graph was modified"
            return result
        try:
            ok, message = _CHECKERS[checker](g, answer, test.args)
        except ValueError as exc:
            result.status = PROTOCOL_ERROR
            result.feedback = str(exc)
            return result
        if not ok:
            result.status = WRONG
            result.feedback = "; ".join(x for x in (test.feedback, message) if x)
        return result

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_one, spec.tests))
    else:
        results = [run_one(t) for t in spec.tests]

    report = GradeReport(results)
    report.modified_input = any(not getattr(r, "echo_ok", True) for r in results)
    return report


def _detail_for(test: TestCase) -> str:
    payload = {"input": test.graph, "args": test.args}
    if test.expected is not None:
        payload["expected"] = test.expected
    return json.dumps(payload)


def load_lab(path) -> LabSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return LabSpec.from_json(fh.read())


# -- limit-case batteries -------------------------------------------------------

_NON_CONNECTED = "U 5 4\n0 1 2\n1 2 2\n0 2 5\n3 4 1"
_STABLE = "U 4 0"
_SINGLE = "U 1 0"
_TIED = "U 4 5\n0 1 2\n1 2 2\n2 3 2\n3 0 2\n0 2 2"


def limit_case_suite(task: str) -> list[TestCase]:
    """The built-in edge-case battery for a task tag: non-connected and
    stable graphs, the single vertex, tied weights, and for flows a
    network with no source-to-sink path."""
    if task not in TASKS:
        raise ValueError(f"unknown task tag {task!r}")
    if task == "max-flow":
        return [
            TestCase("limit-no-path", "D 4 3\n1 0 3\n2 1 2\n3 2 4", args=["0", "3"],
                     visibility="hidden", checker=task, feedback="no augmenting path exists here"),
            TestCase("limit-single-arc", "D 2 1\n0 1 7", args=["0", "1"],
                     visibility="hidden", checker=task, feedback="the smallest possible network"),
            TestCase("limit-antiparallel", "D 3 4\n0 1 3\n1 0 2\n1 2 3\n2 1 1", args=["0", "2"],
                     visibility="hidden", checker=task, feedback="mind antiparallel arcs"),
        ]
    cases = [
        TestCase("limit-non-connected", _NON_CONNECTED, visibility="hidden", checker=task,
                 feedback="check non-connected graphs"),
        TestCase("limit-stable", _STABLE, visibility="hidden", checker=task,
                 feedback="check the graph with no edges"),
        TestCase("limit-single-vertex", _SINGLE, visibility="hidden", checker=task,
                 feedback="check the one-vertex graph"),
    ]
    if task in ("mst", "shortest-path"):
        cases.append(
            TestCase("limit-tied-weights", _TIED, visibility="hidden", checker=task,
                     feedback="equal weights must not confuse the algorithm")
        )
    if task == "shortest-path":
        for case in cases:
            case.args = ["0"]
    return cases
