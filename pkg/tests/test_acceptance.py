"""Acceptance suite: one test per release criterion, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
"""

import json
import subprocess
import sys
import time
from contextlib import contextmanager
from importlib import resources
from itertools import combinations
from pathlib import Path

from fastapi.testclient import TestClient

from graphquiz.core import Graph, degree_stats, parse_graph
from graphquiz.demos import riddle_graph
from graphquiz.dsu import ARRAY_LABEL, FOREST_RANK, VARIANTS, make
from graphquiz.exact import eulerian
from graphquiz.export import ExportProfile, bank_from_json, bank_to_json, to_moodle_xml
from graphquiz.flow import FlowNetwork, cut_capacity, is_valid_flow, max_flow
from graphquiz.generate import GenParams, gen_batch
from graphquiz.grading import grade_answer
from graphquiz.labs import LabSpec, run_code_lab
from graphquiz.mst import forest_weight, kruskal, prim, reverse_delete
from graphquiz.paths import BINARY_HEAP, LINEAR_SCAN, bellman_ford, dijkstra
from graphquiz.rng import SplitMix64
from graphquiz.server import create_app

from .helpers import (
    all_graphs_up_to,
    brute_min_cut,
    brute_min_spanning_weight,
    eulerian_criterion,
    walk_covers_all_edges,
)

REF = [sys.executable, "-m", "graphquiz.refsolver"]
CLI = [sys.executable, "-m", "graphquiz.cli"]


@contextmanager
def criterion(name: str):
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    print(f"[PASS] {name}")


def random_graph(rng: SplitMix64, n_max: int, directed: bool, connected: bool = False) -> Graph:
    n = rng.randint(2, n_max)
    edges = []
    present = set()
    if connected:
        for v in range(1, n):
            u = rng.randrange(v)
            edges.append((u, v, rng.randint(1, 9)))
            present.add((u, v))
    density = 0.2 + rng.randrange(60) / 100
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) in present or not rng.chance(density):
                continue
            if directed:
                u, v = (i, j) if rng.chance(0.5) else (j, i)
                edges.append((u, v, rng.randint(1, 9)))
            else:
                edges.append((i, j, rng.randint(1, 9)))
    return Graph(n, tuple(edges), directed=directed)


def test_oracle_equivalence_shortest_paths():
    """Both dijkstra variants and bellman-ford agree exactly on 500 graphs."""
    with criterion("oracle equivalence: dijkstra(linear) = dijkstra(heap) = bellman-ford, 500 graphs, <10 s"):
        started = time.monotonic()
        rng = SplitMix64(20240901)
        for trial in range(500):
            directed = trial % 2 == 1
            g = random_graph(rng, 10, directed)
            source = rng.randrange(g.num_vertices)
            d_lin, t_lin = dijkstra(g, source, LINEAR_SCAN)
            d_heap, t_heap = dijkstra(g, source, BINARY_HEAP)
            assert d_lin == d_heap
            assert t_lin.to_dict() == t_heap.to_dict()
            arcs = g.edges if directed else (
                tuple((u, v, w) for u, v, w in g.edges) + tuple((v, u, w) for u, v, w in g.edges)
            )
            d_bf, cycle = bellman_ford(Graph(g.num_vertices, arcs, directed=True), source)
            assert cycle is None
            assert d_bf == d_lin
        elapsed = time.monotonic() - started
        assert elapsed < 10.0, f"took {elapsed:.1f}s"


def test_mst_agreement():
    """kruskal = prim = reverse-delete = brute-force minimum on 500 connected graphs."""
    with criterion("MST agreement: three algorithms equal the brute-force minimum, 500 graphs"):
        rng = SplitMix64(77001)
        for _trial in range(500):
            g = random_graph(rng, 7, directed=False, connected=True)
            k_edges, _trace = kruskal(g)
            weight = forest_weight(g, k_edges)
            assert weight == forest_weight(g, prim(g, 0)[0])
            assert weight == forest_weight(g, reverse_delete(g))
            assert weight == brute_min_spanning_weight(g)


def test_max_flow_min_cut():
    """max_flow equals the exhaustive minimum cut on 200 networks; the
    returned cut's capacity equals the value."""
    with criterion("max-flow/min-cut: value = exhaustive min cut = returned cut capacity, 200 networks"):
        rng = SplitMix64(55012)
        produced = 0
        while produced < 200:
            g = random_graph(rng, 10, directed=True)
            try:
                net = FlowNetwork(g, 0, g.num_vertices - 1)
            except ValueError:
                continue
            produced += 1
            result = max_flow(net)
            ok, why = is_valid_flow(net, result.flow)
            assert ok, why
            assert result.value == brute_min_cut(net)
            assert cut_capacity(net, result.cut) == result.value


def test_union_find_variants():
    """All four variants produce identical partitions on 200 scripts; the
    array-label/forest-rank cost ratio grows strictly with n."""
    with criterion("union-find: 200 scripts agree across variants; cost ratio strictly increasing"):
        rng = SplitMix64(314159)
        for _script in range(200):
            n = rng.randint(1, 40)
            structs = [make(n, variant) for variant in VARIANTS]
            for _op in range(rng.randint(0, 80)):
                x, y = rng.randrange(n), rng.randrange(n)
                if rng.chance(0.7):
                    outcomes = {ds.union(x, y) for ds in structs}
                    assert len(outcomes) == 1
                else:
                    roots = [ds.find(x) for ds in structs]
                    del roots
            partitions = {ds.classes() for ds in structs}
            assert len(partitions) == 1

        ratios = []
        for exp in range(6, 13):  # n in {64 .. 4096}
            n = 2**exp
            counters = {}
            for variant in (ARRAY_LABEL, FOREST_RANK):
                ds = make(n, variant)
                for i in range(n - 1):
                    ds.union(i, i + 1)
                counters[variant] = ds.op_counter
            ratios.append(counters[ARRAY_LABEL] / counters[FOREST_RANK])
        assert all(a < b for a, b in zip(ratios, ratios[1:])), ratios


def test_eulerian_exhaustive():
    """Every graph on up to 6 vertices classifies by the criterion and every
    witness covers each edge exactly once; the riddle instance is 'none'
    with exactly 4 odd vertices."""
    with criterion("eulerian: exhaustive n<=6 classification + witness replay; riddle = none with 4 odd"):
        checked = 0
        for g in all_graphs_up_to(6):
            r = eulerian(g)
            assert r.classification == eulerian_criterion(g)
            if r.classification in ("circuit", "path"):
                assert walk_covers_all_edges(g, r.walk)
            checked += 1
        assert checked == 33868  # sum over n in 0..6 of 2^C(n,2)

        riddle = riddle_graph()
        _max_deg, seq = degree_stats(riddle)
        assert sum(1 for d in seq if d % 2 == 1) == 4
        assert eulerian(riddle).classification == "none"


def test_generator_banks(tmp_path):
    """CLI banks of 200 dijkstra / 100 planarity instances: all distinct,
    every key grades to full marks, same seed is byte-identical."""
    with criterion("generator: 200 dijkstra + 100 planarity distinct, keys grade 1.0, byte-identical reruns"):
        outputs = {}
        for kind, count in (("dijkstra", 200), ("planarity", 100)):
            path_a = tmp_path / f"{kind}-a.json"
            path_b = tmp_path / f"{kind}-b.json"
            for out in (path_a, path_b):
                proc = subprocess.run(
                    CLI + ["generate", "--kind", kind, "--count", str(count),
                           "--seed", "42", "-o", str(out)],
                    capture_output=True,
                )
                assert proc.returncode == 0, proc.stderr
            assert path_a.read_bytes() == path_b.read_bytes()
            bank = bank_from_json(path_a.read_text())
            assert len(bank.instances) == count
            assert len({q.id for q in bank.instances}) == count
            for q in bank.instances:
                assert grade_answer(q, q.answer_key).mark == 1, q.id
            outputs[kind] = bank


def shipped_lab(lab_id: str) -> LabSpec:
    text = resources.files("graphquiz").joinpath(f"data/labs/{lab_id}.json").read_text()
    return LabSpec.from_json(text)


ALL_LABS = ("max-degree", "components", "mst", "shortest-path", "max-flow")
MUTANTS = {
    "kruskal-skip-cycle-check": "mst",
    "kruskal-max-tree": "mst",
    "mutate-input": "mst",
    "dijkstra-unit-weights": "shortest-path",
    "components-ignore-isolated": "components",
    "maxflow-one-iteration": "max-flow",
}


def test_grader_end_to_end():
    """Reference scores 1.0 on every lab; all six mutants score below 1.0,
    the input-mutating one failing exactly the board-effects test."""
    with criterion("grader: reference 1.0 on 5 labs; 6 mutants < 1.0; mutator trips board-effects only"):
        for lab_id in ALL_LABS:
            report = run_code_lab(shipped_lab(lab_id), REF)
            assert report.mark == 1, (lab_id, report.to_dict(redact_hidden=False))
        assert len(MUTANTS) >= 5
        for mutant, lab_id in MUTANTS.items():
            report = run_code_lab(shipped_lab(lab_id), REF + ["--mutant", mutant])
            assert report.mark < 1, mutant
            if mutant == "mutate-input":
                failed = [r.name for r in report.results if not r.passed]
                assert failed == ["board-effects"]
                assert report.modified_input


def test_redaction():
    """No hidden-test input and no answer key ever reaches a student view,
    in grade reports or anywhere on the student HTTP surface."""
    with criterion("redaction: student reports and HTTP responses carry no hidden inputs or keys"):
        spec = shipped_lab("mst")
        report = run_code_lab(spec, REF + ["--mutant", "kruskal-skip-cycle-check"])
        student_text = json.dumps(report.to_dict(redact_hidden=True))
        for test in spec.tests:
            if test.visibility == "hidden":
                assert json.dumps(test.graph)[1:-1] not in student_text

        bank = gen_batch([
            ("dijkstra", GenParams(seed=5), 5),
            ("topological-order", GenParams(seed=5), 5),
            ("tf-complete", GenParams(seed=5), 5),
        ])
        bank_dir = Path(__file__).resolve().parent / "_acceptance_banks"
        bank_dir.mkdir(exist_ok=True)
        (bank_dir / "scan.json").write_text(bank_to_json(bank), encoding="utf-8")
        try:
            client = TestClient(create_app(bank_dir))
            sid = client.post("/api/sessions", json={"bank": "scan"}).json()["session"]
            bodies = [client.get("/api/banks").text]
            for i in range(len(bank.instances)):
                bodies.append(client.get(f"/api/sessions/{sid}/question", params={"index": i}).text)
            bodies.append(client.post(f"/api/sessions/{sid}/answer",
                                      json={"answer": {"order": [0]}}).text)
            bodies.append(client.get(f"/api/sessions/{sid}/summary").text)
            joined = "\n".join(bodies)
            assert "answer_key" not in joined
            assert "acceptance" not in joined
            for q in bank.instances:
                key_text = json.dumps(q.answer_key, sort_keys=True)
                assert key_text not in joined
        finally:
            (bank_dir / "scan.json").unlink()
            bank_dir.rmdir()


def test_exporter():
    """Moodle XML for a 200-instance bank re-parses with 200 uniquely named
    questions; JSON round-trips to an identical bank."""
    with criterion("exporter: 200-question Moodle XML well-formed with unique names; JSON round-trip identity"):
        bank = gen_batch([("dijkstra", GenParams(seed=42), 200)])
        result = to_moodle_xml(bank, ExportProfile(format="moodle-xml"))
        from xml.etree import ElementTree as ET

        root = ET.fromstring(result.document)
        names = [q.find("name/text").text
                 for q in root.findall("question") if q.get("type") != "category"]
        assert len(names) == 200 and len(set(names)) == 200
        assert not result.skipped

        again = bank_from_json(bank_to_json(bank))
        assert again.to_dict() == bank.to_dict()
