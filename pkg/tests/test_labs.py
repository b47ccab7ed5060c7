import json
import sys
from importlib import resources

import pytest

from graphquiz.core import parse_graph
from graphquiz.grading import CRASH, PASS, PROTOCOL_ERROR, TIMEOUT, WRONG
from graphquiz.labs import (
    LabSpec,
    TestCase,
    build_request,
    immutability_check,
    limit_case_suite,
    load_lab,
    mst_checker_cascade,
    run_code_lab,
    split_response,
)

REF = [sys.executable, "-m", "graphquiz.refsolver"]


def shipped_lab(lab_id: str) -> LabSpec:
    text = resources.files("graphquiz").joinpath(f"data/labs/{lab_id}.json").read_text()
    return LabSpec.from_json(text)


ALL_LABS = ("max-degree", "components", "mst", "shortest-path", "max-flow")


class TestProtocol:
    def test_request_shape(self):
        req = build_request("mst", "U 2 1\n0 1 3", [])
        assert req == "TASK mst\nU 2 1\n0 1 3\nEND\n"

    def test_request_with_args(self):
        assert build_request("shortest-path", "U 1 0", ["0"]).startswith("TASK shortest-path 0\n")

    def test_split_response(self):
        answer, echo = split_response("MAXDEG 2\nECHO\nU 2 1\n0 1 1\nEND\n")
        assert answer == ["MAXDEG 2"] and echo == "U 2 1\n0 1 1"

    def test_split_response_missing_echo(self):
        with pytest.raises(ValueError, match="no ECHO"):
            split_response("MAXDEG 2\nEND\n")


class TestImmutability:
    def test_faithful_echo(self):
        g = parse_graph("U 3 2\n0 1 4\n1 2 5")
        assert immutability_check(g, parse_graph("U 3 2\n0 1 4\n1 2 5"))

    def test_missing_edge(self):
        g = parse_graph("U 3 2\n0 1 4\n1 2 5")
        assert not immutability_check(g, parse_graph("U 3 1\n0 1 4"))

    def test_reordered_edges_fine(self):
        g = parse_graph("U 3 2\n0 1 4\n1 2 5")
        assert immutability_check(g, parse_graph("U 3 2\n1 2 5\n1 0 4"))

    def test_changed_weight(self):
        g = parse_graph("U 3 2\n0 1 4\n1 2 5")
        assert not immutability_check(g, parse_graph("U 3 2\n0 1 4\n1 2 6"))


class TestMstCascade:
    G = parse_graph("U 4 5\n0 1 1\n1 2 1\n2 3 1\n0 3 9\n0 2 9")

    def test_pass_at_final_stage(self):
        ok, stage, _msg = mst_checker_cascade(self.G, [(0, 1), (1, 2), (2, 3)])
        assert ok and stage == "ok"

    def test_membership_first(self):
        ok, stage, msg = mst_checker_cascade(self.G, [(0, 1), (1, 3)])
        assert not ok and stage == "not-subgraph" and "1-3" in msg

    def test_cycle_before_weight(self):
        ok, stage, msg = mst_checker_cascade(self.G, [(0, 1), (1, 2), (0, 2)])
        assert not ok and stage == "has-cycle" and "not a tree" in msg

    def test_spanning_before_weight(self):
        ok, stage, _msg = mst_checker_cascade(self.G, [(0, 1), (1, 2)])
        assert not ok and stage == "not-spanning"

    def test_wrong_weight_reports_diff(self):
        ok, stage, msg = mst_checker_cascade(self.G, [(0, 1), (1, 2), (0, 3)])
        assert not ok and stage == "wrong-weight" and "+8" in msg


class TestLimitCaseSuite:
    def test_mst_includes_non_connected(self):
        suite = limit_case_suite("mst")
        graphs = [parse_graph(t.graph) for t in suite]
        from graphquiz.traversal import connected_components

        assert any(connected_components(g)[0] > 1 for g in graphs)

    def test_components_includes_stable(self):
        suite = limit_case_suite("components")
        assert any(parse_graph(t.graph).num_edges == 0 and parse_graph(t.graph).num_vertices > 1 for t in suite)

    def test_shortest_path_has_unreachable(self):
        from graphquiz.paths import INF, dijkstra

        suite = limit_case_suite("shortest-path")
        seen_inf = False
        for t in suite:
            dist, _ = dijkstra(parse_graph(t.graph), int(t.args[0]))
            seen_inf = seen_inf or INF in dist
        assert seen_inf

    def test_unknown_tag(self):
        with pytest.raises(ValueError):
            limit_case_suite("sorting")


class TestRunCodeLab:
    def test_reference_full_marks_everywhere(self):
        for lab_id in ALL_LABS:
            report = run_code_lab(shipped_lab(lab_id), REF)
            assert report.mark == 1, (lab_id, report.to_dict(redact_hidden=False))

    def test_silent_program_is_protocol_error(self):
        spec = shipped_lab("components")
        report = run_code_lab(spec, [sys.executable, "-c", "pass"])
        assert all(r.status == PROTOCOL_ERROR for r in report.results)
        assert report.mark == 0

    def test_crashing_program(self):
        spec = shipped_lab("components")
        report = run_code_lab(spec, [sys.executable, "-c", "raise SystemExit(3)"])
        assert all(r.status == CRASH for r in report.results)

    def test_unexecutable_program_crashes_all(self):
        spec = shipped_lab("components")
        report = run_code_lab(spec, ["/nonexistent/solver"])
        assert all(r.status == CRASH for r in report.results)

    def test_timeout_lets_other_tests_run(self):
        spec = shipped_lab("max-degree")
        sleeper = (
            "import sys, time\n"
            "data = sys.stdin.read()\n"
            "if 'U 4 4' in data: time.sleep(30)\n"
            "sys.stdout.write('MAXDEG 0\\nECHO\\n' "
            "+ '\\n'.join(data.splitlines()[1:-1]) + '\\nEND\\n')\n"
        )
        report = run_code_lab(spec, [sys.executable, "-c", sleeper], timeout=1.0)
        by_name = {r.name: r for r in report.results}
        assert by_name["cycle"].status == TIMEOUT
        statuses = {r.status for r in report.results}
        assert statuses - {TIMEOUT} != set()  # the rest still ran

    def test_output_cap(self):
        spec = shipped_lab("components")
        shouter = "import sys\nsys.stdin.read()\nsys.stdout.write('x' * 2_000_000)\n"
        report = run_code_lab(spec, [sys.executable, "-c", shouter], output_cap=1 << 20)
        assert all(r.status == PROTOCOL_ERROR for r in report.results)
        assert "cap" in report.results[0].feedback

    def test_parallel_run_matches_sequential(self):
        spec = shipped_lab("mst")
        seq = run_code_lab(spec, REF, workers=1)
        par = run_code_lab(spec, REF, workers=4)
        assert [r.name for r in seq.results] == [r.name for r in par.results]
        assert seq.mark == par.mark


class TestMutants:
    CASES = {
        "kruskal-skip-cycle-check": "mst",
        "kruskal-max-tree": "mst",
        "mutate-input": "mst",
        "dijkstra-unit-weights": "shortest-path",
        "components-ignore-isolated": "components",
        "maxflow-one-iteration": "max-flow",
    }

    def test_every_mutant_loses_marks(self):
        for mutant, lab_id in self.CASES.items():
            report = run_code_lab(shipped_lab(lab_id), REF + ["--mutant", mutant])
            assert report.mark < 1, mutant

    def test_mutating_mutant_fails_exactly_board_effects(self):
        report = run_code_lab(shipped_lab("mst"), REF + ["--mutant", "mutate-input"])
        failed = [r.name for r in report.results if not r.passed]
        assert failed == ["board-effects"]
        assert report.modified_input

    def test_max_tree_mutant_fails_weight_not_tree_shape(self):
        report = run_code_lab(shipped_lab("mst"), REF + ["--mutant", "kruskal-max-tree"])
        by_name = {r.name: r for r in report.results}
        assert by_name["unit-weights"].passed  # still a tree on unit weights
        assert not by_name["weighted"].passed


class TestRedaction:
    def test_student_view_hides_hidden_inputs(self):
        spec = shipped_lab("mst")
        report = run_code_lab(spec, REF + ["--mutant", "kruskal-skip-cycle-check"])
        student = json.dumps(report.to_dict(redact_hidden=True))
        hidden_graphs = [t.graph for t in spec.tests if t.visibility == "hidden"]
        for g in hidden_graphs:
            assert json.dumps(g)[1:-1] not in student
        # outcome is still visible
        assert "light-cycle-trap" in student

    def test_teacher_view_includes_hidden_inputs(self):
        spec = shipped_lab("mst")
        report = run_code_lab(spec, REF + ["--mutant", "kruskal-skip-cycle-check"])
        teacher = json.dumps(report.to_dict(redact_hidden=False))
        assert any(json.dumps(t.graph)[1:-1] in teacher for t in spec.tests if t.visibility == "hidden")


class TestLabSpecValidation:
    def test_needs_visible_test(self):
        with pytest.raises(ValueError, match="visible"):
            LabSpec("x", "mst", [TestCase("t", "U 1 0", visibility="hidden")])

    def test_rejects_bad_graph(self):
        with pytest.raises(Exception):
            LabSpec("x", "mst", [TestCase("t", "U 1 5")])

    def test_roundtrip(self):
        spec = shipped_lab("mst")
        again = LabSpec.from_json(spec.to_json())
        assert again.to_dict() == spec.to_dict()
