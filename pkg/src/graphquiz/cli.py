"""Command-line surface: generate, solve, grade, export, serve.

Results and traces print as a JSON envelope so scripts (and the teacher)
can consume them; exit codes follow the usual conventions (0 success,
1 runtime failure, 2 usage error).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import GraphFormatError, degree_stats, parse_graph
from .exact import chromatic_number, contains_subgraph, eulerian, hamiltonian, is_planar
from .export import ExportProfile, bank_from_json, bank_to_json, to_gift, to_moodle_xml
from .flow import FlowNetwork, max_flow
from .generate import ALL_KINDS, GenParams, GenerationError, gen_batch
from .labs import load_lab, run_code_lab
from .mst import forest_weight, kruskal, prim, reverse_delete
from .paths import bellman_ford, dag_shortest_paths, dijkstra, distance_to_json
from .traversal import bfs, connected_components, dfs, topological_sort

SOLVE_ALGORITHMS = (
    "bfs", "dfs", "components", "topo", "dag-shortest-path", "dijkstra",
    "bellman-ford", "mst", "prim", "reverse-delete", "maxflow", "euler",
    "hamiltonian", "chromatic", "planar", "subgraph", "degree",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphquiz")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="generate a question bank")
    g.add_argument("--kind", required=True, choices=sorted(ALL_KINDS))
    g.add_argument("--count", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--min-n", type=int, default=None)
    g.add_argument("--max-n", type=int, default=None)
    g.add_argument("--min-weight", type=int, default=1)
    g.add_argument("--max-weight", type=int, default=9)
    g.add_argument("--density", type=float, default=0.4)
    g.add_argument("--disconnected", action="store_true",
                   help="drop the connectivity requirement")
    g.add_argument("--language", default="en", choices=("en", "fr"))
    g.add_argument("-o", "--output", default=None, help="bank file (default: stdout)")

    s = sub.add_parser("solve", help="run a reference algorithm on a graph file")
    s.add_argument("algorithm", choices=SOLVE_ALGORITHMS)
    s.add_argument("graph", help="path to a graph file")
    s.add_argument("--source", type=int, default=0)
    s.add_argument("--sink", type=int, default=None)
    s.add_argument("--root", type=int, default=0)
    s.add_argument("--start", type=int, default=0)
    s.add_argument("--phase", choices=("prefix", "postfix"), default="prefix")
    s.add_argument("--pq", choices=("linear-scan", "binary-heap"), default="binary-heap")
    s.add_argument("--dsu", default="forest-rank-pathcompress")
    s.add_argument("--want", choices=("path", "circuit"), default="path")
    s.add_argument("--pattern", default=None, help="pattern graph file (subgraph)")

    r = sub.add_parser(
        "grade",
        help="grade an external program against a lab",
        epilog="the program command goes after a standalone --, e.g. "
               "graphquiz grade mst.json -- python3 solver.py",
    )
    r.add_argument("spec", help="lab spec JSON file")
    r.add_argument("--teacher", action="store_true", help="unredacted report")
    r.add_argument("--timeout", type=float, default=5.0)
    r.add_argument("--workers", type=int, default=1)

    e = sub.add_parser("export", help="convert a bank file to an exchange format")
    e.add_argument("bank", help="bank JSON file")
    e.add_argument("--format", required=True, choices=("moodle-xml", "gift", "json"))
    e.add_argument("--category", default="graphquiz")
    e.add_argument("--shuffle", action="store_true")
    e.add_argument("--student", action="store_true", help="json: strip answer keys")
    e.add_argument("-o", "--output", default=None)

    v = sub.add_parser("serve", help="run the quiz session HTTP service")
    v.add_argument("--host", default="127.0.0.1")
    v.add_argument("--port", type=int, default=8470)
    v.add_argument("--bank-dir", required=True)
    v.add_argument("--persist", default=None, help="append-only session journal")
    v.add_argument("--teacher-secret", default=None)

    return parser


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_generate(ns, parser) -> int:
    if ns.count < 1:
        parser.error("--count must be at least 1")
    if (ns.min_n is None) != (ns.max_n is None):
        parser.error("--min-n and --max-n go together")
    try:
        params = GenParams(
            seed=ns.seed,
            n_range=(ns.min_n, ns.max_n) if ns.min_n is not None else None,
            weight_range=(ns.min_weight, ns.max_weight),
            density=ns.density,
            connected=not ns.disconnected,
        )
        bank = gen_batch([(ns.kind, params, ns.count)], language=ns.language)
    except (ValueError, GenerationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write(bank_to_json(bank), ns.output)
    return 0


def _solve(ns) -> dict:
    g = parse_graph(Path(ns.graph).read_text(encoding="utf-8"))
    alg = ns.algorithm
    if alg == "bfs":
        trace, dist = bfs(g, ns.root)
        return {"result": {"distances": [distance_to_json(d) for d in dist]},
                "trace": trace.to_dict()}
    if alg == "dfs":
        trace = dfs(g, ns.root, ns.phase)
        return {"result": {"order": [s.data["vertex"] for s in trace.steps]},
                "trace": trace.to_dict()}
    if alg == "components":
        count, labels = connected_components(g)
        return {"result": {"components": count, "labels": labels}}
    if alg == "topo":
        order, cycle = topological_sort(g)
        return {"result": {"order": order, "cycle": cycle}}
    if alg == "dag-shortest-path":
        dist, trace = dag_shortest_paths(g, ns.source)
        return {"result": {"distances": [distance_to_json(d) for d in dist]},
                "trace": trace.to_dict()}
    if alg == "dijkstra":
        dist, trace = dijkstra(g, ns.source, ns.pq)
        return {"result": {"distances": [distance_to_json(d) for d in dist]},
                "trace": trace.to_dict()}
    if alg == "bellman-ford":
        dist, cycle = bellman_ford(g, ns.source)
        return {"result": {
            "distances": None if dist is None else [distance_to_json(d) for d in dist],
            "negative_cycle": cycle,
        }}
    if alg == "mst":
        chosen, trace = kruskal(g, ns.dsu)
        return {"result": {"edges": [list(g.edges[i][:2]) for i in chosen],
                           "weight": forest_weight(g, chosen)},
                "trace": trace.to_dict()}
    if alg == "prim":
        chosen, trace = prim(g, ns.start)
        return {"result": {"edges": [list(g.edges[i][:2]) for i in chosen],
                           "weight": forest_weight(g, chosen)},
                "trace": trace.to_dict()}
    if alg == "reverse-delete":
        kept = reverse_delete(g)
        return {"result": {"edges": [list(g.edges[i][:2]) for i in kept],
                           "weight": forest_weight(g, kept)}}
    if alg == "maxflow":
        sink = ns.sink if ns.sink is not None else g.num_vertices - 1
        result = max_flow(FlowNetwork(g, ns.source, sink))
        return {"result": {"value": result.value, "flow": result.flow, "cut": result.cut},
                "trace": result.trace.to_dict()}
    if alg == "euler":
        r = eulerian(g)
        return {"result": {
            "classification": r.classification,
            "endpoints": list(r.endpoints) if r.endpoints else None,
            "walk": list(r.walk) if r.walk is not None else None,
        }}
    if alg == "hamiltonian":
        witness = hamiltonian(g, ns.want)
        return {"result": {"witness": witness}}
    if alg == "chromatic":
        k, coloring = chromatic_number(g)
        return {"result": {"chromatic_number": k, "coloring": coloring}}
    if alg == "planar":
        return {"result": {"planar": is_planar(g)}}
    if alg == "subgraph":
        if not ns.pattern:
            raise ValueError("subgraph needs --pattern <graph file>")
        pattern = parse_graph(Path(ns.pattern).read_text(encoding="utf-8"))
        found, mapping = contains_subgraph(g, pattern)
        return {"result": {"contains": found, "mapping": mapping}}
    if alg == "degree":
        max_deg, seq = degree_stats(g)
        return {"result": {"max_degree": max_deg, "degrees": seq}}
    raise ValueError(f"unknown algorithm {alg!r}")


def cmd_solve(ns) -> int:
    try:
        envelope = {"algorithm": ns.algorithm, **_solve(ns)}
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    json.dump(envelope, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def cmd_grade(ns, parser, program: list[str] | None) -> int:
    if not program:
        parser.error("no program command given (append: -- <command...>)")
    try:
        spec = load_lab(ns.spec)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: bad lab spec: {exc}", file=sys.stderr)
        return 1
    report = run_code_lab(spec, program, timeout=ns.timeout, workers=ns.workers)
    json.dump(report.to_dict(redact_hidden=not ns.teacher), sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0 if report.mark == 1 else 1


def cmd_export(ns) -> int:
    try:
        bank = bank_from_json(Path(ns.bank).read_text(encoding="utf-8"))
        profile = ExportProfile(
            format=ns.format,
            category=ns.category,
            shuffle=ns.shuffle,
            student_mode=ns.student,
        )
        if ns.format == "moodle-xml":
            result = to_moodle_xml(bank, profile)
            if result.skipped:
                print(f"skipped {len(result.skipped)} instance(s) with no XML mapping:",
                      file=sys.stderr)
                for s in result.skipped:
                    print(f"  {s['kind']} {s['id']}: {s['reason']}", file=sys.stderr)
            text = result.document
        elif ns.format == "gift":
            text = to_gift(bank, profile)
        else:
            text = bank_to_json(bank, profile)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _write(text, ns.output)
    return 0


def cmd_serve(ns) -> int:
    from .server import serve

    try:
        serve(ns.bank_dir, host=ns.host, port=ns.port,
              persist=ns.persist, teacher_secret=ns.teacher_secret)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv=None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    program: list[str] | None = None
    if "--" in args:
        at = args.index("--")
        program = args[at + 1:]
        args = args[:at]
    parser = build_parser()
    ns = parser.parse_args(args)
    if ns.command == "generate":
        return cmd_generate(ns, parser)
    if ns.command == "solve":
        return cmd_solve(ns)
    if ns.command == "grade":
        return cmd_grade(ns, parser, program)
    if ns.command == "export":
        return cmd_export(ns)
    if ns.command == "serve":
        return cmd_serve(ns)
    parser.error(f"unknown command {ns.command!r}")
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
