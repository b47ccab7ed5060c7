import pytest
from hypothesis import given, settings

from graphquiz.core import Graph, complete_graph, parse_graph
from graphquiz.demos import (
    RIDDLE_FAULTY_EDGE,
    riddle_graph,
    riddle_graph_corrected,
)
from graphquiz.exact import (
    chromatic_number,
    contains_subgraph,
    eulerian,
    hamiltonian,
    is_planar,
)

from .helpers import eulerian_criterion, undirected_graphs, walk_covers_all_edges


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


class TestEulerian:
    def test_triangle_circuit(self):
        r = eulerian(parse_graph("U 3 3\n0 1\n1 2\n0 2"))
        assert r.classification == "circuit"
        assert walk_covers_all_edges(parse_graph("U 3 3\n0 1\n1 2\n0 2"), r.walk)

    def test_path(self):
        r = eulerian(path_graph(3))
        assert r.classification == "path"
        assert set(r.endpoints) == {0, 2}
        assert walk_covers_all_edges(path_graph(3), r.walk)

    def test_riddle_is_none_until_corrected(self):
        assert eulerian(riddle_graph()).classification == "none"
        fixed = eulerian(riddle_graph_corrected())
        assert fixed.classification == "path"
        assert walk_covers_all_edges(riddle_graph_corrected(), fixed.walk)

    def test_riddle_faulty_edge_is_the_only_odd_odd_edge(self):
        g = riddle_graph()
        degrees = [0] * g.num_vertices
        for u, v, _w in g.edges:
            degrees[u] += 1
            degrees[v] += 1
        odd_odd = [
            i for i, (u, v, _w) in enumerate(g.edges)
            if degrees[u] % 2 == 1 and degrees[v] % 2 == 1
        ]
        assert odd_odd == [RIDDLE_FAULTY_EDGE]

    def test_two_component_edges_is_none(self):
        g = parse_graph("U 4 2\n0 1\n2 3")
        assert eulerian(g).classification == "none"

    def test_edgeless_trivial_circuit(self):
        r = eulerian(Graph(3))
        assert r.classification == "circuit" and r.walk == ()

    @settings(max_examples=80)
    @given(undirected_graphs(max_n=7))
    def test_matches_criterion_and_witness_replays(self, g):
        r = eulerian(g)
        assert r.classification == eulerian_criterion(g)
        if r.classification in ("circuit", "path"):
            assert walk_covers_all_edges(g, r.walk)
            if r.classification == "circuit" and g.num_edges > 0:
                assert r.walk[0] == r.walk[-1]
            if r.classification == "path":
                assert {r.walk[0], r.walk[-1]} == set(r.endpoints)


class TestHamiltonian:
    def test_k4_circuit(self):
        assert hamiltonian(complete_graph(4), "circuit") is not None

    def test_star_has_no_path(self):
        star = Graph(4, ((0, 1), (0, 2), (0, 3)))
        assert hamiltonian(star, "path") is None

    def test_c5_circuit_is_the_cycle(self):
        w = hamiltonian(cycle_graph(5), "circuit")
        assert w is not None and sorted(w) == [0, 1, 2, 3, 4]
        edges = {(min(a, b), max(a, b)) for a, b in zip(w, w[1:] + w[:1])}
        assert edges == {(min(u, v), max(u, v)) for u, v, _ in cycle_graph(5).edges}

    def test_path_graph_has_path_not_circuit(self):
        assert hamiltonian(path_graph(4), "path") == [0, 1, 2, 3]
        assert hamiltonian(path_graph(4), "circuit") is None

    def test_size_limit(self):
        with pytest.raises(ValueError, match="too large"):
            hamiltonian(Graph(16), "path")

    @settings(max_examples=40)
    @given(undirected_graphs(max_n=7))
    def test_witness_is_sound(self, g):
        for want in ("path", "circuit"):
            w = hamiltonian(g, want)
            if w is None:
                continue
            assert sorted(w) == list(range(g.num_vertices))
            hops = list(zip(w, w[1:]))
            if want == "circuit":
                hops.append((w[-1], w[0]))
            adjacency = {(min(u, v), max(u, v)) for u, v, _w in g.edges}
            assert all((min(a, b), max(a, b)) in adjacency for a, b in hops)


class TestChromaticNumber:
    def test_k4(self):
        assert chromatic_number(complete_graph(4))[0] == 4

    def test_even_cycle(self):
        assert chromatic_number(cycle_graph(6))[0] == 2

    def test_odd_cycle(self):
        assert chromatic_number(cycle_graph(5))[0] == 3

    def test_edgeless(self):
        assert chromatic_number(Graph(4))[0] == 1

    def test_empty(self):
        assert chromatic_number(Graph(0)) == (0, [])

    def test_petersen_needs_three(self):
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 7), (7, 9), (9, 6),
                 (6, 8), (8, 5), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
        assert chromatic_number(Graph(10, tuple(edges)))[0] == 3

    def test_size_limit(self):
        with pytest.raises(ValueError, match="too large"):
            chromatic_number(Graph(17))

    @settings(max_examples=40)
    @given(undirected_graphs(max_n=7))
    def test_against_exhaustive_k_coloring(self, g):
        from itertools import product

        k, witness = chromatic_number(g)
        assert len(witness) == g.num_vertices
        assert all(witness[u] != witness[v] for u, v, _w in g.edges)
        assert max(witness, default=-1) + 1 <= k
        if g.num_vertices == 0:
            return
        if k > 1:
            # no proper coloring with k-1 colors may exist
            smaller = k - 1
            found = any(
                all(assign[u] != assign[v] for u, v, _w in g.edges)
                for assign in product(range(smaller), repeat=g.num_vertices)
            )
            assert not found


class TestIsPlanar:
    def test_k4(self):
        assert is_planar(complete_graph(4)) is True

    def test_k5(self):
        assert is_planar(complete_graph(5)) is False

    def test_k33(self):
        k33 = Graph(6, tuple((i, j) for i in range(3) for j in range(3, 6)))
        assert is_planar(k33) is False

    def test_k5_subdivision_detected(self):
        # K5 with one edge subdivided through vertex 5: still nonplanar,
        # but the Euler bound alone no longer rejects it
        edges = [(i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) != (0, 1)]
        edges += [(0, 5), (5, 1)]
        g = Graph(6, tuple(edges))
        assert g.num_edges <= 3 * g.num_vertices - 6
        assert is_planar(g) is False

    def test_k33_subdivision_detected(self):
        edges = [(i, j) for i in range(3) for j in range(3, 6) if (i, j) != (0, 3)]
        edges += [(0, 6), (6, 3)]
        g = Graph(7, tuple(edges))
        assert is_planar(g) is False

    def test_petersen(self):
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 7), (7, 9), (9, 6),
                 (6, 8), (8, 5), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
        assert is_planar(Graph(10, tuple(edges))) is False

    def test_size_limit(self):
        with pytest.raises(ValueError, match="too large"):
            is_planar(Graph(13))

    def test_against_networkx(self):
        import networkx as nx

        from graphquiz.rng import SplitMix64

        rng = SplitMix64(4242)
        for _ in range(150):
            n = rng.randint(3, 12)
            edges = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if rng.chance(0.15 + 0.5 * rng.randrange(100) / 100)
            ]
            g = Graph(n, tuple(edges))
            G = nx.Graph()
            G.add_nodes_from(range(n))
            G.add_edges_from(edges)
            assert is_planar(g) == nx.check_planarity(G)[0]


class TestContainsSubgraph:
    def test_k4_contains_triangle(self):
        ok, mapping = contains_subgraph(complete_graph(4), complete_graph(3))
        assert ok
        assert len(set(mapping.values())) == 3

    def test_triangle_does_not_contain_k4(self):
        assert contains_subgraph(complete_graph(3), complete_graph(4)) == (False, None)

    def test_c6_contains_p4(self):
        ok, mapping = contains_subgraph(cycle_graph(6), path_graph(4))
        assert ok
        # mapping embeds consecutive path vertices on adjacent cycle vertices
        hops = [(mapping[i], mapping[i + 1]) for i in range(3)]
        c6 = {(min(u, v), max(u, v)) for u, v, _w in cycle_graph(6).edges}
        assert all((min(a, b), max(a, b)) in c6 for a, b in hops)

    def test_non_induced_semantics(self):
        # P3 embeds into the triangle even though the triangle has the chord
        assert contains_subgraph(complete_graph(3), path_graph(3))[0]

    def test_c4_not_in_triangle_rich_star(self):
        # K1,3 plus nothing: no 4-cycle anywhere
        star = Graph(4, ((0, 1), (0, 2), (0, 3)))
        assert contains_subgraph(star, cycle_graph(4))[0] is False

    def test_pattern_size_limit(self):
        with pytest.raises(ValueError, match="pattern too large"):
            contains_subgraph(complete_graph(4), Graph(9))

    @settings(max_examples=40)
    @given(undirected_graphs(max_n=6))
    def test_every_graph_contains_its_own_edges(self, g):
        if 0 < g.num_vertices <= 8:
            ok, mapping = contains_subgraph(g, g)
            assert ok

    @settings(max_examples=40)
    @given(undirected_graphs(max_n=6))
    def test_witness_mapping_embeds_edges(self, g):
        pattern = path_graph(3)
        if g.num_vertices < 3:
            return
        ok, mapping = contains_subgraph(g, pattern)
        present = {(min(u, v), max(u, v)) for u, v, _w in g.edges}
        if ok:
            for u, v, _w in pattern.edges:
                a, b = mapping[u], mapping[v]
                assert (min(a, b), max(a, b)) in present
        else:
            # oracle: brute force over ordered vertex triples
            found = any(
                (min(a, b), max(a, b)) in present and (min(b, c), max(b, c)) in present
                for a in range(g.num_vertices)
                for b in range(g.num_vertices)
                for c in range(g.num_vertices)
                if len({a, b, c}) == 3
            )
            assert not found
