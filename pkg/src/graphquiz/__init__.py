"""graphquiz: graph-algorithm exercise engine.

Reference algorithms with deterministic step traces, seeded question-bank
generation with ground-truth keys, autograding of structured answers and
external programs, question-bank exporters, and an HTTP quiz session
service.
"""

__version__ = "0.1.0"

from .core import (
    Graph,
    GraphFormatError,
    Matrix,
    adjacency_matrix,
    complement,
    complete_graph,
    degree_stats,
    incidence_matrix,
    neighbors,
    parse_graph,
    serialize_graph,
)
from .dsu import DisjointSet, make
from .exact import chromatic_number, contains_subgraph, eulerian, hamiltonian, is_planar
from .flow import (
    FlowNetwork,
    MaxFlowResult,
    augmenting_path,
    ford_fulkerson_step,
    is_valid_flow,
    max_flow,
    residual_graph,
)
from .mst import is_spanning_forest, is_spanning_tree, kruskal, prim, reverse_delete
from .paths import INF, bellman_ford, dag_shortest_paths, dijkstra
from .traces import Trace, TraceStep
from .traversal import (
    bfs,
    connected_components,
    dfs,
    is_valid_topological_order,
    topological_sort,
)

__all__ = [name for name in dir() if not name.startswith("_")]
