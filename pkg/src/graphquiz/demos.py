"""Built-in demo instances.

The refuge-invoice riddle: stations are vertices, each refuge sits on the
trail between two stations, and the billed nights say how often the trail
was walked.  One refuge billed one night too many; with the bills as
given, four stations have odd degree and no walk can cover every billed
night.  Exactly one trail joins two of the odd stations — its refuge is
the culprit, and dropping that one night leaves an Eulerian path.
"""

from __future__ import annotations

from .core import Graph

RIDDLE_STATIONS = ("A", "B", "C", "D", "E", "F", "G", "H", "I")

# One billed night per refuge; the B-F refuge is the over-biller.
_RIDDLE_EDGES = (
    (0, 1, 1),  # A-B
    (1, 2, 1),  # B-C
    (2, 3, 1),  # C-D
    (3, 4, 1),  # D-E
    (4, 5, 1),  # E-F
    (5, 6, 1),  # F-G
    (6, 7, 1),  # G-H
    (7, 0, 1),  # H-A
    (1, 5, 1),  # B-F  <- the faulty invoice
    (3, 8, 1),  # D-I
    (8, 7, 1),  # I-H
)

RIDDLE_FAULTY_EDGE = 8  # index of B-F in the edge list


def riddle_graph() -> Graph:
    """The billed hike map: 4 odd-degree stations, no Eulerian walk."""
    return Graph(num_vertices=9, edges=_RIDDLE_EDGES, labels=RIDDLE_STATIONS)


def riddle_graph_corrected() -> Graph:
    """The map after striking the faulty night: an Eulerian path exists."""
    edges = tuple(e for i, e in enumerate(_RIDDLE_EDGES) if i != RIDDLE_FAULTY_EDGE)
    return Graph(num_vertices=9, edges=edges, labels=RIDDLE_STATIONS)
