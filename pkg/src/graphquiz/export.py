"""Question-bank exporters: lossless JSON, Moodle XML, and GIFT.

The JSON profile is the engine's own interchange format and round-trips
exactly; its student mode strips answer keys and acceptance descriptors so
the quiz service can hand questions to a browser without leaking answers.
Moodle XML and GIFT embed the keys, because those platforms grade on their
own.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from xml.etree import ElementTree as ET

from .core import Graph, graph_from_dict, serialize_graph
from .generate import QuestionBank, QuestionInstance
from .traversal import is_valid_topological_order

MOODLE_XML = "moodle-xml"
GIFT = "gift"
JSON_FORMAT = "json"

MENU_LIMIT = 12  # valid orders enumerated up to here, short answer beyond


@dataclass(frozen=True)
class ExportProfile:
    format: str = JSON_FORMAT
    category: str = "graphquiz"
    shuffle: bool = False
    language: str = "en"
    student_mode: bool = False  # JSON only: strip keys and acceptance

    def __post_init__(self):
        if self.format not in (MOODLE_XML, GIFT, JSON_FORMAT):
            raise ValueError(f"unknown export format {self.format!r}")
        if self.format == MOODLE_XML and not self.category:
            raise ValueError("moodle-xml export needs a category path")


@dataclass
class MoodleExport:
    document: str
    skipped: list[dict] = field(default_factory=list)  # {id, kind, reason}


# -- JSON ----------------------------------------------------------------------

def bank_to_json(bank: QuestionBank, profile: ExportProfile | None = None) -> str:
    profile = profile or ExportProfile()
    payload = bank.to_dict(include_keys=not profile.student_mode)
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def bank_from_json(text: str) -> QuestionBank:
    return QuestionBank.from_dict(json.loads(text))


# -- prompt rendering -----------------------------------------------------------

def _graph_block(g: Graph | None) -> str:
    if g is None:
        return ""
    return "\n\n" + serialize_graph(g)


_TASK_TEXT = {
    "dijkstra": "Run Dijkstra's algorithm from vertex {source}. Give the distance to every vertex in id order; write inf when a vertex is unreachable.",
    "bellman-ford": "Compute the shortest-path distances from vertex {source}. Give one distance per vertex in id order; write inf when unreachable.",
    "bfs": "Run a breadth-first search from vertex {root} (neighbors in ascending id order). Give the visit order.",
    "dfs": "Run a {phase} depth-first search from vertex {root} (neighbors in ascending id order). Give the visit order.",
    "topological-order": "Give a valid topological order of the vertices.",
    "connectivity-count": "How many connected components does the graph have?",
    "chromatic-number": "What is the chromatic number of the graph?",
    "degree-question": "What is the maximum degree of the graph?",
    "planarity": "Is the graph planar?",
    "subgraph-presence": "Does the graph contain the pattern {pattern_name} as a subgraph?",
    "eulerian-classification": "Does the graph admit an Eulerian circuit, an Eulerian path, or neither?",
}


def question_text(q: QuestionInstance) -> str:
    if q.kind.startswith("tf-"):
        return q.prompt["statement"]
    template = _TASK_TEXT.get(q.kind, q.kind)
    text = template.format(**{k: v for k, v in q.prompt.items() if not isinstance(v, (list, dict))})
    return text + _graph_block(q.graph)


# -- Moodle XML ------------------------------------------------------------------

def _q_name(q: QuestionInstance) -> str:
    return f"{q.kind}-{q.id}"


def _el(parent, tag, text=None, **attrib):
    node = ET.SubElement(parent, tag, attrib)
    if text is not None:
        node.text = text
    return node


def _text_el(parent, tag, value, fmt: str | None = None):
    node = ET.SubElement(parent, tag)
    if fmt:
        node.set("format", fmt)
    _el(node, "text", value)
    return node


def _answer(parent, fraction: str, text: str, tolerance: int | None = None):
    ans = ET.SubElement(parent, "answer", {"fraction": fraction, "format": "moodle_auto_format"})
    _el(ans, "text", text)
    if tolerance is not None:
        _el(ans, "tolerance", str(tolerance))
    return ans


def _truefalse(parent, q: QuestionInstance, truth: bool):
    node = ET.SubElement(parent, "question", {"type": "truefalse"})
    _text_el(node, "name", _q_name(q))
    _text_el(node, "questiontext", question_text(q), fmt="plain_text")
    _el(node, "defaultgrade", "1")
    _answer(node, "100" if truth else "0", "true")
    _answer(node, "0" if truth else "100", "false")
    return node


def _numerical(parent, q: QuestionInstance, value: int):
    node = ET.SubElement(parent, "question", {"type": "numerical"})
    _text_el(node, "name", _q_name(q))
    _text_el(node, "questiontext", question_text(q), fmt="plain_text")
    _el(node, "defaultgrade", "1")
    _answer(node, "100", str(value), tolerance=0)
    return node


def _shortanswer(parent, q: QuestionInstance, key: str):
    node = ET.SubElement(parent, "question", {"type": "shortanswer"})
    _text_el(node, "name", _q_name(q))
    _text_el(node, "questiontext", question_text(q), fmt="plain_text")
    _el(node, "defaultgrade", "1")
    _answer(node, "100", key)
    return node


def _multichoice(parent, q: QuestionInstance, correct: list[str], distractors: list[str], shuffle: bool):
    node = ET.SubElement(parent, "question", {"type": "multichoice"})
    _text_el(node, "name", _q_name(q))
    _text_el(node, "questiontext", question_text(q), fmt="plain_text")
    _el(node, "defaultgrade", "1")
    _el(node, "single", "true")
    _el(node, "shuffleanswers", "true" if shuffle else "false")
    for option in correct:
        _answer(node, "100", option)
    for option in distractors:
        _answer(node, "0", option)
    return node


def _count_valid_orders(g: Graph, cap: int) -> list[list[int]] | None:
    """All valid topological orders, or None once more than cap exist."""
    n = g.num_vertices
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for u, v, _w in g.edges:
        succ[u].append(v)
        indeg[v] += 1
    found: list[list[int]] = []
    order: list[int] = []

    def walk() -> bool:
        if len(order) == n:
            found.append(order[:])
            return len(found) <= cap
        for v in range(n):
            if indeg[v] == 0 and v not in order:
                order.append(v)
                for w in succ[v]:
                    indeg[w] -= 1
                ok = walk()
                for w in succ[v]:
                    indeg[w] += 1
                order.pop()
                if not ok:
                    return False
        return True

    return found if walk() else None


def _order_distractors(g: Graph, orders: list[list[int]]) -> list[str]:
    """Up to three invalid permutations, built by swapping an arc's
    endpoints in the canonical order."""
    base = orders[0]
    seen = {tuple(o) for o in orders}
    out = []
    pos = {v: i for i, v in enumerate(base)}
    for u, v, _w in g.edges:
        cand = base[:]
        cand[pos[u]], cand[pos[v]] = cand[pos[v]], cand[pos[u]]
        if tuple(cand) not in seen and not is_valid_topological_order(g, cand):
            seen.add(tuple(cand))
            out.append(cand)
        if len(out) == 3:
            break
    return [" ".join(str(v) for v in o) for o in out]


def to_moodle_xml(bank: QuestionBank, profile: ExportProfile) -> MoodleExport:
    """One question element per mappable instance.

    Kinds whose canonical key is not the unique acceptable answer (several
    minimum trees, several augmenting paths...) are reported as skipped
    instead of being emitted as exact-match questions that would misgrade.
    """
    if not bank.instances:
        raise ValueError("cannot export an empty bank")
    quiz = ET.Element("quiz")
    cat = ET.SubElement(quiz, "question", {"type": "category"})
    _text_el(cat, "category", f"$course$/{profile.category}")

    skipped: list[dict] = []
    for q in bank.instances:
        kind = q.kind
        key = q.answer_key
        if kind.startswith("tf-"):
            _truefalse(quiz, q, key["truth"])
        elif kind in ("planarity", "subgraph-presence", "flow-validity"):
            field_name = {"planarity": "planar", "subgraph-presence": "contains", "flow-validity": "valid"}[kind]
            _truefalse(quiz, q, key[field_name])
        elif kind in ("connectivity-count", "chromatic-number", "degree-question"):
            field_name = {
                "connectivity-count": "components",
                "chromatic-number": "chromatic_number",
                "degree-question": "max_degree",
            }[kind]
            _numerical(quiz, q, key[field_name])
        elif kind == "eulerian-classification":
            classes = ["circuit", "path", "none"]
            correct = [key["classification"]]
            _multichoice(quiz, q, correct, [c for c in classes if c not in correct], profile.shuffle)
        elif kind == "topological-order":
            orders = _count_valid_orders(q.graph, MENU_LIMIT)
            if orders is not None:
                options = [" ".join(str(v) for v in o) for o in orders]
                _multichoice(quiz, q, options, _order_distractors(q.graph, orders), profile.shuffle)
            else:
                _shortanswer(quiz, q, " ".join(str(v) for v in key["order"]))
        elif kind in ("dijkstra", "bellman-ford"):
            _shortanswer(quiz, q, " ".join(str(d) for d in key["distances"]))
        elif kind in ("bfs", "dfs"):
            _shortanswer(quiz, q, " ".join(str(v) for v in key["order"]))
        elif kind == "residual-graph":
            _shortanswer(quiz, q, "; ".join(f"{u}>{v}:{c}" for u, v, c in key["arcs"]))
        else:
            reasons = {
                "kruskal": "several minimum trees may exist",
                "prim": "several minimum trees may exist",
                "dag-shortest-path": "several valid topological orders may exist",
                "ff-iteration": "several augmenting paths may exist",
            }
            skipped.append({"id": q.id, "kind": kind,
                            "reason": reasons.get(kind, "no XML mapping for this kind")})

    ET.indent(quiz)
    document = ET.tostring(quiz, encoding="unicode", xml_declaration=False)
    document = '<?xml version="1.0" encoding="UTF-8"?>\n' + document + "\n"
    return MoodleExport(document=document, skipped=skipped)


# -- GIFT ------------------------------------------------------------------------

_GIFT_SPECIALS = "~=#{}:\\"


def gift_escape(text: str) -> str:
    out = []
    for ch in text:
        if ch in _GIFT_SPECIALS:
            out.append("\\" + ch)
        else:
            out.append(ch)
    return "".join(out)


def gift_unescape(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        if text[i] == "\\" and i + 1 < len(text) and text[i + 1] in _GIFT_SPECIALS:
            out.append(text[i + 1])
            i += 2
        else:
            out.append(text[i])
            i += 1
    return "".join(out)


_GIFT_NUMERIC = {
    "connectivity-count": "components",
    "chromatic-number": "chromatic_number",
    "degree-question": "max_degree",
}


def to_gift(bank: QuestionBank, profile: ExportProfile) -> str:
    """GIFT text for true/false and numerical kinds only."""
    blocks = []
    for q in bank.instances:
        name = gift_escape(_q_name(q))
        text = gift_escape(question_text(q))
        if q.kind.startswith("tf-"):
            answer = "T" if q.answer_key["truth"] else "F"
            blocks.append(f"::{name}:: {text} {{{answer}}}")
        elif q.kind in ("planarity", "subgraph-presence", "flow-validity"):
            field_name = {"planarity": "planar", "subgraph-presence": "contains", "flow-validity": "valid"}[q.kind]
            answer = "T" if q.answer_key[field_name] else "F"
            blocks.append(f"::{name}:: {text} {{{answer}}}")
        elif q.kind in _GIFT_NUMERIC:
            value = q.answer_key[_GIFT_NUMERIC[q.kind]]
            blocks.append(f"::{name}:: {text} {{#{value}}}")
        else:
            raise ValueError(f"GIFT export does not support kind {q.kind!r}")
    return "\n\n".join(blocks) + "\n"
