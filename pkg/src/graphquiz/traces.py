"""Step traces emitted by the reference algorithms.

A trace doubles as the canonical answer key of a generated question, so
steps carry plain JSON-ready payloads and every producer uses the global
tie-breaking rules (ascending vertex id, input edge index).
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class TraceStep:
    kind: str  # visit | settle | relax | edge_decision | augment
    data: dict

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.data}

    @classmethod
    def from_dict(cls, d: dict) -> "TraceStep":
        data = dict(d)
        kind = data.pop("kind")
        return cls(kind, data)


def visit(vertex: int, phase: str) -> TraceStep:
    return TraceStep("visit", {"vertex": vertex, "phase": phase})


def settle(vertex: int, distance) -> TraceStep:
    return TraceStep("settle", {"vertex": vertex, "distance": distance})


def relax(edge: int, distance) -> TraceStep:
    return TraceStep("relax", {"edge": edge, "distance": distance})


def edge_decision(edge: int, accepted: bool, reason: str) -> TraceStep:
    return TraceStep("edge_decision", {"edge": edge, "accepted": accepted, "reason": reason})


def augment(path: list[int], bottleneck: int) -> TraceStep:
    return TraceStep("augment", {"path": list(path), "bottleneck": bottleneck})


@dataclass
class Trace:
    algorithm: str
    steps: list[TraceStep] = field(default_factory=list)

    def add(self, step: TraceStep) -> None:
        self.steps.append(step)

    def to_dict(self) -> dict:
        return {"algorithm": self.algorithm, "steps": [s.to_dict() for s in self.steps]}

    @classmethod
    def from_dict(cls, d: dict) -> "Trace":
        return cls(d["algorithm"], [TraceStep.from_dict(s) for s in d["steps"]])
