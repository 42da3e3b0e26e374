"""Process model graph: nodes, sequence flows, validation, and navigation.

A process model is an immutable directed graph. Nodes are tasks, start/end
events, or gateways (and/xor/or x split/merge). Sequence flows are kept in
declaration order so every traversal of the graph is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class NodeKind(Enum):
    TASK = "task"
    START_EVENT = "event start"
    END_EVENT = "event end"
    AND_SPLIT = "gateway and split"
    AND_MERGE = "gateway and merge"
    XOR_SPLIT = "gateway xor split"
    XOR_MERGE = "gateway xor merge"
    OR_SPLIT = "gateway or split"
    OR_MERGE = "gateway or merge"

    @property
    def is_event(self) -> bool:
        return self in (NodeKind.START_EVENT, NodeKind.END_EVENT)

    @property
    def is_task_or_event(self) -> bool:
        return self is NodeKind.TASK or self.is_event

    @property
    def is_gateway(self) -> bool:
        return not self.is_task_or_event

    @property
    def is_split(self) -> bool:
        return self in (NodeKind.AND_SPLIT, NodeKind.XOR_SPLIT, NodeKind.OR_SPLIT)

    @property
    def is_merge(self) -> bool:
        return self in (NodeKind.AND_MERGE, NodeKind.XOR_MERGE, NodeKind.OR_MERGE)

    @property
    def gateway_logic(self) -> str:
        if not self.is_gateway:
            raise ValueError(f"{self.name} is not a gateway kind")
        return self.value.split()[1]


@dataclass(frozen=True)
class Stereotype:
    """An incarnation annotation: under mapping `mapping`, the annotated
    concrete node incarnates the reference element named `reference`."""

    mapping: str
    reference: str


@dataclass(frozen=True)
class Node:
    name: str
    kind: NodeKind
    stereotypes: tuple[Stereotype, ...] = ()


@dataclass(frozen=True)
class SequenceFlow:
    source: str
    target: str


class UnknownNodeError(Exception):
    """Raised when navigation is asked about a name the model does not declare."""


@dataclass(frozen=True)
class Diagnostic:
    locus: str
    message: str

    def __str__(self) -> str:
        return f"{self.locus}: {self.message}"


@dataclass(frozen=True)
class ProcessModel:
    name: str
    nodes: tuple[Node, ...]
    flows: tuple[SequenceFlow, ...]

    def __post_init__(self) -> None:
        by_name: dict[str, Node] = {}
        for node in self.nodes:
            by_name.setdefault(node.name, node)
        succ: dict[str, list[str]] = {node.name: [] for node in self.nodes}
        pred: dict[str, list[str]] = {node.name: [] for node in self.nodes}
        for flow in self.flows:
            if flow.source in succ:
                succ[flow.source].append(flow.target)
            if flow.target in pred:
                pred[flow.target].append(flow.source)
        object.__setattr__(self, "_by_name", by_name)
        object.__setattr__(self, "_succ", {k: tuple(v) for k, v in succ.items()})
        object.__setattr__(self, "_pred", {k: tuple(v) for k, v in pred.items()})

    def node(self, name: str) -> Node:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownNodeError(f"model {self.name!r} declares no node named {name!r}") from None

    def has_node(self, name: str) -> bool:
        return name in self._by_name

    def successors(self, name: str) -> tuple[Node, ...]:
        """Flow targets of `name`, in flow declaration order."""
        self.node(name)
        return tuple(self._by_name[t] for t in self._succ[name] if t in self._by_name)

    def predecessors(self, name: str) -> tuple[Node, ...]:
        """Flow sources of `name`, in flow declaration order."""
        self.node(name)
        return tuple(self._by_name[s] for s in self._pred[name] if s in self._by_name)

    def tasks_and_events(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind.is_task_or_event)

    def start_events(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind is NodeKind.START_EVENT)

    def end_events(self) -> tuple[Node, ...]:
        return tuple(n for n in self.nodes if n.kind is NodeKind.END_EVENT)


class ValidationFailure(Exception):
    """Raised by consumers that require a structurally valid model."""

    def __init__(self, model_name: str, diagnostics: list[Diagnostic]):
        self.model_name = model_name
        self.diagnostics = diagnostics
        summary = "; ".join(str(d) for d in diagnostics)
        super().__init__(f"model {model_name!r} is not valid: {summary}")


def validate(model: ProcessModel) -> list[Diagnostic]:
    """Check structural well-formedness and return all violations found.

    An empty list means the model is ready for conformance checking.
    """
    diagnostics: list[Diagnostic] = []
    seen: dict[str, int] = {}
    for node in model.nodes:
        seen[node.name] = seen.get(node.name, 0) + 1
    for name, count in seen.items():
        if count > 1:
            diagnostics.append(Diagnostic(name, f"node name declared {count} times"))

    indegree: dict[str, int] = {node.name: 0 for node in model.nodes}
    outdegree: dict[str, int] = {node.name: 0 for node in model.nodes}
    for i, flow in enumerate(model.flows):
        locus = f"{flow.source} -> {flow.target}"
        if flow.source not in seen:
            diagnostics.append(Diagnostic(locus, f"flow {i + 1} starts at undeclared node {flow.source!r}"))
        if flow.target not in seen:
            diagnostics.append(Diagnostic(locus, f"flow {i + 1} ends at undeclared node {flow.target!r}"))
        if flow.source == flow.target:
            diagnostics.append(Diagnostic(locus, "self-loop flows are not supported"))
        if flow.source in outdegree:
            outdegree[flow.source] += 1
        if flow.target in indegree:
            indegree[flow.target] += 1

    if not model.start_events():
        diagnostics.append(Diagnostic(model.name, "model has no start event"))
    if not model.end_events():
        diagnostics.append(Diagnostic(model.name, "model has no end event"))

    for node in model.nodes:
        ins, outs = indegree[node.name], outdegree[node.name]
        if node.kind is NodeKind.TASK:
            if ins != 1:
                diagnostics.append(Diagnostic(node.name, f"task must have exactly 1 incoming flow, found {ins}"))
            if outs != 1:
                diagnostics.append(Diagnostic(node.name, f"task must have exactly 1 outgoing flow, found {outs}"))
        elif node.kind is NodeKind.START_EVENT:
            if ins != 0:
                diagnostics.append(Diagnostic(node.name, f"start event must have no incoming flow, found {ins}"))
        elif node.kind is NodeKind.END_EVENT:
            if outs != 0:
                diagnostics.append(Diagnostic(node.name, f"end event must have no outgoing flow, found {outs}"))
        elif node.kind.is_split:
            if ins != 1:
                diagnostics.append(Diagnostic(node.name, f"split gateway must have exactly 1 incoming flow, found {ins}"))
            if outs < 2:
                diagnostics.append(Diagnostic(node.name, f"split gateway must have at least 2 outgoing flows, found {outs}"))
        elif node.kind.is_merge:
            if ins < 2:
                diagnostics.append(Diagnostic(node.name, f"merge gateway must have at least 2 incoming flows, found {ins}"))
            if outs != 1:
                diagnostics.append(Diagnostic(node.name, f"merge gateway must have exactly 1 outgoing flow, found {outs}"))
    return diagnostics


def require_valid(model: ProcessModel) -> ProcessModel:
    """Return the model unchanged, or raise ValidationFailure listing every problem."""
    diagnostics = validate(model)
    if diagnostics:
        raise ValidationFailure(model.name, diagnostics)
    return model


def models_equivalent(a: ProcessModel, b: ProcessModel) -> bool:
    """Structural equality: same name, node set, and flow multiset."""
    if a.name != b.name:
        return False
    if sorted(a.nodes, key=lambda n: n.name) != sorted(b.nodes, key=lambda n: n.name):
        return False
    return sorted((f.source, f.target) for f in a.flows) == sorted((f.source, f.target) for f in b.flows)
