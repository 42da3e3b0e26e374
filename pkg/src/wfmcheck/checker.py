"""Conformance checking of a concrete process model against a reference model.

Phase 1 derives, for every reference task and event, a predecessor and a
successor formula from its gateway neighborhood. Phase 2 quasi-simulates the
concrete model from each incarnation in both directions, maintaining a set of
branches. Each branch tracks visited nodes, active nodes, a result, and the
execution trace; splits fan branches out, merges synchronize or fan out
depending on direction, and finished branches are kept only if they reached a
terminal event or looped back to the incarnation.

The per-branch result can only move NotConform -> Conform -> Unknown: once a
branch has satisfied the formula and later stops satisfying it, the violation
may still be legal under the open-world reading, so it is flagged unknown
rather than non-conform.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .formula import Formula, TRUE, predecessor_formula, successor_formula
from .incarnation import IncarnationMap, resolve_mapping
from .model import NodeKind, ProcessModel, require_valid


class Direction(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


class Status(Enum):
    CONFORM = "conform"
    NOT_CONFORM = "not-conform"
    UNKNOWN = "unknown"
    NO_COMPLETED_PATH = "no-completed-path"


@dataclass
class SearchStats:
    """Optional instrumentation collected across searches."""

    branches_created: int = 0
    branches_deleted: int = 0
    branches_survived: int = 0
    transitions: list[tuple[Status, Status]] = field(default_factory=list)


@dataclass(frozen=True)
class IncarnationVerdict:
    concrete: str
    reference: str
    direction: Direction
    status: Status
    witness: tuple[str, ...] | None


@dataclass
class _Branch:
    visited: set[str]
    active: dict[str, None]  # insertion-ordered set
    status: Status
    trace: list[str]
    created: int


# Node kinds advanced in place, per direction; split gateways branch forward,
# merge gateways branch backward, and the opposite parallel gateway waits.
_PLAIN = {
    Direction.FORWARD: frozenset({
        NodeKind.TASK, NodeKind.START_EVENT, NodeKind.END_EVENT,
        NodeKind.AND_SPLIT, NodeKind.XOR_MERGE, NodeKind.OR_MERGE,
    }),
    Direction.BACKWARD: frozenset({
        NodeKind.TASK, NodeKind.START_EVENT, NodeKind.END_EVENT,
        NodeKind.AND_MERGE, NodeKind.XOR_SPLIT, NodeKind.OR_SPLIT,
    }),
}
# Branching kinds map to their fan-out style: one branch per neighbor, or one
# branch per nonempty neighbor subset. Exclusive choice forward is per-neighbor;
# backward both merge kinds fan out over subsets because several inflows of an
# exclusive merge may have been taken over time.
_BRANCHING = {
    Direction.FORWARD: {NodeKind.XOR_SPLIT: "single", NodeKind.OR_SPLIT: "subsets"},
    Direction.BACKWARD: {NodeKind.XOR_MERGE: "subsets", NodeKind.OR_MERGE: "subsets"},
}
_WAITER = {Direction.FORWARD: NodeKind.AND_MERGE, Direction.BACKWARD: NodeKind.AND_SPLIT}
_TERMINAL = {Direction.FORWARD: NodeKind.END_EVENT, Direction.BACKWARD: NodeKind.START_EVENT}


def check_incarnation(
    direction: Direction,
    concrete: ProcessModel,
    formula: Formula,
    incarnation: str,
    inc_map: IncarnationMap,
    stats: SearchStats | None = None,
) -> IncarnationVerdict:
    """Search the concrete model from `incarnation` and judge `formula`.

    Forward uses the successor formula of the incarnated reference element,
    backward its predecessor formula. The witness trace of a backward verdict
    starts at the incarnation itself.
    """
    node = concrete.node(incarnation)
    if node.kind.is_gateway:
        raise ValueError(f"incarnation {incarnation!r} is a gateway; only tasks and events are checked")
    reference_name = inc_map.reference_of(incarnation) or incarnation
    if formula == TRUE:
        return IncarnationVerdict(incarnation, reference_name, direction, Status.CONFORM, None)

    if direction is Direction.FORWARD:
        neighbors, ready_neighbors = concrete.successors, concrete.predecessors
    else:
        neighbors, ready_neighbors = concrete.predecessors, concrete.successors
    plain = _PLAIN[direction]
    branching = _BRANCHING[direction]
    waiter = _WAITER[direction]
    terminals = {n.name for n in concrete.nodes if n.kind is _TERMINAL[direction]}

    ids = itertools.count()

    def note_created() -> int:
        if stats is not None:
            stats.branches_created += 1
        return next(ids)

    def project(visited: set[str]) -> set[str]:
        return {inc_map.pairs[c] for c in visited if c in inc_map.pairs}

    def update(branch: _Branch) -> None:
        satisfied = formula.evaluate(project(branch.visited))
        status = branch.status
        if status is Status.NOT_CONFORM and satisfied:
            status = Status.CONFORM
        elif status is Status.CONFORM and not satisfied:
            status = Status.UNKNOWN
        if status is not branch.status:
            if stats is not None:
                stats.transitions.append((branch.status, status))
            branch.status = status

    def advance(branch: _Branch, name: str) -> None:
        was_visited = name in branch.visited
        del branch.active[name]
        for nb in neighbors(name):
            if nb.name not in branch.visited:
                branch.active[nb.name] = None
                branch.visited.add(nb.name)
        if concrete.node(name).kind.is_task_or_event and (name != incarnation or was_visited):
            branch.trace.append(name)
        update(branch)

    def fan_out(branch: _Branch, name: str) -> list[_Branch]:
        options = [nb.name for nb in neighbors(name)]
        if branching[concrete.node(name).kind] == "single":
            choices = [(option,) for option in options]
        else:
            choices = [
                subset
                for size in range(1, len(options) + 1)
                for subset in itertools.combinations(options, size)
            ]
        children = []
        for chosen in choices:
            active = dict(branch.active)
            del active[name]
            visited = set(branch.visited)
            for c in chosen:
                if c not in visited:
                    active[c] = None
                    visited.add(c)
            child = _Branch(visited, active, branch.status, list(branch.trace), note_created())
            update(child)
            children.append(child)
        return children

    def run(branch: _Branch) -> list[_Branch] | None:
        """Process until the branch fans out (children returned) or completes (None)."""
        while branch.active:
            name = next((x for x in branch.active if concrete.node(x).kind in plain), None)
            if name is not None:
                advance(branch, name)
                continue
            name = next((x for x in branch.active if concrete.node(x).kind in branching), None)
            if name is not None:
                return fan_out(branch, name)
            # only parallel waiters are left: prefer one whose join condition is met
            ready = next(
                (x for x in branch.active if {nb.name for nb in ready_neighbors(x)} <= branch.visited),
                None,
            )
            advance(branch, ready if ready is not None else next(iter(branch.active)))
        return None

    initial = _Branch(set(), {incarnation: None}, Status.NOT_CONFORM, [], note_created())
    queue: deque[_Branch] = deque([initial])
    survivors: list[_Branch] = []
    while queue:
        branch = queue.popleft()
        children = run(branch)
        if children is not None:
            queue.extend(children)
            continue
        if incarnation in branch.visited or terminals & branch.visited:
            survivors.append(branch)
            if stats is not None:
                stats.branches_survived += 1
        elif stats is not None:
            stats.branches_deleted += 1

    def verdict(status: Status, witness: tuple[str, ...] | None) -> IncarnationVerdict:
        return IncarnationVerdict(incarnation, reference_name, direction, status, witness)

    for status in (Status.NOT_CONFORM, Status.UNKNOWN):
        candidates = [b for b in survivors if b.status is status]
        if candidates:
            # prefer a witness that ran through to a terminal event; break ties
            # by creation order so reports are reproducible
            best = min(candidates, key=lambda b: (not (terminals & b.visited), b.created))
            witness = tuple(best.trace)
            if direction is Direction.BACKWARD:
                witness = (incarnation,) + witness
            return verdict(status, witness)
    if survivors:
        return verdict(Status.CONFORM, None)
    return verdict(Status.NO_COMPLETED_PATH, None)


@dataclass(frozen=True)
class DirectionResult:
    direction: Direction
    status: Status
    witness: tuple[str, ...] | None
    formula: str


@dataclass(frozen=True)
class IncarnationResult:
    concrete: str
    reference: str
    status: Status
    forward: DirectionResult
    backward: DirectionResult


@dataclass(frozen=True)
class ReferenceResult:
    reference: str
    missing: bool
    incarnations: tuple[IncarnationResult, ...]


@dataclass(frozen=True)
class ConformanceReport:
    concrete: str
    reference: str
    mapping: str
    results: tuple[ReferenceResult, ...]
    warnings: tuple[str, ...]
    overall: Status

    def not_conforming(self) -> tuple[str, ...]:
        """Concrete names (reference names for missing elements) judged not conform."""
        names: list[str] = []
        for result in self.results:
            if result.missing:
                names.append(result.reference)
            for inc in result.incarnations:
                if inc.status is Status.NOT_CONFORM:
                    names.append(inc.concrete)
        return tuple(names)

    def unknown(self) -> tuple[str, ...]:
        names: list[str] = []
        for result in self.results:
            for inc in result.incarnations:
                if inc.status in (Status.UNKNOWN, Status.NO_COMPLETED_PATH):
                    names.append(inc.concrete)
        return tuple(names)


def _combine(forward: Status, backward: Status) -> Status:
    both = (forward, backward)
    if Status.NOT_CONFORM in both:
        return Status.NOT_CONFORM
    if Status.UNKNOWN in both:
        return Status.UNKNOWN
    if Status.NO_COMPLETED_PATH in both:
        return Status.NO_COMPLETED_PATH
    return Status.CONFORM


def check_conformance(
    concrete: ProcessModel,
    reference: ProcessModel,
    mapping_name: str,
    stats: SearchStats | None = None,
) -> ConformanceReport:
    """Check every reference task and event against its incarnations.

    A reference element without any incarnation counts as not conform; an
    incarnation conforms only if both directions do. Overall verdict:
    NotConform beats Unknown beats Conform; a no-completed-path search makes
    the overall verdict Unknown.
    """
    require_valid(concrete)
    require_valid(reference)
    inc_map = resolve_mapping(reference, concrete, mapping_name)

    results: list[ReferenceResult] = []
    for element in reference.tasks_and_events():
        incarnations = inc_map.incarnations_of(element.name)
        if not incarnations:
            results.append(ReferenceResult(element.name, True, ()))
            continue
        succ = successor_formula(reference, element.name)
        pred = predecessor_formula(reference, element.name)
        per_inc: list[IncarnationResult] = []
        for inc in incarnations:
            fwd = check_incarnation(Direction.FORWARD, concrete, succ, inc, inc_map, stats)
            bwd = check_incarnation(Direction.BACKWARD, concrete, pred, inc, inc_map, stats)
            per_inc.append(IncarnationResult(
                inc,
                element.name,
                _combine(fwd.status, bwd.status),
                DirectionResult(Direction.FORWARD, fwd.status, fwd.witness, succ.render()),
                DirectionResult(Direction.BACKWARD, bwd.status, bwd.witness, pred.render()),
            ))
        results.append(ReferenceResult(element.name, False, tuple(per_inc)))

    statuses = [inc.status for result in results for inc in result.incarnations]
    if any(result.missing for result in results) or Status.NOT_CONFORM in statuses:
        overall = Status.NOT_CONFORM
    elif Status.UNKNOWN in statuses or Status.NO_COMPLETED_PATH in statuses:
        overall = Status.UNKNOWN
    else:
        overall = Status.CONFORM
    return ConformanceReport(
        concrete.name, reference.name, mapping_name, tuple(results), inc_map.warnings, overall,
    )
