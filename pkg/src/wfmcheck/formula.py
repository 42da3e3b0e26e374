"""Propositional formulas over task/event names, and their derivation from
the neighborhood of a node in a process model.

For every task or event we can build two formulas: one over its direct
predecessors and one over its direct successors, where gateways between the
node and those neighbors determine the connective (parallel -> conjunction,
exclusive -> exclusive disjunction, inclusive -> inclusive disjunction).
A formula is evaluated against a set of names; the exclusive disjunction is
n-ary and true iff exactly one operand is true.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .model import Node, NodeKind, ProcessModel


class CycleError(Exception):
    """A gateway was revisited before any task or event broke the loop."""


class Formula:
    def evaluate(self, names: Iterable[str]) -> bool:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.render()


class _TruthType(Formula):
    """The vacuous constraint: a node with no neighbors in the direction."""

    def evaluate(self, names: Iterable[str]) -> bool:
        return True

    def render(self) -> str:
        return "TRUE"

    def __repr__(self) -> str:
        return "TRUE"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _TruthType)

    def __hash__(self) -> int:
        return hash(_TruthType)


TRUE = _TruthType()


@dataclass(frozen=True)
class Var(Formula):
    name: str

    def evaluate(self, names: Iterable[str]) -> bool:
        return self.name in names

    def render(self) -> str:
        return self.name


class _Nary(Formula):
    """Shared behavior of the three n-ary connectives.

    Operands are deduplicated; order is kept for rendering but ignored by
    equality. A single operand collapses to that operand, an empty operand
    list to TRUE.
    """

    op: str
    operands: tuple[Formula, ...]

    def __new__(cls, operands: Iterable[Formula]):
        unique: list[Formula] = []
        for operand in operands:
            if operand not in unique:
                unique.append(operand)
        if not unique:
            return TRUE
        if len(unique) == 1:
            return unique[0]
        self = object.__new__(cls)
        self.operands = tuple(unique)
        return self

    def render(self) -> str:
        parts = []
        for operand in self.operands:
            text = operand.render()
            if isinstance(operand, _Nary):
                text = f"({text})"
            parts.append(text)
        return f" {self.op} ".join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.operands)!r})"

    def __eq__(self, other: object) -> bool:
        return type(other) is type(self) and frozenset(other.operands) == frozenset(self.operands)

    def __hash__(self) -> int:
        return hash((type(self), frozenset(self.operands)))


class Conj(_Nary):
    op = "AND"

    def evaluate(self, names: Iterable[str]) -> bool:
        present = set(names)
        return all(operand.evaluate(present) for operand in self.operands)


class ExclDisj(_Nary):
    op = "XOR"

    def evaluate(self, names: Iterable[str]) -> bool:
        present = set(names)
        return sum(1 for operand in self.operands if operand.evaluate(present)) == 1


class InclDisj(_Nary):
    op = "OR"

    def evaluate(self, names: Iterable[str]) -> bool:
        present = set(names)
        return any(operand.evaluate(present) for operand in self.operands)


# Gateway kinds that introduce a connective, per direction; the remaining
# gateway kinds are transparent in that direction.
_FORWARD_CONNECTIVE: dict[NodeKind, type] = {
    NodeKind.AND_SPLIT: Conj,
    NodeKind.XOR_SPLIT: ExclDisj,
    NodeKind.OR_SPLIT: InclDisj,
}
_BACKWARD_CONNECTIVE: dict[NodeKind, type] = {
    NodeKind.AND_MERGE: Conj,
    NodeKind.XOR_MERGE: InclDisj,
    NodeKind.OR_MERGE: InclDisj,
}


def _local_formula(
    model: ProcessModel,
    name: str,
    neighbors: Callable[[str], tuple[Node, ...]],
    connective: dict[NodeKind, type],
    label: str,
) -> Formula:
    origin = model.node(name)
    if origin.kind.is_gateway:
        raise ValueError(f"{label} formulas are defined for tasks and events, not for gateway {name!r}")

    def of(node: Node, path: frozenset[str]) -> Formula:
        if node.kind.is_task_or_event:
            return Var(node.name)
        if node.name in path:
            raise CycleError(
                f"gateway {node.name!r} revisited while deriving the {label} formula of {name!r}; "
                "gateway cycles without an intervening task or event are not supported"
            )
        parts = [of(nb, path | {node.name}) for nb in neighbors(node.name)]
        ctor = connective.get(node.kind)
        if ctor is not None:
            return ctor(parts)
        if len(parts) != 1:
            raise ValueError(f"gateway {node.name!r} should be transparent here but has {len(parts)} {label}s")
        return parts[0]

    parts = [of(nb, frozenset()) for nb in neighbors(name)]
    if not parts:
        return TRUE
    if len(parts) == 1:
        return parts[0]
    return Conj(parts)


def successor_formula(model: ProcessModel, name: str) -> Formula:
    """Constraint that one execution of `name` places on the tasks and events
    reachable after it, up to the first task/event on every branch."""
    return _local_formula(model, name, model.successors, _FORWARD_CONNECTIVE, "successor")


def predecessor_formula(model: ProcessModel, name: str) -> Formula:
    """Constraint that one execution of `name` places on the tasks and events
    leading into it, up to the first task/event on every branch."""
    return _local_formula(model, name, model.predecessors, _BACKWARD_CONNECTIVE, "predecessor")
