"""Resolution of the incarnation mapping between a concrete and a reference
model.

A concrete task or event incarnates a reference task or event either through
an explicit stereotype naming the mapping, or implicitly by carrying exactly
the same name and kind. The fallback never fires for a reference element that
already has an explicit incarnation, and never for a concrete node that is
stereotyped under the mapping being resolved.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import NodeKind, ProcessModel


class MappingError(Exception):
    """The stereotypes of the concrete model do not form a usable mapping."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


@dataclass(frozen=True)
class IncarnationMap:
    """Resolved mapping: concrete node name -> reference node name.

    `pairs` preserves concrete declaration order. `unincarnated` lists the
    reference tasks and events that no concrete node incarnates.
    """

    mapping: str
    pairs: dict[str, str]
    unincarnated: tuple[str, ...]
    warnings: tuple[str, ...] = ()

    def incarnations_of(self, reference_name: str) -> tuple[str, ...]:
        return tuple(c for c, r in self.pairs.items() if r == reference_name)

    def reference_of(self, concrete_name: str) -> str | None:
        return self.pairs.get(concrete_name)


def resolve_mapping(reference: ProcessModel, concrete: ProcessModel, mapping_name: str) -> IncarnationMap:
    """Build the incarnation mapping named `mapping_name`, or raise MappingError."""
    problems: list[str] = []
    warnings: list[str] = []
    reference_kinds = {n.name: n.kind for n in reference.nodes if n.kind.is_task_or_event}
    reference_gateways = {n.name for n in reference.nodes if n.kind.is_gateway}

    explicit: dict[str, str] = {}
    for node in concrete.nodes:
        chosen = [s for s in node.stereotypes if s.mapping == mapping_name]
        if not chosen:
            continue
        if node.kind.is_gateway:
            problems.append(f"gateway {node.name!r} carries a stereotype for mapping {mapping_name!r}; gateways cannot incarnate")
            continue
        if len(chosen) > 1:
            problems.append(f"node {node.name!r} carries {len(chosen)} stereotypes for mapping {mapping_name!r}")
            continue
        target = chosen[0].reference
        if target in reference_gateways:
            problems.append(f"stereotype on {node.name!r} targets {target!r}, which is a gateway in {reference.name!r}")
            continue
        if target not in reference_kinds:
            problems.append(f"stereotype on {node.name!r} names {target!r}, which is no task or event of {reference.name!r}")
            continue
        if reference_kinds[target] is not node.kind:
            warnings.append(
                f"{node.kind.value} {node.name!r} incarnates {reference_kinds[target].value} {target!r}; kinds differ"
            )
        explicit[node.name] = target
    if problems:
        raise MappingError(problems)

    explicitly_incarnated = set(explicit.values())
    pairs: dict[str, str] = {}
    for node in concrete.nodes:
        if not node.kind.is_task_or_event:
            continue
        if node.name in explicit:
            pairs[node.name] = explicit[node.name]
            continue
        if any(s.mapping == mapping_name for s in node.stereotypes):
            continue
        target_kind = reference_kinds.get(node.name)
        if target_kind is node.kind and node.name not in explicitly_incarnated:
            pairs[node.name] = node.name

    incarnated = set(pairs.values())
    unincarnated = tuple(
        n.name for n in reference.nodes if n.kind.is_task_or_event and n.name not in incarnated
    )
    return IncarnationMap(mapping_name, pairs, unincarnated, tuple(warnings))
