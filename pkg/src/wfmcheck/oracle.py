"""Test oracle, independent of the checker: bounded token-game enumeration of
a model's execution traces, and the open-world permissibility predicate that
judges a single trace against a reference model.

The two routes never share search code. The checker walks branch sets over the
node graph; this module plays the standard token game on sequence flows and
then checks formulas over trace segments. Agreement between the two is a test
property, not a construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .formula import Formula, predecessor_formula, successor_formula
from .incarnation import IncarnationMap
from .model import NodeKind, ProcessModel, require_valid


@dataclass(frozen=True)
class TraceSet:
    traces: frozenset[tuple[str, ...]]
    discarded_runs: int

    def sorted(self) -> list[tuple[str, ...]]:
        return sorted(self.traces)


def enumerate_traces(model: ProcessModel, bound: int = 2) -> TraceSet:
    """All complete runs of the token game, each node firing at most `bound`
    times (start events exactly once). Runs whose remaining tokens cannot move
    (deadlock or bound exhaustion) are discarded and only counted.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    require_valid(model)
    flow_count = len(model.flows)
    in_flows: dict[str, list[int]] = {n.name: [] for n in model.nodes}
    out_flows: dict[str, list[int]] = {n.name: [] for n in model.nodes}
    for idx, flow in enumerate(model.flows):
        out_flows[flow.source].append(idx)
        in_flows[flow.target].append(idx)
    kind_of = {n.name: n.kind for n in model.nodes}
    names = [n.name for n in model.nodes]

    def or_merge_ready(gateway: str, tokens: list[int]) -> bool:
        """An inclusive merge fires only when no token elsewhere can still
        reach one of its unmarked incoming flows without passing the merge."""
        gateway_in = in_flows[gateway]
        unmarked = {f for f in gateway_in if tokens[f] == 0}
        if not unmarked:
            return True
        elsewhere = [f for f in range(flow_count) if tokens[f] > 0 and f not in gateway_in]
        seen: set[str] = set()
        frontier = [model.flows[f].target for f in elsewhere]
        while frontier:
            node = frontier.pop()
            if node in seen or node == gateway:
                continue
            seen.add(node)
            for f in out_flows[node]:
                if f in unmarked:
                    return False
                frontier.append(model.flows[f].target)
        return True

    def variants(tokens: list[int], fired: dict[str, int]):
        """Enabled firings as (node, flows to consume, flows to produce)."""
        found: list[tuple[str, tuple[int, ...], tuple[int, ...]]] = []
        for name in names:
            kind = kind_of[name]
            if kind is NodeKind.START_EVENT:
                if fired[name] == 0:
                    found.append((name, (), tuple(out_flows[name])))
                continue
            if fired[name] >= bound:
                continue
            ins = in_flows[name]
            outs = out_flows[name]
            marked = [f for f in ins if tokens[f] > 0]
            if kind in (NodeKind.TASK, NodeKind.AND_SPLIT):
                if marked:
                    found.append((name, (marked[0],), tuple(outs)))
            elif kind is NodeKind.END_EVENT:
                for f in marked:
                    found.append((name, (f,), ()))
            elif kind is NodeKind.XOR_SPLIT:
                if marked:
                    for out in outs:
                        found.append((name, (marked[0],), (out,)))
            elif kind is NodeKind.OR_SPLIT:
                if marked:
                    for size in range(1, len(outs) + 1):
                        for subset in itertools.combinations(outs, size):
                            found.append((name, (marked[0],), subset))
            elif kind is NodeKind.AND_MERGE:
                if len(marked) == len(ins):
                    found.append((name, tuple(ins), tuple(outs)))
            elif kind is NodeKind.XOR_MERGE:
                for f in marked:
                    found.append((name, (f,), tuple(outs)))
            elif kind is NodeKind.OR_MERGE:
                if marked and or_merge_ready(name, tokens):
                    found.append((name, tuple(marked), tuple(outs)))
        return found

    traces: set[tuple[str, ...]] = set()
    discarded = 0

    def dfs(tokens: list[int], fired: dict[str, int], trace: list[str]) -> None:
        nonlocal discarded
        found = variants(tokens, fired)
        if not found:
            if any(tokens):
                discarded += 1
            else:
                traces.add(tuple(trace))
            return
        for name, consume, produce in found:
            next_tokens = list(tokens)
            for f in consume:
                next_tokens[f] -= 1
            for f in produce:
                next_tokens[f] += 1
            next_fired = dict(fired)
            next_fired[name] += 1
            if kind_of[name].is_task_or_event:
                trace.append(name)
                dfs(next_tokens, next_fired, trace)
                trace.pop()
            else:
                dfs(next_tokens, next_fired, trace)

    dfs([0] * flow_count, {name: 0 for name in names}, [])
    return TraceSet(frozenset(traces), discarded)


def trace_permissible(trace: tuple[str, ...], reference: ProcessModel, inc_map: IncarnationMap) -> bool:
    """Does the trace respect the local causal dependencies of the reference?

    For every position whose element incarnates a reference element, the
    predecessor formula must hold on the segment back to the previous
    occurrence of that same element (or the trace start), and the successor
    formula on the segment up to its next occurrence (or the trace end).
    Elements without a reference counterpart are ignored.
    """
    pairs = inc_map.pairs
    cache: dict[str, tuple[Formula, Formula]] = {}

    def formulas(ref_name: str) -> tuple[Formula, Formula]:
        if ref_name not in cache:
            cache[ref_name] = (
                predecessor_formula(reference, ref_name),
                successor_formula(reference, ref_name),
            )
        return cache[ref_name]

    def project(segment: tuple[str, ...]) -> set[str]:
        return {pairs[c] for c in segment if c in pairs}

    for i, concrete_name in enumerate(trace):
        ref_name = pairs.get(concrete_name)
        if ref_name is None:
            continue
        pred_f, succ_f = formulas(ref_name)
        previous = -1
        for j in range(i - 1, -1, -1):
            if trace[j] == concrete_name:
                previous = j
                break
        following = len(trace)
        for j in range(i + 1, len(trace)):
            if trace[j] == concrete_name:
                following = j
                break
        if not pred_f.evaluate(project(trace[previous + 1:i])):
            return False
        if not succ_f.evaluate(project(trace[i + 1:following])):
            return False
    return True
