"""Model builders used by property and complexity tests."""

from random import Random

from wfmcheck import Node, NodeKind, ProcessModel, SequenceFlow, Stereotype

_GATEWAY_KINDS = (
    NodeKind.AND_SPLIT,
    NodeKind.AND_MERGE,
    NodeKind.XOR_SPLIT,
    NodeKind.XOR_MERGE,
    NodeKind.OR_SPLIT,
    NodeKind.OR_MERGE,
)


def random_model(rng: Random) -> ProcessModel:
    """A random syntactically well-formed model; not necessarily valid."""
    nodes = [Node("Go", NodeKind.START_EVENT), Node("Halt", NodeKind.END_EVENT)]
    for i in range(rng.randint(1, 9)):
        stereotypes = []
        for mapping in ("ref", "alt"):
            if rng.random() < 0.2:
                stereotypes.append(Stereotype(mapping, f"Ref_{rng.randint(0, 5)}"))
        nodes.append(Node(f"Step{i}_{rng.randint(0, 99)}", NodeKind.TASK, tuple(stereotypes)))
    for i in range(rng.randint(0, 4)):
        nodes.append(Node(f"Gate{i}", rng.choice(_GATEWAY_KINDS)))

    names = [node.name for node in nodes]
    flows = []
    for _ in range(rng.randint(0, 2 * len(names))):
        flows.append(SequenceFlow(rng.choice(names), rng.choice(names)))
    return ProcessModel(f"Random{rng.randint(0, 9999)}", tuple(nodes), tuple(flows))


def layered_model(tasks: int = 50, with_or_block: bool = False) -> ProcessModel:
    """A loop-free stress model: AND blocks, a task chain, 5 nested XOR blocks.

    The task count is held at `tasks`; with_or_block splices a 4-way inclusive
    block into the lead chain (adding its four branch tasks on top).
    """
    nodes = [Node("Start", NodeKind.START_EVENT), Node("End", NodeKind.END_EVENT)]
    flows = []

    def task(name):
        nodes.append(Node(name, NodeKind.TASK))
        return name

    def gateway(name, kind):
        nodes.append(Node(name, kind))
        return name

    def connect(a, b):
        flows.append(SequenceFlow(a, b))

    tip = "Start"
    for name in ("Lead1", "Lead2"):
        connect(tip, task(name))
        tip = name

    if with_or_block:
        connect(tip, gateway("WideSplit", NodeKind.OR_SPLIT))
        gateway("WideMerge", NodeKind.OR_MERGE)
        for i in range(4):
            name = task(f"Wide{i + 1}")
            connect("WideSplit", name)
            connect(name, "WideMerge")
        tip = "WideMerge"

    for i in range(1, 4):
        split, merge = f"ParSplit{i}", f"ParMerge{i}"
        connect(tip, gateway(split, NodeKind.AND_SPLIT))
        gateway(merge, NodeKind.AND_MERGE)
        for arm in ("A", "B"):
            name = task(f"Par{i}{arm}")
            connect(split, name)
            connect(name, merge)
        tip = merge

    # 2 lead + 6 parallel + 10 alternative + 1 tail are fixed
    for i in range(1, tasks - 18):
        name = task(f"Fill{i}")
        connect(tip, name)
        tip = name

    for i in range(1, 6):
        split = gateway(f"AltSplit{i}", NodeKind.XOR_SPLIT)
        gateway(f"AltMerge{i}", NodeKind.XOR_MERGE)
        connect(tip, split)
        side = task(f"Alt{i}B")
        connect(split, side)
        connect(side, f"AltMerge{i}")
        tip = task(f"Alt{i}A")
        connect(split, tip)
    connect(tip, "AltMerge5")
    for i in range(5, 1, -1):
        connect(f"AltMerge{i}", f"AltMerge{i - 1}")

    connect("AltMerge1", task("Tail"))
    connect("Tail", "End")
    name = "StressWide" if with_or_block else "Stress"
    return ProcessModel(name, tuple(nodes), tuple(flows))
