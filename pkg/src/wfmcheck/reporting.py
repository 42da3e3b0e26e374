"""Rendering of conformance reports: console text and a JSON-friendly codec.

The text layout is the tool's stable console contract: a header naming both
models, a final-result block, and one explanation block per non-conform or
undetermined finding, each with its witness trace.
"""

from __future__ import annotations

from typing import Any

from .checker import (
    ConformanceReport,
    Direction,
    DirectionResult,
    IncarnationResult,
    ReferenceResult,
    Status,
)

_DIRECTION_NOUN = {Direction.FORWARD: "run", Direction.BACKWARD: "backtrack"}


def _name_list(names: tuple[str, ...]) -> str:
    return "[" + ", ".join(names) + "]"


def _explanation_blocks(report: ConformanceReport) -> list[list[str]]:
    blocks: list[list[str]] = []
    for result in report.results:
        if result.missing:
            blocks.append([
                f"Result: Node [{report.reference}:{result.reference}] has no incarnation in [{report.concrete}]"
            ])
        for inc in result.incarnations:
            for direction_result in (inc.forward, inc.backward):
                block = _direction_block(report, inc, direction_result)
                if block:
                    blocks.append(block)
    return blocks


def _direction_block(
    report: ConformanceReport, inc: IncarnationResult, result: DirectionResult
) -> list[str]:
    node = f"[{report.concrete}:{inc.concrete}]"
    target = f"[{report.reference}:{inc.reference}]"
    noun = _DIRECTION_NOUN[result.direction]
    if result.status is Status.NOT_CONFORM:
        return [
            f"Result: Node {node} does not conform to Node {target}",
            f"Counter example: The following {noun} {_name_list(result.witness)} "
            f"is possible in [{report.concrete}] but not in [{report.reference}].",
        ]
    if result.status is Status.UNKNOWN:
        return [
            f"Result: Node {node} may not conform to Node {target}",
            f"Counter example: The following {noun} {_name_list(result.witness)} "
            f"is possible in [{report.concrete}] but may not be possible in [{report.reference}].",
        ]
    if result.status is Status.NO_COMPLETED_PATH:
        return [
            f"Result: Node {node} has no completed {noun} in [{report.concrete}]; "
            f"conformance to Node {target} is undetermined"
        ]
    return []


def render_report_text(report: ConformanceReport) -> str:
    """Console report; ends without a trailing newline."""
    lines = [
        f"Checking Conformance of [Concrete:{report.concrete}] to [Reference:{report.reference}]",
        "",
        "--- Final Result of Conformance Checking ---",
    ]
    not_conforming = report.not_conforming()
    unknown = report.unknown()
    if not not_conforming and not unknown:
        lines.append("--- All nodes conform to their reference ---")
        return "\n".join(lines)
    if not_conforming:
        lines.append(f"The following nodes do not conform: {_name_list(not_conforming)}")
    if unknown:
        lines.append(f"The status of the following nodes is unknown: {_name_list(unknown)}")
    blocks = _explanation_blocks(report)
    lines.append("")
    lines.append("-------- Explanations --------: ")
    for block in blocks:
        lines.append("")
        lines.extend(block)
    return "\n".join(lines)


def report_to_dict(report: ConformanceReport) -> dict[str, Any]:
    def direction(result: DirectionResult) -> dict[str, Any]:
        return {
            "direction": result.direction.value,
            "status": result.status.value,
            "witness": list(result.witness) if result.witness is not None else None,
            "formula": result.formula,
        }

    return {
        "concrete": report.concrete,
        "reference": report.reference,
        "mapping": report.mapping,
        "overall": report.overall.value,
        "warnings": list(report.warnings),
        "results": [
            {
                "reference": result.reference,
                "missing": result.missing,
                "incarnations": [
                    {
                        "concrete": inc.concrete,
                        "reference": inc.reference,
                        "status": inc.status.value,
                        "forward": direction(inc.forward),
                        "backward": direction(inc.backward),
                    }
                    for inc in result.incarnations
                ],
            }
            for result in report.results
        ],
    }


def report_from_dict(data: dict[str, Any]) -> ConformanceReport:
    def direction(payload: dict[str, Any]) -> DirectionResult:
        witness = payload["witness"]
        return DirectionResult(
            Direction(payload["direction"]),
            Status(payload["status"]),
            tuple(witness) if witness is not None else None,
            payload["formula"],
        )

    results = tuple(
        ReferenceResult(
            item["reference"],
            item["missing"],
            tuple(
                IncarnationResult(
                    inc["concrete"],
                    inc["reference"],
                    Status(inc["status"]),
                    direction(inc["forward"]),
                    direction(inc["backward"]),
                )
                for inc in item["incarnations"]
            ),
        )
        for item in data["results"]
    )
    return ConformanceReport(
        data["concrete"],
        data["reference"],
        data["mapping"],
        results,
        tuple(data["warnings"]),
        Status(data["overall"]),
    )
