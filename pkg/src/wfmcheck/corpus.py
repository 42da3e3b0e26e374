"""Loader for the fixture corpus: model files plus a manifest of expected
verdicts, consumed by the test suite and the `corpus` CLI subcommand.

The manifest is a JSON array; each record names a case, the concrete and
reference model files (relative to the corpus directory), the incarnation
mapping, the expected overall status, and the nodes expected to be flagged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .checker import Status


class CorpusError(Exception):
    """The corpus directory or its manifest is unusable."""


@dataclass(frozen=True)
class CorpusCase:
    name: str
    concrete_path: Path
    reference_path: Path
    mapping: str
    expect: Status
    expect_nodes: tuple[str, ...]


_REQUIRED = ("name", "concrete", "reference", "mapping", "expect")


def load_corpus(directory: str | Path) -> list[CorpusCase]:
    root = Path(directory)
    manifest_path = root / "manifest.json"
    try:
        records = json.loads(manifest_path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise CorpusError(f"no manifest at {manifest_path}") from None
    except json.JSONDecodeError as exc:
        raise CorpusError(f"manifest {manifest_path} is not valid JSON: {exc}") from None
    if not isinstance(records, list):
        raise CorpusError("manifest must be a JSON array of case records")

    cases: list[CorpusCase] = []
    for i, record in enumerate(records):
        missing = [key for key in _REQUIRED if key not in record]
        if missing:
            raise CorpusError(f"record {i} is missing fields: {', '.join(missing)}")
        try:
            expect = Status(record["expect"])
        except ValueError:
            raise CorpusError(f"record {record['name']!r} has unknown expect {record['expect']!r}") from None
        concrete = root / record["concrete"]
        reference = root / record["reference"]
        for path in (concrete, reference):
            if not path.is_file():
                raise CorpusError(f"record {record['name']!r} references missing file {path}")
        cases.append(CorpusCase(
            record["name"],
            concrete,
            reference,
            record["mapping"],
            expect,
            tuple(record.get("expectNodes", ())),
        ))
    names = [case.name for case in cases]
    if len(set(names)) != len(names):
        raise CorpusError("case names must be unique")
    return cases
