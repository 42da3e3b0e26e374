"""Reference-conformance checking for workflow process models.

Parse `.wfm` process models, resolve incarnation mappings, derive local
causal-dependency formulas from a reference model, and check a concrete model
against them with witness traces for every finding. Ships with an HTTP
service, a CLI, and an independent token-game trace oracle for testing.
"""

__version__ = "0.1.0"

from .checker import (
    ConformanceReport,
    Direction,
    DirectionResult,
    IncarnationResult,
    IncarnationVerdict,
    ReferenceResult,
    SearchStats,
    Status,
    check_conformance,
    check_incarnation,
)
from .corpus import CorpusCase, CorpusError, load_corpus
from .formula import (
    TRUE,
    Conj,
    CycleError,
    ExclDisj,
    Formula,
    InclDisj,
    Var,
    predecessor_formula,
    successor_formula,
)
from .incarnation import IncarnationMap, MappingError, resolve_mapping
from .model import (
    Diagnostic,
    Node,
    NodeKind,
    ProcessModel,
    SequenceFlow,
    Stereotype,
    UnknownNodeError,
    ValidationFailure,
    models_equivalent,
    require_valid,
    validate,
)
from .oracle import TraceSet, enumerate_traces, trace_permissible
from .reporting import render_report_text, report_from_dict, report_to_dict
from .text import ParseError, ParseFailure, SourceSpan, parse, parse_file, to_wfm

__all__ = [
    "__version__",
    "ConformanceReport", "Direction", "DirectionResult", "IncarnationResult",
    "IncarnationVerdict", "ReferenceResult", "SearchStats", "Status",
    "check_conformance", "check_incarnation",
    "CorpusCase", "CorpusError", "load_corpus",
    "TRUE", "Conj", "CycleError", "ExclDisj", "Formula", "InclDisj", "Var",
    "predecessor_formula", "successor_formula",
    "IncarnationMap", "MappingError", "resolve_mapping",
    "Diagnostic", "Node", "NodeKind", "ProcessModel", "SequenceFlow",
    "Stereotype", "UnknownNodeError", "ValidationFailure",
    "models_equivalent", "require_valid", "validate",
    "TraceSet", "enumerate_traces", "trace_permissible",
    "render_report_text", "report_from_dict", "report_to_dict",
    "ParseError", "ParseFailure", "SourceSpan", "parse", "parse_file", "to_wfm",
]
