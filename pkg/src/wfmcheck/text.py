"""Reader and writer for the textual process-model format (`.wfm` files).

The format declares a model as `process Name { ... }` containing task, event,
and gateway declarations plus flow chains like `A -> B -> C;`. Stereotype
annotations of the form `<<mapping="Reference">>` may prefix task and event
declarations. Line comments (`//`) and block comments (`/* */`) are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import Node, NodeKind, ProcessModel, SequenceFlow, Stereotype

KEYWORDS = frozenset({
    "process", "task", "event", "start", "end",
    "gateway", "and", "xor", "or", "split", "merge",
})

# Constructs from the wider workflow language that this tool deliberately
# rejects instead of skipping silently.
UNSUPPORTED = frozenset({
    "lane", "pool", "data", "message", "subprocess", "call",
    "condition", "loop", "expression", "send", "receive", "timer",
})

PUNCT = ("->", "<<", ">>", "{", "}", ";", "=")


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    length: int = 1

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class ParseError:
    span: SourceSpan
    message: str
    expected: tuple[str, ...] = ()

    def __str__(self) -> str:
        text = f"{self.span}: {self.message}"
        if self.expected:
            text += " (expected " + " or ".join(self.expected) + ")"
        return text


class ParseFailure(Exception):
    """Raised when the input could not be turned into a model."""

    def __init__(self, errors: list[ParseError]):
        self.errors = errors
        super().__init__("; ".join(str(e) for e in errors))


@dataclass(frozen=True)
class Token:
    kind: str  # "ident" | "string" | "punct" | "eof"
    text: str
    line: int
    column: int

    @property
    def span(self) -> SourceSpan:
        return SourceSpan(self.line, self.column, max(len(self.text), 1))


def _tokenize(source: str) -> tuple[list[Token], list[ParseError]]:
    tokens: list[Token] = []
    errors: list[ParseError] = []
    i, line, col = 0, 1, 1
    n = len(source)

    def advance(count: int) -> None:
        nonlocal i, line, col
        for _ in range(count):
            if i < n and source[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = source[i]
        if ch in " \t\r\n":
            advance(1)
            continue
        if source.startswith("//", i):
            while i < n and source[i] != "\n":
                advance(1)
            continue
        if source.startswith("/*", i):
            start_line, start_col = line, col
            advance(2)
            while i < n and not source.startswith("*/", i):
                advance(1)
            if i >= n:
                errors.append(ParseError(SourceSpan(start_line, start_col, 2), "unterminated block comment"))
            else:
                advance(2)
            continue
        if ch == '"':
            start_line, start_col = line, col
            advance(1)
            begin = i
            while i < n and source[i] not in '"\n':
                advance(1)
            value = source[begin:i]
            if i < n and source[i] == '"':
                advance(1)
                tokens.append(Token("string", value, start_line, start_col))
            else:
                errors.append(ParseError(SourceSpan(start_line, start_col, i - begin + 1), "unterminated string"))
            continue
        matched = next((p for p in PUNCT if source.startswith(p, i)), None)
        if matched is not None:
            tokens.append(Token("punct", matched, line, col))
            advance(len(matched))
            continue
        if ch.isalpha() or ch == "_":
            start_line, start_col = line, col
            begin = i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                advance(1)
            tokens.append(Token("ident", source[begin:i], start_line, start_col))
            continue
        errors.append(ParseError(SourceSpan(line, col, 1), f"unexpected character {ch!r}"))
        advance(1)
    tokens.append(Token("eof", "", line, col))
    return tokens, errors


@dataclass
class _Parser:
    tokens: list[Token]
    errors: list[ParseError]
    pos: int = 0
    nodes: list[Node] = field(default_factory=list)
    chains: list[list[Token]] = field(default_factory=list)

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at_punct(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "punct" and tok.text == text

    def at_word(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "ident" and tok.text == text

    def error(self, message: str, *expected: str, span: SourceSpan | None = None) -> None:
        self.errors.append(ParseError(span or self.peek().span, message, tuple(expected)))

    def expect_punct(self, text: str) -> bool:
        if self.at_punct(text):
            self.take()
            return True
        self.error(f"found {self._describe(self.peek())}", f"'{text}'")
        return False

    def expect_name(self, what: str) -> Token | None:
        tok = self.peek()
        if tok.kind == "ident" and tok.text not in KEYWORDS:
            return self.take()
        if tok.kind == "ident":
            self.error(f"{tok.text!r} is a reserved word and cannot name a {what}", "identifier")
            self.take()
            return None
        self.error(f"found {self._describe(tok)}", f"{what} name")
        return None

    @staticmethod
    def _describe(tok: Token) -> str:
        if tok.kind == "eof":
            return "end of input"
        return f"{tok.text!r}"

    def skip_to_semicolon(self) -> None:
        while True:
            tok = self.peek()
            if tok.kind == "eof":
                return
            if tok.kind == "punct" and tok.text in (";", "}"):
                if tok.text == ";":
                    self.take()
                return
            self.take()

    def parse_model(self) -> ProcessModel | None:
        if not self.at_word("process"):
            self.error(f"found {self._describe(self.peek())}", "'process'")
            return None
        self.take()
        name_tok = self.expect_name("process")
        if name_tok is None:
            return None
        if not self.expect_punct("{"):
            return None
        while not self.at_punct("}") and self.peek().kind != "eof":
            self.parse_item()
        if not self.expect_punct("}"):
            return None
        trailing = self.peek()
        if trailing.kind != "eof":
            self.error(f"unexpected content after closing '}}': {self._describe(trailing)}")
        flows = self.resolve_chains()
        return ProcessModel(name_tok.text, tuple(self.nodes), tuple(flows))

    def parse_item(self) -> None:
        tok = self.peek()
        if tok.kind == "punct" and tok.text == "<<":
            stereotypes = self.parse_stereotypes()
            self.parse_declaration(stereotypes)
            return
        if tok.kind == "ident":
            if tok.text in ("task", "event", "gateway"):
                self.parse_declaration(())
                return
            if tok.text in UNSUPPORTED:
                self.error(f"unsupported construct {tok.text!r}; only task, event, gateway, and flow declarations are recognized")
                self.skip_to_semicolon()
                return
            if tok.text in KEYWORDS:
                self.error(f"found {self._describe(tok)}", "declaration", "flow chain")
                self.skip_to_semicolon()
                return
            self.parse_flowchain()
            return
        self.error(f"found {self._describe(tok)}", "declaration", "flow chain")
        self.skip_to_semicolon()

    def parse_stereotypes(self) -> tuple[Stereotype, ...]:
        result: list[Stereotype] = []
        while self.at_punct("<<"):
            open_span = self.peek().span
            self.take()
            mapping_tok = self.peek()
            if mapping_tok.kind != "ident":
                self.error(f"found {self._describe(mapping_tok)}", "mapping name", span=open_span)
                self.skip_to_semicolon()
                return tuple(result)
            self.take()
            ok = self.expect_punct("=")
            value_tok = self.peek()
            if ok and value_tok.kind == "string":
                self.take()
                if any(s.mapping == mapping_tok.text for s in result):
                    self.error(f"duplicate stereotype for mapping {mapping_tok.text!r}", span=mapping_tok.span)
                else:
                    result.append(Stereotype(mapping_tok.text, value_tok.text))
            else:
                self.error(f"found {self._describe(value_tok)}", "quoted reference name")
            self.expect_punct(">>")
        return tuple(result)

    def parse_declaration(self, stereotypes: tuple[Stereotype, ...]) -> None:
        tok = self.peek()
        if self.at_word("task"):
            self.take()
            name = self.expect_name("task")
            if name is not None and self.expect_punct(";"):
                self.nodes.append(Node(name.text, NodeKind.TASK, stereotypes))
            else:
                self.skip_to_semicolon()
            return
        if self.at_word("event"):
            self.take()
            position = self.peek()
            if position.kind == "ident" and position.text in ("start", "end"):
                self.take()
                kind = NodeKind.START_EVENT if position.text == "start" else NodeKind.END_EVENT
                name = self.expect_name("event")
                if name is not None and self.expect_punct(";"):
                    self.nodes.append(Node(name.text, kind, stereotypes))
                else:
                    self.skip_to_semicolon()
            else:
                self.error(f"found {self._describe(position)}", "'start'", "'end'")
                self.skip_to_semicolon()
            return
        if self.at_word("gateway"):
            gw_tok = self.take()
            if stereotypes:
                self.error("stereotypes are not allowed on gateway declarations", span=gw_tok.span)
            logic = self.peek()
            if not (logic.kind == "ident" and logic.text in ("and", "xor", "or")):
                self.error(f"found {self._describe(logic)}", "'and'", "'xor'", "'or'")
                self.skip_to_semicolon()
                return
            self.take()
            role = self.peek()
            if not (role.kind == "ident" and role.text in ("split", "merge")):
                self.error(f"found {self._describe(role)}", "'split'", "'merge'")
                self.skip_to_semicolon()
                return
            self.take()
            kind = NodeKind[f"{logic.text.upper()}_{role.text.upper()}"]
            name = self.expect_name("gateway")
            if name is not None and self.expect_punct(";"):
                self.nodes.append(Node(name.text, kind))
            else:
                self.skip_to_semicolon()
            return
        self.error(f"found {self._describe(tok)}", "'task'", "'event'")
        self.skip_to_semicolon()

    def parse_flowchain(self) -> None:
        names: list[Token] = []
        first = self.expect_name("node")
        if first is None:
            self.skip_to_semicolon()
            return
        names.append(first)
        if not self.at_punct("->"):
            self.error(f"found {self._describe(self.peek())}", "'->'")
            self.skip_to_semicolon()
            return
        while self.at_punct("->"):
            self.take()
            nxt = self.expect_name("node")
            if nxt is None:
                self.skip_to_semicolon()
                return
            names.append(nxt)
        if self.expect_punct(";"):
            self.chains.append(names)
        else:
            self.skip_to_semicolon()

    def resolve_chains(self) -> list[SequenceFlow]:
        declared = {node.name for node in self.nodes}
        flows: list[SequenceFlow] = []
        for chain in self.chains:
            chain_ok = True
            for tok in chain:
                if tok.text not in declared:
                    self.error(f"flow references undeclared node {tok.text!r}", span=tok.span)
                    chain_ok = False
            if chain_ok:
                for source, target in zip(chain, chain[1:]):
                    flows.append(SequenceFlow(source.text, target.text))
        return flows


def parse(source: str) -> ProcessModel:
    """Parse `.wfm` text into a ProcessModel.

    Collects as many problems as possible before giving up; raises
    ParseFailure carrying every ParseError found.
    """
    tokens, errors = _tokenize(source)
    parser = _Parser(tokens, errors)
    model = parser.parse_model()
    if parser.errors:
        raise ParseFailure(parser.errors)
    assert model is not None
    return model


def parse_file(path: str) -> ProcessModel:
    with open(path, encoding="utf-8") as handle:
        return parse(handle.read())


def _declaration_line(node: Node) -> str:
    # NodeKind values double as declaration keywords ("task", "event start", ...)
    prefix = "".join(f'<<{s.mapping}="{s.reference}">> ' for s in node.stereotypes)
    return f"{prefix}{node.kind.value} {node.name};"


def to_wfm(model: ProcessModel) -> str:
    """Render a model back to `.wfm` text; parse(to_wfm(m)) equals m."""
    lines = [f"process {model.name} {{"]
    for node in model.nodes:
        lines.append("  " + _declaration_line(node))
    if model.flows:
        lines.append("")
    for flow in model.flows:
        lines.append(f"  {flow.source} -> {flow.target};")
    lines.append("}")
    return "\n".join(lines) + "\n"
