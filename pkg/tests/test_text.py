"""Checks for the .wfm reader and writer."""

import pytest

from wfmcheck import (
    NodeKind,
    ParseFailure,
    Stereotype,
    parse,
    parse_file,
    to_wfm,
)

MINIMAL = """
process P {
  event start S;
  event end E;
  task T;
  S -> T -> E;
}
"""


def errors_of(source: str) -> list[str]:
    with pytest.raises(ParseFailure) as info:
        parse(source)
    return [str(e) for e in info.value.errors]


def test_parse_minimal_model():
    model = parse(MINIMAL)
    assert model.name == "P"
    assert [n.name for n in model.nodes] == ["S", "E", "T"]
    assert model.node("S").kind is NodeKind.START_EVENT
    assert [(f.source, f.target) for f in model.flows] == [("S", "T"), ("T", "E")]


def test_flow_chain_expands_pairwise():
    model = parse("process P { event start A; task B; task C; event end D; A -> B -> C -> D; }")
    assert [(f.source, f.target) for f in model.flows] == [("A", "B"), ("B", "C"), ("C", "D")]


def test_comments_are_ignored():
    source = """
    // header comment
    process P { /* block
    spanning lines */ event start S; event end E;
    S -> E; // trailing
    }
    """
    model = parse(source)
    assert model.name == "P"
    assert len(model.flows) == 1


def test_gateway_declarations():
    source = """
    process P {
      event start S; event end E;
      task A; task B;
      gateway and split F; gateway and merge J;
      S -> F; F -> A -> J; F -> B -> J; J -> E;
    }
    """
    model = parse(source)
    assert model.node("F").kind is NodeKind.AND_SPLIT
    assert model.node("J").kind is NodeKind.AND_MERGE


def test_stereotypes_attach_in_order():
    model = parse('process P { <<ref="X">> <<alt="Y">> task T; event start S; event end E; S -> T -> E; }')
    assert model.node("T").stereotypes == (Stereotype("ref", "X"), Stereotype("alt", "Y"))


def test_stereotypes_parse_in_fixture(sequential_writing):
    assert sequential_writing.node("Concept").stereotypes == (Stereotype("ref", "Main"),)
    assert sequential_writing.node("Implementation").stereotypes == (Stereotype("ref", "Main"),)
    assert sequential_writing.node("Draft").stereotypes == ()


def test_duplicate_mapping_stereotype_rejected():
    messages = errors_of('process P { <<ref="X">> <<ref="Y">> task T; }')
    assert any("duplicate stereotype for mapping 'ref'" in m for m in messages)


def test_stereotype_on_gateway_rejected():
    messages = errors_of('process P { <<ref="X">> gateway and split G; }')
    assert any("not allowed on gateway declarations" in m for m in messages)


def test_unterminated_block_comment():
    messages = errors_of("process P { /* never closed")
    assert any("unterminated block comment" in m for m in messages)


def test_unterminated_string():
    source = 'process P {\n  <<ref="Draft>> task A;\n  event start S; event end E;\n  S -> E;\n}'
    messages = errors_of(source)
    assert any("unterminated string" in m for m in messages)


def test_unexpected_character_reported_with_position():
    messages = errors_of("process P { task A; ? }")
    assert any("unexpected character '?'" in m for m in messages)
    assert any(m.startswith("1:21") for m in messages)


def test_reserved_word_cannot_name_a_node():
    messages = errors_of("process P { task task; }")
    assert any("reserved word" in m for m in messages)


def test_unsupported_construct_named_in_error():
    messages = errors_of("process P { lane Left; event start S; event end E; S -> E; }")
    assert any("unsupported construct 'lane'" in m for m in messages)


def test_flow_to_undeclared_node_rejected():
    messages = errors_of("process P { event start S; event end E; S -> Ghost -> E; }")
    assert any("undeclared node 'Ghost'" in m for m in messages)


def test_missing_process_keyword():
    messages = errors_of("model P { }")
    assert any("expected 'process'" in m for m in messages)


def test_trailing_content_rejected():
    messages = errors_of("process P { event start S; event end E; S -> E; } extra")
    assert any("unexpected content after closing '}'" in m for m in messages)


def test_errors_are_collected_not_first_only():
    source = "process P { lane X; task task; event middle M; }"
    messages = errors_of(source)
    assert len(messages) >= 3


def test_round_trip_every_fixture(models):
    for model in models.values():
        assert parse(to_wfm(model)) == model


def test_round_trip_preserves_declaration_order(anti_pattern):
    text = to_wfm(anti_pattern)
    again = parse(text)
    assert [n.name for n in again.nodes] == [n.name for n in anti_pattern.nodes]
    assert again.flows == anti_pattern.flows


def test_parse_file_reads_fixture(corpus_dir):
    model = parse_file(corpus_dir / "models" / "skip.wfm")
    assert model.name == "Skip"
