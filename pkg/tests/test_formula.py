"""Checks for formula construction, evaluation, and derivation from models."""

import pytest

from wfmcheck import (
    TRUE,
    Conj,
    CycleError,
    ExclDisj,
    InclDisj,
    Var,
    parse,
    predecessor_formula,
    successor_formula,
)

A, B, C = Var("A"), Var("B"), Var("C")


def test_reference_successor_of_parallel_block(paper_authoring):
    formula = successor_formula(paper_authoring, "Draft")
    assert formula == Conj([Var("Introduction"), Var("Main"), Var("Conclusion")])
    assert formula.render() == "Introduction AND Main AND Conclusion"


def test_reference_successor_through_exclusive_choice(paper_authoring):
    formula = successor_formula(paper_authoring, "Review")
    inner = Conj([Var("Introduction"), Var("Main"), Var("Conclusion")])
    assert formula == ExclDisj([inner, Var("Done")])
    assert formula.render() == "(Introduction AND Main AND Conclusion) XOR Done"


def test_reference_predecessor_of_review(paper_authoring):
    formula = predecessor_formula(paper_authoring, "Review")
    assert formula.render() == "Introduction AND Main AND Conclusion"


def test_exclusive_merge_reads_as_inclusive_backward(paper_authoring):
    # several inflows of an exclusive merge may all have run over time
    formula = predecessor_formula(paper_authoring, "Introduction")
    assert formula == InclDisj([Var("Draft"), Var("Review")])


def test_inclusive_gateways(editing):
    assert successor_formula(editing, "Shorten") == InclDisj([Var("SpellCheck"), Var("FactCheck")])
    assert predecessor_formula(editing, "Publish") == InclDisj([Var("SpellCheck"), Var("FactCheck")])


def test_no_neighbors_means_vacuous(paper_authoring):
    assert predecessor_formula(paper_authoring, "Start") is TRUE
    assert successor_formula(paper_authoring, "Done") is TRUE


def test_gateway_origin_rejected(paper_authoring):
    with pytest.raises(ValueError):
        successor_formula(paper_authoring, "Fork")


def test_unbroken_gateway_cycle_detected():
    model = parse("""
    process Cyc {
      event start Start; event end Done;
      task A; task B;
      gateway xor merge m; gateway xor split s;
      Start -> A -> m; m -> s; s -> m; s -> B; B -> Done;
    }
    """)
    with pytest.raises(CycleError) as info:
        successor_formula(model, "A")
    assert "gateway 's'" in str(info.value) or "gateway 'm'" in str(info.value)


def test_operands_deduplicate():
    assert Conj([A, B, A]) == Conj([A, B])
    assert Conj([Conj([A, B]), Conj([B, A])]) == Conj([A, B])


def test_single_operand_collapses():
    assert Conj([A]) is A
    assert ExclDisj([B]) is B


def test_empty_operands_are_vacuous():
    assert Conj([]) is TRUE
    assert InclDisj([]) is TRUE


def test_equality_ignores_operand_order_render_keeps_it():
    assert Conj([A, B]) == Conj([B, A])
    assert hash(Conj([A, B])) == hash(Conj([B, A]))
    assert Conj([A, B]).render() == "A AND B"
    assert Conj([B, A]).render() == "B AND A"
    assert Conj([A, B]) != InclDisj([A, B])


def test_nested_rendering_parenthesizes():
    assert ExclDisj([Conj([A, B]), C]).render() == "(A AND B) XOR C"
    assert str(InclDisj([C, ExclDisj([A, B])])) == "C OR (A XOR B)"


def test_conjunction_semantics():
    formula = Conj([A, B])
    assert formula.evaluate({"A", "B", "X"})
    assert not formula.evaluate({"A"})
    assert not formula.evaluate(set())


def test_exclusive_disjunction_is_exactly_one():
    formula = ExclDisj([A, B, C])
    assert formula.evaluate({"A"})
    assert formula.evaluate({"C", "X"})
    assert not formula.evaluate({"A", "B"})
    assert not formula.evaluate({"A", "B", "C"})
    assert not formula.evaluate(set())


def test_inclusive_disjunction_is_at_least_one():
    formula = InclDisj([A, B])
    assert formula.evaluate({"B"})
    assert formula.evaluate({"A", "B"})
    assert not formula.evaluate({"X"})


def test_vacuous_formula_always_holds():
    assert TRUE.evaluate(set())
    assert TRUE.evaluate({"anything"})
    assert TRUE == TRUE and TRUE.render() == "TRUE"


def test_variable_evaluates_membership():
    assert A.evaluate({"A"})
    assert not A.evaluate({"B"})
    assert A.render() == "A"
