"""Checks for the fixture-corpus loader."""

import json

import pytest

from wfmcheck import CorpusError, Status, load_corpus


def write_corpus(root, records, with_model=True):
    if with_model:
        (root / "m.wfm").write_text("process M { event start S; event end E; S -> E; }")
    (root / "manifest.json").write_text(json.dumps(records))
    return root


GOOD = {"name": "case", "concrete": "m.wfm", "reference": "m.wfm", "mapping": "ref",
        "expect": "conform", "expectNodes": []}


def test_bundled_corpus_loads(cases):
    assert len(cases) == 21
    names = [case.name for case in cases]
    assert len(set(names)) == len(names)
    assert "identity-check" in names
    assert sum(case.expect is Status.CONFORM for case in cases) == 11
    assert sum(case.expect is Status.NOT_CONFORM for case in cases) == 10
    for case in cases:
        assert case.concrete_path.is_file() and case.reference_path.is_file()
        assert case.mapping == "ref"


def test_expected_nodes_parsed(cases):
    by_name = {case.name: case for case in cases}
    assert by_name["n01-task-order-switched"].expect_nodes == ("Research", "Draft")
    assert by_name["c01-parallel-tasks-sequentialized"].expect_nodes == ()


def test_minimal_manifest(tmp_path):
    cases = load_corpus(write_corpus(tmp_path, [GOOD]))
    assert len(cases) == 1
    assert cases[0].expect is Status.CONFORM
    assert cases[0].expect_nodes == ()


def test_missing_manifest(tmp_path):
    with pytest.raises(CorpusError, match="no manifest"):
        load_corpus(tmp_path)


def test_malformed_json(tmp_path):
    (tmp_path / "manifest.json").write_text("{nope")
    with pytest.raises(CorpusError, match="not valid JSON"):
        load_corpus(tmp_path)


def test_manifest_must_be_an_array(tmp_path):
    (tmp_path / "manifest.json").write_text("{}")
    with pytest.raises(CorpusError, match="JSON array"):
        load_corpus(tmp_path)


def test_missing_fields_reported(tmp_path):
    record = {"name": "case", "concrete": "m.wfm"}
    write_corpus(tmp_path, [record])
    with pytest.raises(CorpusError, match="missing fields: reference, mapping, expect"):
        load_corpus(tmp_path)


def test_unknown_expected_status(tmp_path):
    record = dict(GOOD, expect="maybe")
    write_corpus(tmp_path, [record])
    with pytest.raises(CorpusError, match="unknown expect 'maybe'"):
        load_corpus(tmp_path)


def test_missing_model_file(tmp_path):
    record = dict(GOOD, reference="gone.wfm")
    write_corpus(tmp_path, [record])
    with pytest.raises(CorpusError, match="missing file"):
        load_corpus(tmp_path)


def test_duplicate_case_names(tmp_path):
    write_corpus(tmp_path, [GOOD, dict(GOOD)])
    with pytest.raises(CorpusError, match="unique"):
        load_corpus(tmp_path)
