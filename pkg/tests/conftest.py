"""Shared fixtures over the bundled model corpus."""

import re
from pathlib import Path

import pytest

from wfmcheck import CorpusCase, ProcessModel, load_corpus, parse_file

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"
MODELS_DIR = CORPUS_DIR / "models"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS_DIR


@pytest.fixture(scope="session")
def models() -> dict[str, ProcessModel]:
    """Every fixture model, keyed by file stem."""
    return {path.stem: parse_file(path) for path in sorted(MODELS_DIR.glob("*.wfm"))}


@pytest.fixture(scope="session")
def cases() -> list[CorpusCase]:
    return load_corpus(CORPUS_DIR)


@pytest.fixture(scope="session")
def paper_authoring(models) -> ProcessModel:
    return models["paper_authoring"]


@pytest.fixture(scope="session")
def anti_pattern(models) -> ProcessModel:
    return models["anti_pattern"]


@pytest.fixture(scope="session")
def sequential_writing(models) -> ProcessModel:
    return models["sequential_writing"]


@pytest.fixture(scope="session")
def skip_model(models) -> ProcessModel:
    return models["skip"]


@pytest.fixture(scope="session")
def editing(models) -> ProcessModel:
    return models["editing"]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Repeat the acceptance outcome as one checklist line per criterion."""
    results: dict[int, tuple[str, str]] = {}
    for outcome, verdict in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(outcome, []):
            match = re.search(r"test_criterion_(\d+)_(\w+)", getattr(report, "nodeid", ""))
            if not match:
                continue
            number, slug = int(match.group(1)), match.group(2)
            if verdict == "FAIL" or number not in results:
                results[number] = (slug, verdict)
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(results):
        slug, verdict = results[number]
        terminalreporter.write_line(f"criterion {number} ({slug.replace('_', ' ')}): {verdict}")
