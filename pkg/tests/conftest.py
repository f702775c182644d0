from pathlib import Path

import pytest

from lexsent.knowledge_base import load_knowledge_base_from_paths

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS_DIR = FIXTURES / "corpus"

_criteria = []


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def tiny_kb():
    return load_knowledge_base_from_paths(FIXTURES / "tiny_lexicon.txt")


@pytest.fixture(scope="session")
def mini_kb():
    return load_knowledge_base_from_paths(FIXTURES / "mini_lexicon.txt",
                                          FIXTURES / "mini_intensifiers.csv",
                                          FIXTURES / "mini_negations.txt")


@pytest.fixture(scope="session")
def wsd_kb():
    return load_knowledge_base_from_paths(FIXTURES / "wsd_lexicon.txt")


@pytest.fixture
def criterion():
    """Record an acceptance criterion outcome for the end-of-run summary."""
    def record(number, description, passed, detail=""):
        _criteria.append((number, description, bool(passed), detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed, detail in sorted(_criteria, key=lambda c: str(c[0])):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {description}  {detail}".rstrip())
