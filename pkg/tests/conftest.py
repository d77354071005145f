import json
from pathlib import Path

import pytest
from hypothesis import settings

from pi1lines.geometry import parse_arrangement

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

# acceptance criterion -> (description, passed); filled by test_acceptance
ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS


@pytest.fixture(scope="session")
def corpus_files():
    return {p.stem: parse_arrangement(p.read_text()) for p in sorted(CORPUS.glob("*.txt"))}


@pytest.fixture(scope="session")
def expected():
    return json.loads((CORPUS / "expected.json").read_text())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        desc, ok = ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {desc}")
