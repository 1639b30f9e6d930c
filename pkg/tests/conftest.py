from __future__ import annotations

from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def mcq_exemplar_text() -> str:
    return (FIXTURES / "exemplars" / "mcq.tex").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def scq_exemplar_text() -> str:
    return (FIXTURES / "exemplars" / "scq.tex").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def fib_exemplar_text() -> str:
    return (FIXTURES / "exemplars" / "fib.tex").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return FIXTURES / "corpus"


@pytest.fixture(scope="session")
def corpus_manifest(corpus_dir: Path) -> Path:
    return corpus_dir / "manifest.txt"
