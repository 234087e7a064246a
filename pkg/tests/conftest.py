from __future__ import annotations

import functools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from legmcs.corpus import load_corpus  # noqa: E402
from legmcs.front import load_front  # noqa: E402
from legmcs.report import analyze  # noqa: E402

CORPUS_DIR = Path(__file__).resolve().parents[1] / "corpus"


@functools.lru_cache(maxsize=None)
def corpus():
    return load_corpus(CORPUS_DIR)


@functools.lru_cache(maxsize=None)
def analysis_of(word: str):
    return analyze(load_front(word))


def corpus_names() -> list[str]:
    return [e.name for e in corpus().entries]


def corpus_analysis(name: str):
    return analysis_of(corpus().entry(name).load().word)


@pytest.fixture(params=corpus_names())
def corpus_entry(request):
    return corpus_analysis(request.param)
