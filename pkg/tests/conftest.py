from __future__ import annotations

from pathlib import Path

import pytest

from crashloc.config import Config
from crashloc.corpus import load_corpus
from crashloc.trace import FrameworkMatcher, parse_and_split

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURES = REPO_ROOT / "fixtures"
CRASH_DIR = FIXTURES / "crashes"
CORPUS_PATH = FIXTURES / "corpus" / "synthetic_corpus.jsonl"
APP_MODELS = FIXTURES / "app_models"


@pytest.fixture(scope="session")
def matcher() -> FrameworkMatcher:
    return FrameworkMatcher()


@pytest.fixture(scope="session")
def config() -> Config:
    return Config()


@pytest.fixture(scope="session")
def corpus(matcher):
    return load_corpus(CORPUS_PATH, matcher)


@pytest.fixture(scope="session")
def crash_logs() -> dict[str, str]:
    return {p.name: p.read_text(encoding="utf-8") for p in sorted(CRASH_DIR.glob("*.log"))}


@pytest.fixture(scope="session")
def listing1_report(crash_logs, matcher):
    return parse_and_split(crash_logs["listing1.log"], matcher)


@pytest.fixture(scope="session")
def figure1_report(crash_logs, matcher):
    return parse_and_split(crash_logs["figure1.log"], matcher)


def make_report(
    exception: str = "java.lang.IllegalStateException",
    message: str = "",
    framework: tuple[str, ...] = ("android.app.Activity.performCreate",),
    developer: tuple[str, ...] = ("com.app.demo.Main.onCreate",),
    trailing: tuple[str, ...] = (),
):
    """Build a split CrashReport from qualified frame names."""
    lines = [f"{exception}: {message}" if message else exception]
    for i, name in enumerate(framework + developer + trailing):
        lines.append(f"\tat {name}(Source.java:{10 + i})")
    return parse_and_split("\n".join(lines) + "\n", FrameworkMatcher())
